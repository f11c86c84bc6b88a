#include "dmz/closedform.hpp"

#include <algorithm>
#include <stdexcept>

namespace dmz {

Integer QPolynomial::at_one() const {
  Integer s = 0;
  for (const auto& c : coeffs) s += c;
  return s;
}

bool QPolynomial::is_palindromic() const {
  return std::equal(coeffs.begin(), coeffs.end(), coeffs.rbegin());
}

QPolynomial gaussian_binomial(int N, int k) {
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  if (k < 0 || k > N) return {};
  // Row-by-row q-Pascal triangle; row[i] = [n i]_q.
  std::vector<QPolynomial> row{QPolynomial{{Integer(1)}}};
  for (int n = 1; n <= N; ++n) {
    std::vector<QPolynomial> next(n + 1);
    for (int i = 0; i <= n; ++i) {
      if (i == 0 || i == n) {
        next[i].coeffs = {Integer(1)};
        continue;
      }
      const auto& left = row[i - 1].coeffs;
      const auto& up = row[i].coeffs;
      std::vector<Integer> c(static_cast<std::size_t>(i) * (n - i) + 1, Integer(0));
      for (std::size_t t = 0; t < left.size(); ++t) c[t] += left[t];
      for (std::size_t t = 0; t < up.size(); ++t) c[t + i] += up[t];
      next[i].coeffs = std::move(c);
    }
    row = std::move(next);
  }
  return row[k];
}

WeightDistribution level1_distribution(int N) {
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  const HighestWeight hw = HighestWeight::fundamental(0);
  if (N % 2 == 1) return apply_demazure(0, level1_distribution(N - 1));

  const std::int64_t top = static_cast<std::int64_t>(N) * N / 4;
  std::vector<WeightDistribution::Entry> entries;
  for (int k = 0; k <= N; ++k) {
    const QPolynomial g = gaussian_binomial(N, k);
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
      if (g.coeffs[i] == 0) continue;
      const auto ii = static_cast<std::int64_t>(i);
      entries.emplace_back(LatticePoint{top - ii, top - ii - k + N / 2}, g.coeffs[i]);
    }
  }
  return WeightDistribution(hw, std::move(entries));
}

QPolynomial level1_degree_marginal(int N) {
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  if (N % 2 == 1) throw std::domain_error("degree marginal needs even N");
  std::vector<Integer> prev{Integer(1)};  // G_0
  std::vector<Integer> cur{Integer(2)};   // G_1
  if (N == 0) cur = prev;
  for (int n = 1; n < N; ++n) {
    std::vector<Integer> next(cur.size() > prev.size() + n ? cur.size() : prev.size() + n, Integer(0));
    for (std::size_t t = 0; t < cur.size(); ++t) next[t] = cur[t] * 2;
    for (std::size_t t = 0; t < prev.size(); ++t) {
      next[t + n] += prev[t];
      next[t] -= prev[t];
    }
    while (next.size() > 1 && next.back() == 0) next.pop_back();
    prev = std::move(cur);
    cur = std::move(next);
  }
  // Degree = floor(N^2/4) - (power of q).
  std::reverse(cur.begin(), cur.end());
  return {std::move(cur)};
}

std::int64_t string_symmetry_shift(int N, const LatticePoint& p) {
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  const std::int64_t d = p.diff();
  const std::int64_t n = N;
  if (N % 2 == 0) return n * n / 4 + d * d - 2 * p.a;
  return (n * n - 1) / 4 + d * d - d - 2 * p.b;
}

PalindromeResult palindromicity_check(const WeightDistribution& mu, int N) {
  for (const auto& [p, c] : mu) {
    const std::int64_t s = string_symmetry_shift(N, p);
    if (mu.at({p.a + s, p.b + s}) != c) return {false, p};
  }
  return {};
}

}  // namespace dmz
