#include <doctest.h>

#include <map>

#include "dmz/closedform.hpp"
#include "fig3.hpp"

using namespace dmz;

namespace {

// Lattice paths from (0,0) to (k, N-k) with unit steps; the area under the
// path is the sum of the heights at which the horizontal steps are taken.
QPolynomial paths_by_area(int N, int k) {
  if (k < 0 || k > N) return {};
  std::vector<Integer> coeffs(static_cast<std::size_t>(k) * (N - k) + 1, Integer(0));
  for (unsigned mask = 0; mask < (1u << N); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    int height = 0;
    int area = 0;
    for (int s = 0; s < N; ++s) {
      if (mask & (1u << s))
        area += height;
      else
        ++height;
    }
    coeffs[area] += 1;
  }
  return {coeffs};
}

Integer binomial(int n, int k) {
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("gaussian binomial examples") {
  CHECK(gaussian_binomial(2, 1).coeffs == std::vector<Integer>{1, 1});
  CHECK(gaussian_binomial(4, 2).coeffs == std::vector<Integer>{1, 1, 2, 1, 1});
  CHECK(gaussian_binomial(7, 0).coeffs == std::vector<Integer>{1});
  CHECK(gaussian_binomial(5, -1).is_zero());
  CHECK(gaussian_binomial(5, 6).is_zero());
}

TEST_CASE("q-Pascal agrees with lattice path enumeration") {
  for (int N = 0; N <= 12; ++N)
    for (int k = -1; k <= N + 1; ++k) CHECK(gaussian_binomial(N, k) == paths_by_area(N, k));
}

TEST_CASE("gaussian binomial shape") {
  for (int N = 0; N <= 60; ++N) {
    for (int k = 0; k <= N; ++k) {
      const auto g = gaussian_binomial(N, k);
      REQUIRE(g.coeffs.size() == static_cast<std::size_t>(k) * (N - k) + 1);
      CHECK(g.is_palindromic());
      CHECK(g.at_one() == binomial(N, k));
      for (const auto& c : g.coeffs) CHECK(c > 0);
    }
  }
}

TEST_CASE("closed form small cases") {
  const auto mu2 = level1_distribution(2);
  CHECK(mu2.size() == 4);
  for (LatticePoint p : {LatticePoint{0, 0}, LatticePoint{1, 0}, LatticePoint{1, 1}, LatticePoint{1, 2}})
    CHECK(mu2.at(p) == 1);

  // Term k = 3: i = 0 lands on (9, 9), i = 9 on the highest weight.
  const auto mu6 = level1_distribution(6);
  CHECK(mu6.at({9, 9}) == 1);
  CHECK(mu6.at({0, 0}) == 1);
  for (const auto& cell : fig3::cells) CHECK(mu6.at({cell.a, cell.a - cell.diff}) == cell.mult);
}

TEST_CASE("closed form equals the operator recursion") {
  DemazureSweep sweep(HighestWeight(1, 0), 0);
  CHECK(level1_distribution(0) == sweep.current());
  for (int N = 1; N <= 40; ++N) CHECK(level1_distribution(N) == sweep.advance());
}

TEST_CASE("string symmetry shift") {
  CHECK(string_symmetry_shift(6, {2, 2}) == 5);
  CHECK(string_symmetry_shift(6, {0, 0}) == 9);
  CHECK(string_symmetry_shift(5, {3, 3}) == 0);
  CHECK(string_symmetry_shift(5, {2, 1}) == 4);
  CHECK(string_symmetry_shift(5, {0, 0}) == 6);
}

TEST_CASE("palindromicity") {
  const HighestWeight L0(1, 0);
  const auto mu6 = weight_distribution(L0, WeylWord(6, 0));
  CHECK(palindromicity_check(mu6, 6));
  CHECK(mu6.at({2, 2}) == mu6.at({7, 7}));
  CHECK(palindromicity_check(weight_distribution(L0, WeylWord(1, 0)), 1));

  auto entries = mu6.entries();
  for (auto& [p, c] : entries)
    if (p == LatticePoint{0, 0}) c = 2;
  const auto broken = palindromicity_check(WeightDistribution(L0, entries), 6);
  CHECK_FALSE(broken);
  REQUIRE(broken.witness);
  CHECK(*broken.witness == LatticePoint{0, 0});

  DemazureSweep sweep(L0, 0);
  for (int N = 1; N <= 40; ++N) CHECK(palindromicity_check(sweep.advance(), N));
}

TEST_CASE("degree marginal without the full distribution") {
  DemazureSweep sweep(HighestWeight::fundamental(0), 0);
  for (int N = 0; N <= 30; N += 2) {
    const auto& mu = sweep.advance_to(N);
    const auto fast = level1_degree_marginal(N);
    std::vector<Integer> slow(fast.coeffs.size(), Integer(0));
    for (const auto& [p, c] : mu) {
      REQUIRE(p.a < static_cast<std::int64_t>(slow.size()));
      slow[static_cast<std::size_t>(p.a)] += c;
    }
    CHECK(fast.coeffs == slow);
    CHECK(fast.coeffs.size() == static_cast<std::size_t>(N * N / 4 + 1));
  }
  CHECK_THROWS_AS(level1_degree_marginal(3), std::domain_error);
}
