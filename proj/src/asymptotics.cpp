#include "dmz/asymptotics.hpp"

#include <algorithm>
#include <set>

namespace dmz {

RescaledSummary rescaled_summary(const WeightDistribution& mu, int N) {
  if (mu.empty()) throw EmptyDistribution();
  const HighestWeight& hw = mu.highest_weight();
  RescaledSummary s;
  s.N = N;
  s.level = hw.level();
  for (const auto& [p, c] : mu) {
    s.max_degree = std::max(s.max_degree, degree(p));
    const std::int64_t fw = finite_weight(hw, p);
    s.max_abs_finite_weight = std::max(s.max_abs_finite_weight, fw < 0 ? -fw : fw);
  }
  const CovarianceMatrix cov = covariance_matrix(mu);
  const Rational deg_scale = s.max_degree > 0 ? Rational(s.max_degree) : Rational(1);
  const Rational fin_scale = s.max_abs_finite_weight > 0 ? Rational(s.max_abs_finite_weight) : Rational(1);
  s.mean_degree_scaled = expectation(mu, Functional::degree()) / deg_scale;
  s.mean_finweight_scaled = expectation(mu, Functional::finite_weight(hw)) / fin_scale;
  s.var_degree_scaled = cov(0, 0) / (deg_scale * deg_scale);
  s.var_finweight_scaled = cov(1, 1) / (fin_scale * fin_scale);
  return s;
}

RescaledSummary rescaled_summary(const HighestWeight& hw, const WeylWord& word) {
  if (word.length() < 1) throw std::invalid_argument("rescaling needs a word of length >= 1");
  return rescaled_summary(weight_distribution(hw, word), word.length());
}

WllnSeries wlln_series(const HighestWeight& hw, const std::vector<int>& lengths, int first) {
  if (lengths.empty()) throw std::invalid_argument("length list must be nonempty");
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] < 1) throw std::invalid_argument("word lengths must be >= 1");
    if (i > 0 && lengths[i] <= lengths[i - 1]) throw std::invalid_argument("length list must be increasing");
  }
  WllnSeries out;
  DemazureSweep sweep(hw, first);
  for (int N : lengths) out.summaries.push_back(rescaled_summary(sweep.advance_to(N), N));
  for (std::size_t i = 0; i < out.summaries.size(); ++i) {
    const auto& s = out.summaries[i];
    if (i > 0) {
      const auto& prev = out.summaries[i - 1];
      out.var_degree_decreasing &= s.var_degree_scaled < prev.var_degree_scaled;
      out.var_finweight_decreasing &= s.var_finweight_scaled < prev.var_finweight_scaled;
    }
    out.mean_degree_near_limit &= mp::abs(s.mean_degree_scaled - Rational(1, 2)) <= Rational(1, s.N);
  }
  return out;
}

Rational PolynomialFit::operator()(const Rational& N) const {
  Rational v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * N + *it;
  return v;
}

PolynomialFit fit_polynomial(const std::vector<std::pair<int, Rational>>& points, int degree) {
  if (degree < 0 || degree > 3) throw std::invalid_argument("fit degree must be in 0..3");
  if (points.size() != static_cast<std::size_t>(degree) + 1)
    throw std::invalid_argument("fit needs exactly degree + 1 points");
  std::set<int> seen;
  for (const auto& [n, v] : points)
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate N in fit points");

  // Sum of value_i * prod_{j != i} (N - n_j) / (n_i - n_j), expanded in the
  // monomial basis.
  PolynomialFit fit;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      const Rational root = points[j].first;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= root * basis[t];
      }
      basis = std::move(next);
      denom *= Rational(points[i].first) - root;
    }
    for (std::size_t t = 0; t < basis.size(); ++t) fit.coeffs[t] += points[i].second * basis[t] / denom;
  }
  return fit;
}

PolynomialFit VarianceTableRow::polynomial() const {
  // N(N-1)(xN + y)/z = (x N^3 + (y - x) N^2 - y N) / z
  PolynomialFit p;
  p.coeffs = {Rational(0), Rational(-y, z), Rational(y - x, z), Rational(x, z)};
  return p;
}

const std::vector<VarianceTableRow>& variance_table() {
  static const std::vector<VarianceTableRow> rows = {
      {2, 4, 11, 81},
      {3, 34, 97, 384},
      {4, 52, 151, 375},
  };
  return rows;
}

std::optional<VarianceTableRow> variance_table_row(int level) {
  for (const auto& r : variance_table())
    if (r.level == level) return r;
  return std::nullopt;
}

NotCubicError::NotCubicError(std::vector<int> witnesses)
    : std::runtime_error("not cubic on sampled range"), witnesses_(std::move(witnesses)) {}

ConjectureReport conjecture_check(int level, const std::vector<int>& lengths, bool throw_on_mismatch) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  std::set<int> distinct(lengths.begin(), lengths.end());
  if (distinct.size() != lengths.size() || lengths.size() < 5)
    throw std::invalid_argument("need at least 5 distinct lengths");
  for (int N : lengths)
    if (N < 2 || N % 2 != 0) throw std::invalid_argument("lengths must be positive and even");

  const HighestWeight hw(level, 0);
  std::vector<int> sorted = lengths;
  std::sort(sorted.begin(), sorted.end());

  DemazureSweep sweep(hw, 0);
  std::vector<ConjectureSample> by_n;
  for (int N : sorted) {
    const WeightDistribution& mu = sweep.advance_to(N);
    std::int64_t max_deg = 0;
    for (const auto& [p, c] : mu) max_deg = std::max(max_deg, degree(p));
    const bool ok = 4 * max_deg == static_cast<std::int64_t>(level) * N * N;
    by_n.push_back({N, variance(mu, Functional::degree()), max_deg, ok});
  }
  // Report in the caller's order; the first four entries define the fit.
  std::vector<ConjectureSample> samples;
  for (int N : lengths)
    samples.push_back(*std::find_if(by_n.begin(), by_n.end(), [&](const auto& s) { return s.N == N; }));
  return evaluate_samples(level, std::move(samples), throw_on_mismatch);
}

ConjectureReport evaluate_samples(int level, std::vector<ConjectureSample> samples, bool throw_on_mismatch) {
  if (samples.size() < 5) throw std::invalid_argument("need at least 5 samples");
  ConjectureReport report;
  report.level = level;
  report.samples = std::move(samples);

  std::vector<std::pair<int, Rational>> fit_points;
  for (std::size_t i = 0; i < 4; ++i) fit_points.emplace_back(report.samples[i].N, report.samples[i].var_degree);
  report.fit = fit_polynomial(fit_points, 3);

  std::vector<int> witnesses;
  for (std::size_t i = 4; i < report.samples.size(); ++i)
    if (report.fit(Rational(report.samples[i].N)) != report.samples[i].var_degree)
      witnesses.push_back(report.samples[i].N);
  report.held_out_ok = witnesses.empty();
  if (!witnesses.empty() && throw_on_mismatch) throw NotCubicError(std::move(witnesses));

  if (auto row = variance_table_row(level)) report.coefficients_match = report.fit == row->polynomial();
  report.max_degree_match =
      std::all_of(report.samples.begin(), report.samples.end(), [](const auto& s) { return s.max_degree_ok; });
  return report;
}

}  // namespace dmz
