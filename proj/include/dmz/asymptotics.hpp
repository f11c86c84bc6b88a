#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dmz/demazure.hpp"
#include "dmz/moments.hpp"

namespace dmz {

/// Distribution normalized to mass 1 and rescaled so that its support just
/// fits into [0,1] x [-1,1]: degree divided by its support maximum, finite
/// weight by its largest absolute value.
struct RescaledSummary {
  int N = 0;
  int level = 0;
  std::int64_t max_degree = 0;
  std::int64_t max_abs_finite_weight = 0;
  Rational mean_degree_scaled;
  Rational mean_finweight_scaled;
  Rational var_degree_scaled;
  Rational var_finweight_scaled;
};

RescaledSummary rescaled_summary(const WeightDistribution& mu, int N);
RescaledSummary rescaled_summary(const HighestWeight& hw, const WeylWord& word);

struct WllnSeries {
  std::vector<RescaledSummary> summaries;
  bool var_degree_decreasing = true;
  bool var_finweight_decreasing = true;
  /// |mean_degree_scaled - 1/2| <= 1/N at every point; only meaningful at level 1.
  bool mean_degree_near_limit = true;
};

/// Summaries of w_{N,first} for each N in the increasing list, sharing one sweep.
WllnSeries wlln_series(const HighestWeight& hw, const std::vector<int>& lengths, int first = 0);

/// Polynomial c0 + c1 N + c2 N^2 + c3 N^3 with exact coefficients.
struct PolynomialFit {
  std::array<Rational, 4> coeffs{};

  Rational operator()(const Rational& N) const;
  friend bool operator==(const PolynomialFit&, const PolynomialFit&) = default;
};

/// Exact Lagrange interpolation through degree + 1 points (degree <= 3).
PolynomialFit fit_polynomial(const std::vector<std::pair<int, Rational>>& points, int degree = 3);

/// Conjectured degree variance N(N-1)(x N + y)/z for the level-m modules
/// V_{(s1 s0)^k}(m Lambda_0), together with the support maximum m N^2 / 4.
struct VarianceTableRow {
  int level;
  int x;
  int y;
  int z;

  PolynomialFit polynomial() const;
};

const std::vector<VarianceTableRow>& variance_table();
std::optional<VarianceTableRow> variance_table_row(int level);

class NotCubicError : public std::runtime_error {
 public:
  explicit NotCubicError(std::vector<int> witnesses);
  const std::vector<int>& witnesses() const { return witnesses_; }

 private:
  std::vector<int> witnesses_;
};

struct ConjectureSample {
  int N;
  Rational var_degree;
  std::int64_t max_degree;
  bool max_degree_ok;
};

struct ConjectureReport {
  int level = 0;
  std::vector<ConjectureSample> samples;
  PolynomialFit fit;
  bool held_out_ok = false;
  bool coefficients_match = false;
  bool max_degree_match = false;

  bool table_match() const { return held_out_ok && coefficients_match; }
};

/// Var(-d) for V_{(s1 s0)^{N/2}}(m Lambda_0) at each even N; a cubic is fitted
/// on the first four values and checked on the rest. With throw_on_mismatch
/// a held-out point off the cubic raises NotCubicError.
ConjectureReport conjecture_check(int level, const std::vector<int>& lengths, bool throw_on_mismatch = false);

/// Fit and table comparison for precomputed samples (at least five).
ConjectureReport evaluate_samples(int level, std::vector<ConjectureSample> samples, bool throw_on_mismatch = false);

}  // namespace dmz
