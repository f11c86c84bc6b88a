#include <doctest.h>

#include "dmz/asymptotics.hpp"

using namespace dmz;

namespace {
const HighestWeight L0(1, 0);
}

TEST_CASE("rescaled summary examples") {
  const auto s20 = rescaled_summary(L0, WeylWord(20, 0));
  CHECK(s20.max_degree == 100);
  CHECK(s20.mean_degree_scaled == Rational(21, 40));
  CHECK(s20.max_abs_finite_weight == 20);
  CHECK(s20.var_finweight_scaled == Rational(1, 20));
  CHECK(s20.mean_finweight_scaled == 0);

  const auto s2 = rescaled_summary(L0, WeylWord(2, 0));
  CHECK(s2.max_degree == 1);
  CHECK(s2.mean_degree_scaled == Rational(3, 4));

  CHECK_THROWS_AS(rescaled_summary(L0, WeylWord(0, 0)), std::invalid_argument);
}

TEST_CASE("rescaled support just fits the rectangle") {
  for (int N = 1; N <= 16; ++N) {
    for (const HighestWeight hw : {HighestWeight(1, 0), HighestWeight(0, 1), HighestWeight(2, 1)}) {
      const auto mu = weight_distribution(hw, WeylWord(N, N % 2));
      const auto s = rescaled_summary(mu, N);
      bool hit_zero = false, hit_one = false, hit_edge = false;
      for (const auto& [p, c] : mu) {
        const Rational x = s.max_degree > 0 ? Rational(degree(p), s.max_degree) : Rational(0);
        const Rational y =
            s.max_abs_finite_weight > 0 ? Rational(finite_weight(hw, p), s.max_abs_finite_weight) : Rational(0);
        CHECK(x >= 0);
        CHECK(x <= 1);
        CHECK(mp::abs(y) <= 1);
        hit_zero |= x == 0;
        hit_one |= x == 1;
        hit_edge |= mp::abs(y) == 1;
      }
      // A trivial distribution has zero scales and nothing to rescale.
      CHECK(hit_zero);
      if (s.max_degree > 0) CHECK(hit_one);
      if (s.max_abs_finite_weight > 0) CHECK(hit_edge);
      CHECK(s.mean_degree_scaled >= 0);
      CHECK(s.mean_degree_scaled <= 1);
      CHECK(mp::abs(s.mean_finweight_scaled) <= 1);
    }
  }
}

TEST_CASE("level-1 scaled mean and variance") {
  const auto series = wlln_series(L0, {2, 4, 6, 8, 10, 20, 30, 40});
  Rational previous = 2;
  for (const auto& s : series.summaries) {
    const Rational n(s.N);
    CHECK(s.mean_degree_scaled == Rational(1, 2) + 1 / (2 * n));
    CHECK(s.mean_degree_scaled < previous);
    previous = s.mean_degree_scaled;
    if (s.N >= 20) CHECK(mp::abs(s.var_degree_scaled * n - Rational(1, 3)) < 1 / n);
  }
  CHECK(series.var_degree_decreasing);
  CHECK(series.var_finweight_decreasing);
  CHECK(series.mean_degree_near_limit);
}

TEST_CASE("wlln series diagnostics") {
  const auto s = wlln_series(L0, {10, 20, 30, 40});
  CHECK(s.summaries.size() == 4);
  CHECK(s.var_degree_decreasing);
  CHECK(wlln_series(L0, {20}).summaries[0].var_finweight_scaled == Rational(1, 20));

  const auto level2 = wlln_series(HighestWeight(2, 0), {8, 12, 16});
  const Rational limit(4, 9);
  for (std::size_t i = 0; i < level2.summaries.size(); ++i) {
    CHECK(level2.summaries[i].mean_degree_scaled > limit);
    if (i > 0) CHECK(level2.summaries[i].mean_degree_scaled < level2.summaries[i - 1].mean_degree_scaled);
  }

  CHECK_THROWS_AS(wlln_series(L0, {}), std::invalid_argument);
  CHECK_THROWS_AS(wlln_series(L0, {10, 10}), std::invalid_argument);
  CHECK_THROWS_AS(wlln_series(L0, {20, 10}), std::invalid_argument);
}

TEST_CASE("polynomial fit") {
  std::vector<std::pair<int, Rational>> pts;
  for (int N : {2, 4, 6, 8}) pts.emplace_back(N, Rational(N * (N - 1) * (2 * N + 5), 96));
  const auto fit = fit_polynomial(pts);
  CHECK(fit.coeffs[0] == 0);
  CHECK(fit.coeffs[1] == Rational(-5, 96));
  CHECK(fit.coeffs[2] == Rational(3, 96));
  CHECK(fit.coeffs[3] == Rational(2, 96));
  for (const auto& [n, v] : pts) CHECK(fit(Rational(n)) == v);

  const auto constant = fit_polynomial({{1, Rational(7)}, {3, Rational(7)}, {4, Rational(7)}, {9, Rational(7)}});
  CHECK(constant.coeffs[0] == 7);
  CHECK(constant.coeffs[1] == 0);
  CHECK(constant.coeffs[2] == 0);
  CHECK(constant.coeffs[3] == 0);
  CHECK(fit_polynomial({{5, Rational(2)}}, 0).coeffs[0] == 2);

  std::vector<std::pair<int, Rational>> m2;
  for (int N : {2, 4, 6, 8}) m2.emplace_back(N, Rational(N * (N - 1) * (4 * N + 11), 81));
  CHECK(fit_polynomial(m2) == variance_table_row(2)->polynomial());

  CHECK_THROWS_AS(fit_polynomial({{1, Rational(1)}, {1, Rational(2)}, {2, Rational(0)}, {3, Rational(0)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit_polynomial({{1, Rational(1)}}), std::invalid_argument);
}

TEST_CASE("conjecture table rows") {
  for (int m : {2, 3, 4}) {
    const auto report = conjecture_check(m, {2, 4, 6, 8, 10});
    CHECK(report.held_out_ok);
    CHECK(report.coefficients_match);
    CHECK(report.table_match());
    CHECK(report.max_degree_match);
  }
  const auto r4 = conjecture_check(4, {2, 4, 6, 8, 10});
  for (const auto& s : r4.samples) CHECK(s.max_degree == s.N * s.N);

  CHECK_THROWS_AS(conjecture_check(2, {2, 4, 6, 8}), std::invalid_argument);
  CHECK_THROWS_AS(conjecture_check(2, {2, 4, 6, 8, 9}), std::invalid_argument);
  CHECK_THROWS_AS(conjecture_check(2, {2, 4, 6, 8, 8}), std::invalid_argument);
}

TEST_CASE("level 1 degree variance is the cubic of the covariance formula") {
  const auto report = conjecture_check(1, {2, 4, 6, 8, 10, 12});
  CHECK(report.held_out_ok);
  CHECK_FALSE(report.coefficients_match);  // no tabulated row for level 1
  CHECK(report.fit.coeffs[3] == Rational(2, 96));
}

TEST_CASE("held-out mismatch is reported with witnesses") {
  const auto report = conjecture_check(5, {2, 4, 6, 8, 10});
  CHECK(report.held_out_ok);
  CHECK_FALSE(report.table_match());

  // N^4 is not cubic: the fit through N = 0..3 misses N = 4 and 5.
  std::vector<ConjectureSample> samples;
  for (int N = 0; N <= 5; ++N) samples.push_back({N, Rational(N * N * N * N), 0, true});
  const auto bad = evaluate_samples(2, samples);
  CHECK_FALSE(bad.held_out_ok);
  CHECK_FALSE(bad.table_match());
  try {
    evaluate_samples(2, samples, true);
    FAIL("expected NotCubicError");
  } catch (const NotCubicError& e) {
    CHECK(std::string(e.what()) == "not cubic on sampled range");
    CHECK(e.witnesses() == std::vector<int>{4, 5});
  }
}
