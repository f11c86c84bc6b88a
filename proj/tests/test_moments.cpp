#include <doctest.h>

#include <functional>
#include <random>

#include "dmz/moments.hpp"
#include "fig3.hpp"

using namespace dmz;

namespace {

const HighestWeight L0(1, 0);
const Functional A = Functional::a();
const Functional B = Functional::b();
const Functional X = Functional::diff();

WeightDistribution mu(int N, int first = 0, HighestWeight hw = L0) { return weight_distribution(hw, WeylWord(N, first)); }

// Definitional covariance E[(f - Ef)(g - Eg)] over the figure cells.
using CellFn = std::function<Rational(std::int64_t a, std::int64_t b)>;
Rational figure_covariance(const CellFn& f, const CellFn& g) {
  Rational total = 0, ef = 0, eg = 0;
  for (const auto& c : fig3::cells) {
    const std::int64_t b = c.a - c.diff;
    total += c.mult;
    ef += c.mult * f(c.a, b);
    eg += c.mult * g(c.a, b);
  }
  ef /= total;
  eg /= total;
  Rational acc = 0;
  for (const auto& c : fig3::cells) {
    const std::int64_t b = c.a - c.diff;
    acc += c.mult * (f(c.a, b) - ef) * (g(c.a, b) - eg);
  }
  return acc / total;
}

}  // namespace

TEST_CASE("expectation examples") {
  CHECK(expectation(mu(6), A) == Rational(21, 4));
  const Functional f = A * A + Rational(3) * B - Rational(1, 2);
  CHECK(expectation(mu(0), f) == f({0, 0}));
  CHECK(expectation(mu(5), B) == Rational(7, 2));
}

TEST_CASE("covariance examples") {
  CHECK(covariance(mu(6), A, X * X) == Rational(15, 8));
  const Rational brute = figure_covariance([](auto a, auto) { return Rational(a); },
                                           [](auto a, auto b) { return Rational(a - b); });
  CHECK(brute == 0);
  CHECK(covariance(mu(6), A, X) == brute);
  CHECK(covariance(mu(5), B, X) == 0);
}

TEST_CASE("variance examples") {
  CHECK(variance(mu(6), A) == Rational(85, 16));
  CHECK(variance(mu(6), X) == Rational(3, 2));
  CHECK(variance(mu(6), X * X) == Rational(15, 4));
  CHECK(variance(mu(6), A) ==
        figure_covariance([](auto a, auto) { return Rational(a); }, [](auto a, auto) { return Rational(a); }));
}

TEST_CASE("degree-4 functional") {
  const Functional x2 = X * X;
  CHECK((x2 * x2).total_degree() == 4);
  CHECK(variance(mu(8), x2) == Rational(8 * 7, 8));
}

TEST_CASE("covariance matrices") {
  const auto m6 = covariance_matrix(mu(6));
  CHECK(m6(0, 0) == Rational(85, 16));
  CHECK(m6(0, 1) == 0);
  CHECK(m6(1, 0) == 0);
  CHECK(m6(1, 1) == 6);

  const auto m5 = covariance_matrix(mu(5));
  CHECK(m5(0, 0) == Rational(35, 8));
  CHECK(m5(0, 1) == Rational(5, 2));
  CHECK(m5(1, 1) == 5);

  const auto m1 = covariance_matrix(mu(1));
  CHECK(m1(0, 0) == Rational(1, 4));
  CHECK(m1(0, 1) == Rational(1, 2));
  CHECK(m1(1, 1) == 1);
  CHECK(m1.determinant() == 0);
  CHECK(is_positive_semidefinite(m1));

  CovarianceMatrix bad;
  bad << Rational(1), Rational(2), Rational(2), Rational(1);
  CHECK_FALSE(is_positive_semidefinite(bad));
}

TEST_CASE("covariance matrices are positive semidefinite") {
  for (int m = 1; m <= 3; ++m)
    for (int N = 1; N <= 10; ++N) CHECK(is_positive_semidefinite(covariance_matrix(mu(N, N % 2, HighestWeight(m, 1)))));
}

TEST_CASE("empty distribution") {
  const WeightDistribution empty(L0);
  CHECK_THROWS_AS(expectation(empty, A), EmptyDistribution);
  CHECK_THROWS_WITH(covariance(empty, A, B), "empty distribution");
  CHECK_THROWS_AS(covariance_matrix(empty), EmptyDistribution);
  // Signed measure with zero total mass.
  const WeightDistribution cancelled(L0, {{{0, 0}, Integer(1)}, {{1, 0}, Integer(-1)}});
  CHECK_THROWS_AS(expectation(cancelled, A), EmptyDistribution);
}

TEST_CASE("pushforward reproduces the stretched figure") {
  const CoordinateMap q{X * X, A};
  const auto stretched = pushforward(mu(6), q);
  CHECK(stretched.size() == fig3::stretched.size());
  for (const auto& c : fig3::stretched) CHECK(stretched.at({Rational(c.diff_sq), Rational(c.a)}) == c.mult);
  CHECK(stretched.at({Rational(1), Rational(5)}) == 6);
  CHECK(stretched.at({Rational(9), Rational(9)}) == 2);

  const auto identity = pushforward(mu(6), {X, A});
  CHECK(identity.size() == mu(6).size());
  for (const auto& [p, c] : mu(6)) CHECK(identity.at({Rational(p.diff()), Rational(p.a)}) == c);
}

TEST_CASE("stretching identity") {
  for (int N = 1; N <= 12; ++N) {
    const Functional Xs = N % 2 ? X - Rational(1, 2) : X;
    const Functional Y = N % 2 ? B : A;
    const auto img = pushforward(mu(N), {Xs * Xs, Y});
    CHECK(covariance(mu(N), Xs * Xs, Y) == covariance(img, Functional::a(), Functional::b()));
  }
}

TEST_CASE("mirror-symmetric measures have zero covariance") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coord(-8, 8);
  std::uniform_int_distribution<int> mass(1, 9);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    PlaneMeasure m;
    const int points = 1 + trial % 25;
    for (int i = 0; i < points; ++i) {
      const Rational x(coord(rng), den(rng));
      const Rational y(coord(rng), den(rng));
      const Integer w = mass(rng);
      m[{x, y}] += w;
      m[{-x, y}] += w;
    }
    CHECK(covariance(m, Functional::a(), Functional::b()) == 0);
  }
}

TEST_CASE("reference formulas") {
  CHECK(reference_formula("var_degree", 6) == Rational(85, 16));
  CHECK(reference_formula("second_moment_a_even", 6) == Rational(263, 8));
  CHECK(reference_formula("expected_degree_even", 20) == Rational(105, 2));
  CHECK(reference_formula("expected_b_odd", 5) == Rational(7, 2));
  CHECK(reference_formula("cov_a_diff_sq_even", 6) == Rational(15, 8));
  CHECK_THROWS_AS(reference_formula("second_moment_a_even", 5), std::domain_error);
  CHECK_THROWS_AS(reference_formula("no_such_formula", 5), std::invalid_argument);
  CHECK_THROWS_AS(reference_formula("var_degree", 0), std::domain_error);
  CHECK(reference_formula_catalog().size() >= 17);
}
