#include "dmz/moments.hpp"

#include <functional>

namespace dmz {

bool is_positive_semidefinite(const CovarianceMatrix& m) {
  if (m(0, 1) != m(1, 0)) return false;
  return m(0, 0) >= 0 && m(1, 1) >= 0 && m.determinant() >= 0;
}

namespace {

// Sum of mass * f over the support, with f scaled to integer coefficients.
Rational weighted_mean(const WeightDistribution& mu, const Functional& f) {
  const auto [terms, den] = f.integral_form();
  Integer total = 0;
  Integer acc = 0;
  for (const auto& [p, c] : mu) {
    total += c;
    Integer value = 0;
    for (const auto& [e, coeff] : terms) {
      Integer t = coeff;
      if (e.first) t *= power(Integer(p.a), e.first);
      if (e.second) t *= power(Integer(p.b), e.second);
      value += t;
    }
    acc += c * value;
  }
  if (total == 0) throw EmptyDistribution();
  return Rational(acc) / (Rational(total) * Rational(den));
}

}  // namespace

Rational expectation(const WeightDistribution& mu, const Functional& f) { return weighted_mean(mu, f); }

Rational covariance(const WeightDistribution& mu, const Functional& f, const Functional& g) {
  return expectation(mu, f * g) - expectation(mu, f) * expectation(mu, g);
}

Rational variance(const WeightDistribution& mu, const Functional& f) { return covariance(mu, f, f); }

CovarianceMatrix covariance_matrix(const WeightDistribution& mu, const Functional& f, const Functional& g) {
  CovarianceMatrix m;
  const Rational ef = expectation(mu, f);
  const Rational eg = expectation(mu, g);
  m(0, 0) = expectation(mu, f * f) - ef * ef;
  m(0, 1) = expectation(mu, f * g) - ef * eg;
  m(1, 0) = m(0, 1);
  m(1, 1) = expectation(mu, g * g) - eg * eg;
  return m;
}

CovarianceMatrix covariance_matrix(const WeightDistribution& mu) {
  return covariance_matrix(mu, Functional::degree(), Functional::finite_weight(mu.highest_weight()));
}

PlaneMeasure pushforward(const WeightDistribution& mu, const CoordinateMap& map) {
  PlaneMeasure out;
  for (const auto& [p, c] : mu) out[map(p)] += c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Rational expectation(const PlaneMeasure& mu, const Functional& f) {
  Integer total = 0;
  Rational acc = 0;
  for (const auto& [pt, c] : mu) {
    total += c;
    acc += Rational(c) * f(pt.first, pt.second);
  }
  if (total == 0) throw EmptyDistribution();
  return acc / Rational(total);
}

Rational covariance(const PlaneMeasure& mu, const Functional& f, const Functional& g) {
  return expectation(mu, f * g) - expectation(mu, f) * expectation(mu, g);
}

Rational variance(const PlaneMeasure& mu, const Functional& f) { return covariance(mu, f, f); }

namespace {

struct Formula {
  ReferenceFormulaInfo info;
  std::function<Rational(const Rational&)> eval;
};

const std::vector<Formula>& formulas() {
  using R = Rational;
  static const std::vector<Formula> table = {
      {{"var_degree", "N(N-1)(2N+5)/96", -1}, [](const R& n) { return n * (n - 1) * (2 * n + 5) / 96; }},
      {{"var_degree_shifted", "N(N-1)(2N+5)/96 + N/4", -1},
       [](const R& n) { return n * (n - 1) * (2 * n + 5) / 96 + n / 4; }},
      {{"var_diff", "N/4", -1}, [](const R& n) { return n / 4; }},
      {{"cov_diff_sq_diff_odd", "N/4", 1}, [](const R& n) { return n / 4; }},
      {{"var_diff_sq_even", "N(N-1)/8", 0}, [](const R& n) { return n * (n - 1) / 8; }},
      {{"cov_b_diff_sq_odd", "N(N-1)/16", 1}, [](const R& n) { return n * (n - 1) / 16; }},
      {{"cov_a_diff_sq_even", "N(N-1)/16", 0}, [](const R& n) { return n * (n - 1) / 16; }},
      {{"partial_step_a_sq_odd", "N(N^2+N+2)/16", 1}, [](const R& n) { return n * (n * n + n + 2) / 16; }},
      {{"partial_step_b_sq_even", "N^2(N+1)/16", 0}, [](const R& n) { return n * n * (n + 1) / 16; }},
      {{"step_a_sq_odd", "N^2(N+3)/16", 1}, [](const R& n) { return n * n * (n + 3) / 16; }},
      {{"step_b_sq_even", "N(N^2+3N-2)/16", 0}, [](const R& n) { return n * (n * n + 3 * n - 2) / 16; }},
      {{"cross_step_a_sq_odd", "N(N+2)(N+3)/16", 1}, [](const R& n) { return n * (n + 2) * (n + 3) / 16; }},
      {{"cross_step_b_sq_even", "N(N+1)(N+2)/16", 0}, [](const R& n) { return n * (n + 1) * (n + 2) / 16; }},
      {{"second_moment_a_even", "N(3N^3+10N^2+9N-10)/192", 0},
       [](const R& n) { return n * (3 * n * n * n + 10 * n * n + 9 * n - 10) / 192; }},
      {{"second_moment_b_odd", "(N-1)(3N^3+13N^2+10N-12)/192", 1},
       [](const R& n) { return (n - 1) * (3 * n * n * n + 13 * n * n + 10 * n - 12) / 192; }},
      {{"expected_b_odd", "(N-1)(N+2)/8", 1}, [](const R& n) { return (n - 1) * (n + 2) / 8; }},
      {{"expected_degree_even", "N(N+1)/8", 0}, [](const R& n) { return n * (n + 1) / 8; }},
      {{"max_degree_even", "N^2/4", 0}, [](const R& n) { return n * n / 4; }},
  };
  return table;
}

}  // namespace

const std::vector<ReferenceFormulaInfo>& reference_formula_catalog() {
  static const std::vector<ReferenceFormulaInfo> infos = [] {
    std::vector<ReferenceFormulaInfo> v;
    for (const auto& f : formulas()) v.push_back(f.info);
    return v;
  }();
  return infos;
}

Rational reference_formula(std::string_view name, int N) {
  for (const auto& f : formulas()) {
    if (f.info.name != name) continue;
    if (N < 1) throw std::domain_error("reference formula requires N >= 1");
    if (f.info.parity >= 0 && N % 2 != f.info.parity)
      throw std::domain_error("parity violation for formula " + f.info.name);
    return f.eval(Rational(N));
  }
  throw std::invalid_argument("unknown formula: " + std::string(name));
}

}  // namespace dmz
