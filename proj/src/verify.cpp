#include "dmz/verify.hpp"

#include <set>
#include <stdexcept>

#include "dmz/asymptotics.hpp"
#include "dmz/closedform.hpp"
#include "dmz/demazure.hpp"
#include "dmz/moments.hpp"

namespace dmz::verify {

std::string Check::line() const {
  return std::string(pass() ? "PASS " : "FAIL ") + identity + " N=" + std::to_string(N) + " lhs=" + to_string(lhs) +
         " rhs=" + to_string(rhs);
}

namespace {

constexpr std::string_view kSuiteNames[] = {"all", "sanderson", "palindrome", "stretch",
                                            "recurrence", "covariance", "conjecture"};

void require_range(const Options& opt) {
  if (opt.min_N < 1 || opt.max_N < opt.min_N) throw std::invalid_argument("invalid N range");
}

/// mu_N for N = 0..max_N of V_{w_{N,first}}(hw).
std::vector<WeightDistribution> sweep_all(const HighestWeight& hw, int first, int max_N) {
  std::vector<WeightDistribution> out;
  DemazureSweep sweep(hw, first);
  out.push_back(sweep.current());
  for (int N = 1; N <= max_N; ++N) out.push_back(sweep.advance());
  return out;
}

std::vector<WeightDistribution> level1(int max_N) { return sweep_all(HighestWeight::fundamental(0), 0, max_N); }

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

const Functional A = Functional::a();
const Functional B = Functional::b();
const Functional X = Functional::diff();
const Functional X2 = X * X;

}  // namespace

Suite parse_suite(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kSuiteNames); ++i)
    if (kSuiteNames[i] == name) return static_cast<Suite>(i);
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

std::string_view suite_name(Suite s) { return kSuiteNames[static_cast<std::size_t>(s)]; }

std::vector<Check> sanderson_checks(const Options& opt) {
  require_range(opt);
  const auto mus = level1(opt.max_N);
  std::vector<Check> out;
  for (int N = opt.min_N; N <= opt.max_N; ++N) {
    const auto& mu = mus[N];
    const auto marg = marginal(mu, X);
    std::set<std::int64_t> ts;
    for (const auto& [t, c] : marg) ts.insert(static_cast<std::int64_t>(mp::numerator(t)));
    for (int k = 0; k <= N; ++k) ts.insert(k - N / 2);
    for (std::int64_t t : ts) {
      auto it = marg.find(Rational(t));
      const Integer lhs = it == marg.end() ? Integer(0) : it->second;
      out.push_back({"marginal_binomial[t=" + std::to_string(t) + "]", N, Rational(lhs),
                     Rational(binomial(N, static_cast<int>(t + N / 2)))});
    }
    out.push_back({"total_mass", N, Rational(total_mass(mu)), Rational(Integer(1) << N)});
    out.push_back({"var_diff", N, variance(mu, X), reference_formula("var_diff", N)});
    out.push_back({"cov_diff_sq_diff", N, covariance(mu, X2, X),
                   N % 2 ? reference_formula("cov_diff_sq_diff_odd", N) : Rational(0)});
  }
  return out;
}

std::vector<Check> palindrome_checks(const Options& opt) {
  require_range(opt);
  const auto mus = level1(opt.max_N);
  std::vector<Check> out;
  for (int N = opt.min_N; N <= opt.max_N; ++N) {
    const auto& mu = mus[N];
    std::size_t symmetric = 0;
    for (const auto& [p, c] : mu) {
      const std::int64_t s = string_symmetry_shift(N, p);
      if (mu.at({p.a + s, p.b + s}) == c) ++symmetric;
    }
    out.push_back({"string_palindrome", N, Rational(symmetric), Rational(mu.size())});

    const auto closed = level1_distribution(N);
    std::set<LatticePoint> support;
    for (const auto& [p, c] : mu) support.insert(p);
    for (const auto& [p, c] : closed) support.insert(p);
    std::size_t agree = 0;
    for (const auto& p : support) agree += mu.at(p) == closed.at(p);
    out.push_back({"closed_form_equivalence", N, Rational(agree), Rational(support.size())});
  }
  return out;
}

std::vector<Check> stretch_checks(const Options& opt) {
  require_range(opt);
  const auto mus = level1(opt.max_N);
  std::vector<Check> out;
  for (int N = opt.min_N; N <= opt.max_N; ++N) {
    const auto& mu = mus[N];
    const bool odd = N % 2 == 1;
    const Rational n(N);
    // Coordinates in which string midpoints lie on Y = X^2 / 2.
    const Functional Xs = odd ? X - Rational(1, 2) : X;
    const Functional Ys = odd ? B - (n * n - 2) / 8 : A - n * n / 8;

    const PlaneMeasure stretched = pushforward(mu, {Xs * Xs, Ys});
    const Functional PX = Functional::a();
    const Functional PY = Functional::b();
    out.push_back({"stretch_identity", N, covariance(mu, Xs * Xs, Ys), covariance(stretched, PX, PY)});
    out.push_back({"stretched_orthogonality", N, covariance(stretched, PX - Rational(2) * PY, PX), Rational(0)});
    if (odd) {
      out.push_back({"intermediate_covariance", N, covariance(mu, X2 - X - Rational(2) * B, X2 - X), Rational(0)});
      out.push_back({"cov_linear_diff_sq", N, covariance(mu, B, X2), reference_formula("cov_b_diff_sq_odd", N)});
      out.push_back({"cov_b_diff", N, covariance(mu, B, X), Rational(0)});
      out.push_back({"cov_b_sq_diff", N, covariance(mu, B * B, X), Rational(0)});
    } else {
      out.push_back({"intermediate_covariance", N, covariance(mu, X2 - Rational(2) * A, X2), Rational(0)});
      out.push_back({"cov_linear_diff_sq", N, covariance(mu, A, X2), reference_formula("cov_a_diff_sq_even", N)});
      out.push_back({"var_diff_sq", N, variance(mu, X2), reference_formula("var_diff_sq_even", N)});
    }
  }
  return out;
}

std::vector<Check> recurrence_checks(const Options& opt) {
  require_range(opt);
  const auto mus = level1(opt.max_N + 1);
  const Functional A2 = A * A;
  const Functional B2 = B * B;
  std::vector<Check> out;
  for (int N = opt.min_N; N <= opt.max_N; ++N) {
    const auto& mu = mus[N];
    const auto& next = mus[N + 1];
    if (N % 2 == 1) {
      out.push_back({"partial_step", N, expectation(next, A2),
                     expectation(mu, A2) + reference_formula("partial_step_a_sq_odd", N) +
                         Rational(2) * covariance(mu, B, X2)});
      out.push_back({"step", N, expectation(next, A2), expectation(mu, A2) + reference_formula("step_a_sq_odd", N)});
      out.push_back({"cross_step", N, expectation(next, A2),
                     expectation(mu, B2) + reference_formula("cross_step_a_sq_odd", N)});
      out.push_back({"var_degree", N, variance(mu, B), reference_formula("var_degree", N)});
      out.push_back({"second_moment", N, expectation(mu, B2), reference_formula("second_moment_b_odd", N)});
      out.push_back({"expectation", N, expectation(mu, B), reference_formula("expected_b_odd", N)});
    } else {
      out.push_back({"partial_step", N, expectation(next, B2),
                     expectation(mu, B2) + reference_formula("partial_step_b_sq_even", N) +
                         Rational(2) * covariance(mu, A, X2)});
      out.push_back({"step", N, expectation(next, B2), expectation(mu, B2) + reference_formula("step_b_sq_even", N)});
      out.push_back({"cross_step", N, expectation(next, B2),
                     expectation(mu, A2) + reference_formula("cross_step_b_sq_even", N)});
      out.push_back({"var_degree", N, variance(mu, A), reference_formula("var_degree", N)});
      out.push_back({"second_moment", N, expectation(mu, A2), reference_formula("second_moment_a_even", N)});
      out.push_back({"expectation", N, expectation(mu, A), reference_formula("expected_degree_even", N)});
    }
  }
  return out;
}

std::vector<Check> covariance_checks(const Options& opt) {
  require_range(opt);
  std::vector<Check> out;
  for (int j = 0; j < 2; ++j) {
    const auto mus = sweep_all(HighestWeight::fundamental(j), j, opt.max_N);
    const std::string tag = "covariance_j" + std::to_string(j);
    for (int N = opt.min_N; N <= opt.max_N; ++N) {
      const CovarianceMatrix m = covariance_matrix(mus[N]);
      const bool same_parity = N % 2 == j;
      const Rational n(N);
      const Rational dd = reference_formula(same_parity ? "var_degree" : "var_degree_shifted", N);
      const Rational df = same_parity ? Rational(0) : n / 2;
      out.push_back({tag + "[deg,deg]", N, m(0, 0), dd});
      out.push_back({tag + "[deg,fin]", N, m(0, 1), df});
      out.push_back({tag + "[fin,deg]", N, m(1, 0), df});
      out.push_back({tag + "[fin,fin]", N, m(1, 1), n});
    }
  }
  return out;
}

std::vector<Check> conjecture_checks(const Options& opt) {
  std::vector<Check> out;
  for (int level : opt.conjecture_levels) {
    const auto row = variance_table_row(level);
    if (!row) throw std::invalid_argument("no tabulated variance for level " + std::to_string(level));
    const ConjectureReport report = conjecture_check(level, opt.conjecture_lengths);
    const PolynomialFit table = row->polynomial();
    const std::string tag = "m" + std::to_string(level);
    for (std::size_t i = 0; i < report.samples.size(); ++i) {
      const auto& s = report.samples[i];
      const std::string kind = i < 4 ? "fit_point_" : "held_out_";
      out.push_back({kind + tag, s.N, s.var_degree, table(Rational(s.N))});
      out.push_back({"max_degree_" + tag, s.N, Rational(s.max_degree), Rational(level * s.N * s.N, 4)});
    }
    for (std::size_t c = 0; c < 4; ++c)
      out.push_back({"fit_coeff_" + tag + "[c" + std::to_string(c) + "]", report.samples[3].N, report.fit.coeffs[c],
                     table.coeffs[c]});
  }
  return out;
}

std::vector<Check> run_suite(Suite suite, const Options& opt) {
  switch (suite) {
    case Suite::sanderson: return sanderson_checks(opt);
    case Suite::palindrome: return palindrome_checks(opt);
    case Suite::stretch: return stretch_checks(opt);
    case Suite::recurrence: return recurrence_checks(opt);
    case Suite::covariance: return covariance_checks(opt);
    case Suite::conjecture: return conjecture_checks(opt);
    case Suite::all: break;
  }
  std::vector<Check> out;
  for (Suite s : {Suite::sanderson, Suite::palindrome, Suite::stretch, Suite::recurrence, Suite::covariance,
                  Suite::conjecture}) {
    auto part = run_suite(s, opt);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass()) return false;
  return true;
}

}  // namespace dmz::verify
