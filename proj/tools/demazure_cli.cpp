// Command-line front end: dist, verify, wlln, conjecture, render.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dmz/asymptotics.hpp"
#include "dmz/closedform.hpp"
#include "dmz/demazure.hpp"
#include "dmz/io.hpp"
#include "dmz/moments.hpp"
#include "dmz/render.hpp"
#include "dmz/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int m = 1;
  int n = 0;
  int N = 0;
  int first = 0;
  std::string word;
  std::string format;
  std::string out;
  std::string suite = "all";
  int min_N = 1;
  int max_N = 20;
  std::vector<int> N_list;
  std::string kind = "heatmap";
  bool ellipse = false;
  bool labels = false;
};

dmz::HighestWeight highest_weight(const RunConfig& c) {
  try {
    return dmz::HighestWeight(c.m, c.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

dmz::WeylWord word_of(const RunConfig& c) {
  try {
    if (!c.word.empty()) return dmz::WeylWord::parse(c.word);
    return dmz::WeylWord(c.N, c.first);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + c.out);
  f << text;
}

int cmd_dist(const RunConfig& c) {
  const auto hw = highest_weight(c);
  const auto word = word_of(c);
  const auto mu = dmz::weight_distribution(hw, word);
  const std::string format = c.format.empty() ? "csv" : c.format;
  if (format == "csv")
    emit(c, dmz::io::distribution_csv(mu));
  else if (format == "json")
    emit(c, dmz::io::distribution_json(mu, word));
  else if (format == "svg")
    emit(c, dmz::render::heatmap(mu));
  else
    throw UsageError("unknown format " + format);
  return kOk;
}

int cmd_verify(const RunConfig& c) {
  dmz::verify::Options opt;
  opt.min_N = c.min_N;
  opt.max_N = c.max_N;
  if (!c.N_list.empty()) opt.conjecture_lengths = c.N_list;
  dmz::verify::Suite suite;
  try {
    suite = dmz::verify::parse_suite(c.suite);
    if (opt.min_N < 1 || opt.max_N < opt.min_N) throw std::invalid_argument("invalid N range");
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto checks = dmz::verify::run_suite(suite, opt);
  std::size_t failed = 0;
  for (const auto& chk : checks) {
    std::cout << chk.line() << '\n';
    failed += !chk.pass();
  }
  std::cerr << checks.size() - failed << '/' << checks.size() << " checks passed\n";
  return failed == 0 ? kOk : kFailed;
}

int cmd_wlln(const RunConfig& c) {
  const auto hw = highest_weight(c);
  if (c.N_list.empty()) throw UsageError("--N-list is required");
  dmz::WllnSeries series;
  try {
    series = dmz::wlln_series(hw, c.N_list, c.first);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(c, dmz::io::summaries_csv(series.summaries));
  bool ok = series.var_degree_decreasing && series.var_finweight_decreasing;
  if (hw.level() == 1) ok = ok && series.mean_degree_near_limit;
  if (!ok) std::cerr << "diagnostics failed: rescaled variances not strictly decreasing or mean off limit\n";
  return ok ? kOk : kFailed;
}

int cmd_conjecture(const RunConfig& c) {
  if (c.n != 0) throw UsageError("conjecture sweeps use m*Lambda_0 only (--n 0)");
  const auto hw = highest_weight(c);
  const std::vector<int> lengths = c.N_list.empty() ? std::vector<int>{2, 4, 6, 8, 10} : c.N_list;
  dmz::ConjectureReport report;
  try {
    report = dmz::conjecture_check(hw.level(), lengths);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(c, dmz::io::fit_report_json(report));
  if (!report.held_out_ok) {
    std::cerr << "not cubic on sampled range:";
    for (std::size_t i = 4; i < report.samples.size(); ++i)
      if (report.fit(dmz::Rational(report.samples[i].N)) != report.samples[i].var_degree)
        std::cerr << ' ' << report.samples[i].N;
    std::cerr << '\n';
  }
  const bool tabulated = dmz::variance_table_row(hw.level()).has_value();
  return report.held_out_ok && (!tabulated || report.table_match()) && report.max_degree_match ? kOk : kFailed;
}

int cmd_render(const RunConfig& c) {
  const auto hw = highest_weight(c);
  const auto word = word_of(c);
  if (c.kind == "histogram" && hw == dmz::HighestWeight::fundamental(0) && word.first() == 0 &&
      word.length() % 2 == 0) {
    // Level 1 degree marginal straight from the q-binomial sum.
    const auto marginal = dmz::level1_degree_marginal(word.length());
    std::vector<std::pair<std::int64_t, dmz::Integer>> bars;
    for (std::size_t d = 0; d < marginal.coeffs.size(); ++d)
      if (marginal.coeffs[d] != 0) bars.emplace_back(static_cast<std::int64_t>(d), marginal.coeffs[d]);
    emit(c, dmz::render::degree_histogram(bars));
    return kOk;
  }
  const auto mu = dmz::weight_distribution(hw, word);
  if (c.kind == "heatmap") {
    dmz::render::HeatmapOptions opt;
    opt.labels = c.labels;
    if (c.ellipse) {
      const auto X = dmz::Functional::diff();
      const auto A = dmz::Functional::a();
      const dmz::PlanePoint center{dmz::expectation(mu, X), dmz::expectation(mu, A)};
      try {
        opt.overlay.emplace(center, dmz::covariance_matrix(mu, X, A));
      } catch (const std::domain_error& e) {
        std::cerr << "skipping ellipse: " << e.what() << '\n';
      }
    }
    emit(c, dmz::render::heatmap(mu, opt));
  } else if (c.kind == "histogram") {
    emit(c, dmz::render::degree_histogram(mu));
  } else if (c.kind == "rescaled") {
    emit(c, dmz::render::rescaled_plot(mu));
  } else {
    throw UsageError("unknown render kind " + c.kind);
  }
  return kOk;
}

void add_weight_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--m", c.m, "coefficient of Lambda_0")->capture_default_str();
  sub->add_option("--n", c.n, "coefficient of Lambda_1")->capture_default_str();
}

void add_word_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--N", c.N, "word length")->check(CLI::NonNegativeNumber)->capture_default_str();
  sub->add_option("--first", c.first, "first (rightmost) generator")->check(CLI::IsMember({0, 1}))->capture_default_str();
  sub->add_option("--word", c.word, "alternating word such as 0101 (overrides --N/--first)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight distributions of Demazure modules of affine sl2"};
  app.require_subcommand(1);
  RunConfig c;

  auto* dist = app.add_subcommand("dist", "write a weight distribution");
  add_weight_flags(dist, c);
  add_word_flags(dist, c);
  dist->add_option("--format", c.format, "csv|json|svg")->check(CLI::IsMember({"csv", "json", "svg"}));
  dist->add_option("--out", c.out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "check the moment identities exactly");
  verify->add_option("--suite", c.suite, "all|sanderson|palindrome|stretch|recurrence|covariance|conjecture")
      ->capture_default_str();
  verify->add_option("--min-N", c.min_N)->capture_default_str();
  verify->add_option("--max-N", c.max_N)->capture_default_str();
  verify->add_option("--N-list", c.N_list, "even lengths for the conjecture suite")->delimiter(',');

  auto* wlln = app.add_subcommand("wlln", "rescaled means and variances along a sweep");
  add_weight_flags(wlln, c);
  wlln->add_option("--first", c.first)->check(CLI::IsMember({0, 1}));
  wlln->add_option("--N-list", c.N_list, "increasing word lengths")->delimiter(',')->required();
  wlln->add_option("--out", c.out);

  auto* conj = app.add_subcommand("conjecture", "fit the degree variance of m*Lambda_0 by a cubic");
  add_weight_flags(conj, c);
  conj->add_option("--N-list", c.N_list, "at least five even lengths")->delimiter(',');
  conj->add_option("--out", c.out);

  auto* rend = app.add_subcommand("render", "write an SVG figure");
  add_weight_flags(rend, c);
  add_word_flags(rend, c);
  rend->add_option("--kind", c.kind, "heatmap|histogram|rescaled")->capture_default_str();
  rend->add_flag("--ellipse", c.ellipse, "overlay the covariance ellipse on the heatmap");
  rend->add_flag("--labels", c.labels, "print multiplicities in the heatmap cells");
  rend->add_option("--out", c.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*dist) return cmd_dist(c);
    if (*verify) return cmd_verify(c);
    if (*wlln) return cmd_wlln(c);
    if (*conj) return cmd_conjecture(c);
    if (*rend) return cmd_render(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
