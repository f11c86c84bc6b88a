#include "dmz/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace dmz::render {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }
double to_double(const Integer& z) { return z.convert_to<double>(); }

std::string svg_open(double width, double height) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  return os.str();
}

std::string gray(double shade) {
  const int v = static_cast<int>(std::lround(255.0 * (1.0 - shade)));
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", v, v, v);
  return buf;
}

void require_nonempty(const WeightDistribution& mu) {
  if (mu.empty()) throw EmptyDistribution();
}

}  // namespace

Ellipse::Ellipse(PlanePoint center, CovarianceMatrix sigma) : center_(std::move(center)), sigma_(std::move(sigma)) {
  if (sigma_(0, 1) != sigma_(1, 0)) throw std::invalid_argument("covariance matrix must be symmetric");
  if (sigma_.determinant() <= 0 || sigma_(0, 0) <= 0) throw std::domain_error("degenerate covariance");
}

Eigen::Matrix2d Ellipse::matrix_double() const {
  Eigen::Matrix2d m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = to_double(sigma_(i, j));
  return m;
}

Eigen::Vector2d Ellipse::center_double() const { return {to_double(center_.first), to_double(center_.second)}; }

Eigen::Vector2d Ellipse::semi_axes() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(matrix_double());
  return solver.eigenvalues().cwiseSqrt();
}

std::vector<Eigen::Vector2d> ellipse_points(const Ellipse& e, int samples) {
  if (samples < 3) throw std::invalid_argument("ellipse needs at least 3 samples");
  // With Sigma = L L^T the unit circle maps onto x^T Sigma^{-1} x = 1.
  const Eigen::Matrix2d L = e.matrix_double().llt().matrixL();
  const Eigen::Vector2d c = e.center_double();
  std::vector<Eigen::Vector2d> pts;
  pts.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double t = 2.0 * std::numbers::pi * i / samples;
    pts.push_back(c + L * Eigen::Vector2d(std::cos(t), std::sin(t)));
  }
  return pts;
}

std::string ellipse_path(const Ellipse& e, int samples) {
  std::ostringstream os;
  const auto pts = ellipse_points(e, samples);
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i == 0 ? "M " : " L ") << num(pts[i].x()) << ' ' << num(pts[i].y());
  os << " Z";
  return os.str();
}

std::vector<HeatmapCell> heatmap_cells(const WeightDistribution& mu) {
  require_nonempty(mu);
  std::int64_t min_d = mu.begin()->first.diff();
  std::int64_t min_a = mu.begin()->first.a;
  double max_log = 0;
  for (const auto& [p, c] : mu) {
    min_d = std::min(min_d, p.diff());
    min_a = std::min(min_a, p.a);
    max_log = std::max(max_log, std::log1p(std::abs(to_double(c))));
  }
  std::vector<HeatmapCell> cells;
  cells.reserve(mu.size());
  for (const auto& [p, c] : mu) {
    const double shade = max_log > 0 ? std::log1p(std::abs(to_double(c))) / max_log : 1.0;
    cells.push_back({p, static_cast<int>(p.diff() - min_d), static_cast<int>(p.a - min_a), shade});
  }
  return cells;
}

std::string heatmap(const WeightDistribution& mu, const HeatmapOptions& options) {
  const auto cells = heatmap_cells(mu);
  int cols = 0;
  int rows = 0;
  std::int64_t min_d = cells.front().point.diff() - cells.front().column;
  std::int64_t min_a = cells.front().point.a - cells.front().row;
  for (const auto& c : cells) {
    cols = std::max(cols, c.column + 1);
    rows = std::max(rows, c.row + 1);
  }
  const double s = options.cell;
  std::ostringstream os;
  os << svg_open(cols * s, rows * s);
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (const auto& c : cells) {
    os << "<rect x=\"" << num(c.column * s) << "\" y=\"" << num(c.row * s) << "\" width=\"" << num(s)
       << "\" height=\"" << num(s) << "\" fill=\"" << gray(c.shade) << "\" data-a=\"" << c.point.a << "\" data-b=\""
       << c.point.b << "\" data-mult=\"" << to_string(mu.at(c.point)) << "\"/>\n";
  }
  if (options.labels) {
    for (const auto& c : cells) {
      os << "<text x=\"" << num((c.column + 0.5) * s) << "\" y=\"" << num((c.row + 0.75) * s)
         << "\" font-size=\"" << num(0.6 * s) << "\" text-anchor=\"middle\" fill=\""
         << (c.shade > 0.5 ? "#ffffff" : "#000000") << "\">" << to_string(mu.at(c.point)) << "</text>\n";
    }
  }
  if (options.overlay) {
    // Data coordinates (a - b, a) to pixel centres.
    os << "<path transform=\"translate(" << num((0.5 - static_cast<double>(min_d)) * s) << ' '
       << num((0.5 - static_cast<double>(min_a)) * s) << ") scale(" << num(s) << ")\" d=\""
       << ellipse_path(*options.overlay, options.overlay_samples)
       << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"" << num(1.5 / s) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<std::pair<std::int64_t, Integer>> histogram_bars(const WeightDistribution& mu) {
  std::vector<std::pair<std::int64_t, Integer>> bars;
  for (const auto& [value, mass] : marginal(mu, Functional::degree()))
    bars.emplace_back(static_cast<std::int64_t>(mp::numerator(value)), mass);
  return bars;
}

std::string degree_histogram(const WeightDistribution& mu) {
  require_nonempty(mu);
  return degree_histogram(histogram_bars(mu));
}

std::string degree_histogram(const std::vector<std::pair<std::int64_t, Integer>>& bars) {
  if (bars.empty()) throw EmptyDistribution();
  double max_mass = 0;
  for (const auto& [d, m] : bars) max_mass = std::max(max_mass, std::abs(to_double(m)));
  const std::int64_t first = bars.front().first;
  const std::int64_t last = bars.back().first;
  const double bar_w = 8;
  const double height = 200;
  const double width = static_cast<double>(last - first + 1) * bar_w;
  std::ostringstream os;
  os << svg_open(width, height);
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (const auto& [d, m] : bars) {
    const double h = max_mass > 0 ? height * std::abs(to_double(m)) / max_mass : 0;
    os << "<rect x=\"" << num(static_cast<double>(d - first) * bar_w) << "\" y=\"" << num(height - h)
       << "\" width=\"" << num(bar_w) << "\" height=\"" << num(h) << "\" fill=\"#4d4d4d\" data-degree=\"" << d
       << "\" data-mass=\"" << to_string(m) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string rescaled_plot(const WeightDistribution& mu) {
  require_nonempty(mu);
  const HighestWeight& hw = mu.highest_weight();
  std::int64_t max_deg = 0;
  std::int64_t max_fw = 0;
  double max_log = 0;
  for (const auto& [p, c] : mu) {
    max_deg = std::max(max_deg, degree(p));
    max_fw = std::max(max_fw, std::abs(finite_weight(hw, p)));
    max_log = std::max(max_log, std::log1p(std::abs(to_double(c))));
  }
  const double w = 400;
  const double h = 200;
  const double pad = 10;
  std::ostringstream os;
  os << svg_open(w + 2 * pad, h + 2 * pad);
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  os << "<rect x=\"" << num(pad) << "\" y=\"" << num(pad) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
     << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  for (const auto& [p, c] : mu) {
    const double x = max_fw > 0 ? static_cast<double>(finite_weight(hw, p)) / max_fw : 0;
    const double y = max_deg > 0 ? static_cast<double>(degree(p)) / max_deg : 0;
    const double shade = max_log > 0 ? std::log1p(std::abs(to_double(c))) / max_log : 1.0;
    os << "<circle cx=\"" << num(pad + (x + 1) * w / 2) << "\" cy=\"" << num(pad + y * h) << "\" r=\"1.5\" fill=\""
       << gray(shade) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace dmz::render
