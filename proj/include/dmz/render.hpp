#pragma once

// SVG emitters for weight distributions. Floating point is used only here,
// converting from exact values at emit time.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "dmz/demazure.hpp"
#include "dmz/moments.hpp"

namespace dmz::render {

/// Covariance ellipse {x : (x - center)^T Sigma^{-1} (x - center) = 1}.
class Ellipse {
 public:
  /// Throws std::domain_error("degenerate covariance") unless det(Sigma) > 0.
  Ellipse(PlanePoint center, CovarianceMatrix sigma);

  const PlanePoint& center() const { return center_; }
  const CovarianceMatrix& matrix() const { return sigma_; }

  Eigen::Matrix2d matrix_double() const;
  Eigen::Vector2d center_double() const;
  /// Semi-axis lengths, ascending (square roots of the eigenvalues of Sigma).
  Eigen::Vector2d semi_axes() const;

 private:
  PlanePoint center_;
  CovarianceMatrix sigma_;
};

/// `samples` points on the ellipse, evenly spaced in the Cholesky parameter.
std::vector<Eigen::Vector2d> ellipse_points(const Ellipse& e, int samples);

/// Closed SVG path data ("M ... L ... Z") through ellipse_points.
std::string ellipse_path(const Ellipse& e, int samples);

struct HeatmapOptions {
  int cell = 12;
  bool labels = false;
  /// Ellipse in (a - b, a) coordinates drawn over the cells.
  std::optional<Ellipse> overlay;
  int overlay_samples = 128;
};

struct HeatmapCell {
  LatticePoint point;
  int column;  // a - b - min(a - b)
  int row;     // a - min(a)
  double shade;  // log(1 + |mult|) / log(1 + max |mult|)
};

/// Cell layout used by heatmap(): x-axis a - b, degree increasing downward.
std::vector<HeatmapCell> heatmap_cells(const WeightDistribution& mu);

std::string heatmap(const WeightDistribution& mu, const HeatmapOptions& options = {});

/// Bars of the degree marginal, ordered by degree.
std::vector<std::pair<std::int64_t, Integer>> histogram_bars(const WeightDistribution& mu);

std::string degree_histogram(const WeightDistribution& mu);
std::string degree_histogram(const std::vector<std::pair<std::int64_t, Integer>>& bars);

/// Support rescaled into [-1,1] x [0,1] (finite weight across, degree down).
std::string rescaled_plot(const WeightDistribution& mu);

}  // namespace dmz::render
