#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>
#include <Eigen/LU>

#include "dmz/demazure.hpp"

namespace dmz {

/// Thrown for statistics of a measure with total mass 0.
class EmptyDistribution : public std::domain_error {
 public:
  EmptyDistribution() : std::domain_error("empty distribution") {}
};

/// Symmetric 2x2 matrix of exact rationals.
using CovarianceMatrix = Eigen::Matrix<Rational, 2, 2>;

bool is_positive_semidefinite(const CovarianceMatrix& m);

Rational expectation(const WeightDistribution& mu, const Functional& f);
Rational covariance(const WeightDistribution& mu, const Functional& f, const Functional& g);
Rational variance(const WeightDistribution& mu, const Functional& f);

/// Covariance matrix of (f, g).
CovarianceMatrix covariance_matrix(const WeightDistribution& mu, const Functional& f, const Functional& g);

/// Covariance matrix of (degree, finite weight).
CovarianceMatrix covariance_matrix(const WeightDistribution& mu);

/// Point of R^2 with rational coordinates.
using PlanePoint = std::pair<Rational, Rational>;

/// Finitely supported integer measure on Q^2.
using PlaneMeasure = std::map<PlanePoint, Integer>;

/// lambda -> (first(lambda), second(lambda)).
struct CoordinateMap {
  Functional first;
  Functional second;

  PlanePoint operator()(const LatticePoint& p) const { return {first(p), second(p)}; }
};

PlaneMeasure pushforward(const WeightDistribution& mu, const CoordinateMap& map);

// On a plane measure a functional reads a as the first coordinate X and b as
// the second coordinate Y.
Rational expectation(const PlaneMeasure& mu, const Functional& f);
Rational covariance(const PlaneMeasure& mu, const Functional& f, const Functional& g);
Rational variance(const PlaneMeasure& mu, const Functional& f);

/// Exact value of a closed form from the fixed catalog.
///
/// Throws std::invalid_argument for an unknown name and std::domain_error when
/// N violates the formula's parity or positivity requirement.
Rational reference_formula(std::string_view name, int N);

struct ReferenceFormulaInfo {
  std::string name;
  std::string expression;
  int parity;  // 0 even only, 1 odd only, -1 any
};

const std::vector<ReferenceFormulaInfo>& reference_formula_catalog();

}  // namespace dmz
