#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dmz/demazure.hpp"

namespace dmz {

/// Polynomial in q with coefficient i at index i.
struct QPolynomial {
  std::vector<Integer> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Integer at_one() const;
  bool is_palindromic() const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;
};

/// Gaussian binomial [N k]_q by the q-Pascal rule
///   [N k] = [N-1 k-1] + q^k [N-1 k].
/// Zero polynomial when k < 0 or k > N.
QPolynomial gaussian_binomial(int N, int k);

/// Level-1 distribution of V_{w_N}(Lambda_0) from the Gaussian binomial
/// expansion of its character (even N); odd N adds one D_0 step.
WeightDistribution level1_distribution(int N);

/// Degree marginal of the level-1 distribution for even N: coeffs[d] is
/// the total multiplicity in degree d. Uses G_{n+1} = 2 G_n + (q^n - 1) G_{n-1}
/// for G_n = sum_k [n k]_q, so it never builds the two-dimensional support.
QPolynomial level1_degree_marginal(int N);

/// Shift S(N, lambda) such that mult(lambda) = mult(lambda - S delta) in
/// V_{w_N}(Lambda_0).
std::int64_t string_symmetry_shift(int N, const LatticePoint& p);

struct PalindromeResult {
  bool ok = true;
  std::optional<LatticePoint> witness;

  explicit operator bool() const { return ok; }
};

/// Checks mult(a, b) == mult(a + S, b + S) at every support point.
PalindromeResult palindromicity_check(const WeightDistribution& mu, int N);

}  // namespace dmz
