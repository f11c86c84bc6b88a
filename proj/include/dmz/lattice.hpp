#pragma once

// Weight lattice of affine sl2 in the coordinates (a, b):
//   lambda = Lambda - a * alpha_0 - b * alpha_1.
// The Cartan matrix is ((2, -2), (-2, 2)); the z-component of Lambda is 0.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "dmz/numeric.hpp"

namespace dmz {

/// Dominant integral weight m*Lambda_0 + n*Lambda_1 of level m + n >= 1.
class HighestWeight {
 public:
  HighestWeight(int m, int n);

  static HighestWeight fundamental(int j);

  int m() const { return m_; }
  int n() const { return n_; }
  int level() const { return m_ + n_; }

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;

 private:
  int m_;
  int n_;
};

struct LatticePoint {
  std::int64_t a = 0;
  std::int64_t b = 0;

  std::int64_t diff() const { return a - b; }

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Order by string (fixed a - b) first, then by a.
struct StringOrder {
  bool operator()(const LatticePoint& p, const LatticePoint& q) const {
    if (p.diff() != q.diff()) return p.diff() < q.diff();
    return p.a < q.a;
  }
};

/// <alpha_j^vee, lambda>: m - 2(a-b) for j = 0, n + 2(a-b) for j = 1.
std::int64_t coroot_pairing(int j, const HighestWeight& hw, const LatticePoint& p);

/// <-d, lambda> = a.
inline std::int64_t degree(const LatticePoint& p) { return p.a; }

/// <alpha_1^vee, lambda> = n + 2(a-b).
std::int64_t finite_weight(const HighestWeight& hw, const LatticePoint& p);

/// lambda - i * alpha_j.
LatticePoint step(const LatticePoint& p, int j, std::int64_t i);

/// Polynomial in (a, b) with exact rational coefficients.
///
/// Stored sparsely by exponent pair (i, j) for the monomial a^i b^j; zero
/// coefficients are never stored.
class Functional {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Rational>;

  Functional() = default;
  explicit Functional(const Rational& constant);

  static Functional constant(const Rational& c) { return Functional(c); }
  static Functional monomial(int i, int j, const Rational& c = Rational(1));
  static Functional a() { return monomial(1, 0); }
  static Functional b() { return monomial(0, 1); }
  /// a - b, the string coordinate.
  static Functional diff() { return a() - b(); }
  /// -d.
  static Functional degree() { return a(); }
  static Functional coroot(int j, const HighestWeight& hw);
  static Functional finite_weight(const HighestWeight& hw) { return coroot(1, hw); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  Rational operator()(const LatticePoint& p) const;
  Rational operator()(const Rational& a, const Rational& b) const;

  /// Returns (g, den) with integer-valued g such that *this = g / den.
  std::pair<std::map<Exponents, Integer>, Integer> integral_form() const;

  Functional pow(unsigned k) const;

  Functional& operator+=(const Functional& o);
  Functional& operator-=(const Functional& o);
  Functional& operator*=(const Functional& o);
  Functional& operator*=(const Rational& s);

  friend Functional operator+(Functional x, const Functional& y) { return x += y; }
  friend Functional operator-(Functional x, const Functional& y) { return x -= y; }
  friend Functional operator*(Functional x, const Functional& y) { return x *= y; }
  friend Functional operator*(Functional x, const Rational& s) { return x *= s; }
  friend Functional operator*(const Rational& s, Functional x) { return x *= s; }
  friend Functional operator+(Functional x, const Rational& c) { return x += Functional(c); }
  friend Functional operator-(Functional x, const Rational& c) { return x -= Functional(c); }
  friend Functional operator+(const Rational& c, Functional x) { return x += Functional(c); }
  friend Functional operator-(const Rational& c, const Functional& x) { return Functional(c) - x; }
  friend Functional operator-(Functional x) { return x *= Rational(-1); }
  friend bool operator==(const Functional&, const Functional&) = default;

  std::string str() const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  Terms terms_;
};

}  // namespace dmz
