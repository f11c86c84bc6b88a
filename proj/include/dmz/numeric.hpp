#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace dmz {

namespace mp = boost::multiprecision;

/// Arbitrary-precision integer used for all multiplicities.
using Integer = mp::number<mp::gmp_int, mp::et_off>;

/// Exact rational used for every statistic.
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

/// base^exponent by repeated squaring, exponent >= 0.
template <class T>
T power(T base, unsigned exponent) {
  T result(1);
  while (exponent) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

/// Canonical reduced form, "p/q", with "/1" dropped.
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Integer& z) { return z.str(); }

}  // namespace dmz
