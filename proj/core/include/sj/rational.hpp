#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "sj/errors.hpp"

namespace sj {

// Exact arbitrary-precision rationals. GMP keeps every value in lowest terms
// with a positive denominator, which is exactly the canonical form we need.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational rat_pow(const Rational& base, int exp) {
  if (exp == 0) return Rational(1);
  Rational b = exp > 0 ? base : Rational(1) / base;
  int e = exp > 0 ? exp : -exp;
  Rational out(1);
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

// Prints "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_from_string(std::string_view s) {
  try {
    Rational r(std::string(s), 10);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid rational: '" + std::string(s) + "'");
  }
}

inline Rational div_exact(const Rational& a, const Rational& b) { return a / b; }

}  // namespace sj
