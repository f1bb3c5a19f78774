#pragma once

#include <string>
#include <vector>

#include "sj/extended_scalar.hpp"
#include "sj/rational.hpp"

namespace sj {

// Dense polynomial in the single parameter k with exact rational coefficients.
// Invariant: the leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Rational c) {
    if (!sj::is_zero(c)) c_.push_back(std::move(c));
  }
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly var();                               // k
  static UniPoly linear(Rational a, Rational b);      // a*k + b

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const Rational& coeff(int d) const;
  const Rational& leading() const { return c_.back(); }

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& s) const;
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  // Quotient and remainder; coefficients live in a field so this is always defined.
  static void divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
  static UniPoly div_exact(const UniPoly& a, const UniPoly& b);
  // Monic gcd; gcd(0,0) = 0.
  static UniPoly gcd(UniPoly a, UniPoly b);

  UniPoly monic() const;
  Rational eval(const Rational& x) const;
  // Multiplicity of (k - point); degree+1 sentinel is never returned for nonzero polys.
  int order_at(const Rational& point) const;
  // Divides by (k - point)^times, asserting exactness.
  UniPoly deflate(const Rational& point, int times) const;

  std::string str(const char* var = "k") const;

 private:
  void trim() {
    while (!c_.empty() && sj::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Rational> c_;  // c_[i] multiplies k^i
};

// Canonical ratio of two UniPolys: denominator monic and coprime to the
// numerator, so equal values compare equal structurally.
class UniRational {
 public:
  UniRational() : num_(), den_(Rational(1)) {}
  /*implicit*/ UniRational(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
  /*implicit*/ UniRational(UniPoly p) : num_(std::move(p)), den_(Rational(1)) {}
  UniRational(UniPoly num, UniPoly den);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  UniRational operator-() const;
  UniRational operator+(const UniRational& o) const;
  UniRational operator-(const UniRational& o) const;
  UniRational operator*(const UniRational& o) const;
  UniRational operator/(const UniRational& o) const;
  UniRational& operator+=(const UniRational& o) { return *this = *this + o; }
  UniRational& operator-=(const UniRational& o) { return *this = *this - o; }
  UniRational& operator*=(const UniRational& o) { return *this = *this * o; }
  bool operator==(const UniRational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const UniRational& o) const { return !(*this == o); }

  UniRational inverse() const;
  Rational eval(const Rational& x) const;  // throws PoleAtLimit on a pole
  std::string str(const char* var = "k") const;

 private:
  UniPoly num_, den_;
};

inline bool is_zero(const UniPoly& p) { return p.is_zero(); }
inline bool is_zero(const UniRational& r) { return r.is_zero(); }
inline UniPoly div_exact(const UniPoly& a, const UniPoly& b) { return UniPoly::div_exact(a, b); }
inline UniRational div_exact(const UniRational& a, const UniRational& b) { return a / b; }

// Coefficientwise limit k -> point: cancels shared powers of (k - point) and
// evaluates, returning Infinity when the denominator vanishes to higher order.
ExtendedScalar uni_limit(const UniRational& f, const Rational& point);

}  // namespace sj
