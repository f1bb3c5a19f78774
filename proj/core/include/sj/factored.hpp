#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sj/extended_scalar.hpp"
#include "sj/rational.hpp"
#include "sj/unipoly.hpp"

namespace sj {

// Affine form a*k + b*p + c in the two deformation parameters.
//
// Under the blow-up substitution p = t(k+1) the form becomes
// (a + b t) k + (b t + c), which vanishes at k = -1 exactly when c == a —
// independently of t. Forms with c == a are the "divisible" ones of the
// factored-limit case analysis; the others evaluate to c - a at k = -1.
struct AffineForm {
  Rational a, b, c;

  AffineForm() : a(0), b(0), c(0) {}
  AffineForm(Rational a_, Rational b_, Rational c_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

  static AffineForm constant(Rational v) { return AffineForm(Rational(0), Rational(0), std::move(v)); }
  static AffineForm k_plus(Rational v) { return AffineForm(Rational(1), Rational(0), std::move(v)); }

  bool is_zero() const { return sj::is_zero(a) && sj::is_zero(b) && sj::is_zero(c); }
  bool is_constant() const { return sj::is_zero(a) && sj::is_zero(b); }
  bool divisible_by_k_plus_1() const { return c == a; }

  Rational eval(const Rational& k, const Rational& p) const { return a * k + b * p + c; }
  // p := t(k+1), leaving a polynomial in k.
  UniPoly substitute_t(const Rational& t) const { return UniPoly::linear(a + b * t, b * t + c); }
  // k -> -1 with p kept symbolic: the affine form b*p + (c - a).
  AffineForm k_limit() const { return AffineForm(Rational(0), b, c - a); }

  AffineForm operator+(const AffineForm& o) const { return {a + o.a, b + o.b, c + o.c}; }
  AffineForm operator-(const AffineForm& o) const { return {a - o.a, b - o.b, c - o.c}; }
  AffineForm operator*(const Rational& s) const { return {a * s, b * s, c * s}; }
  bool operator==(const AffineForm& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const AffineForm& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }

  std::string str() const;
};

// Product of affine-linear forms with integer exponents and a rational
// prefactor. This is the native representation of every off-diagonal Pieri
// coefficient: the blow-up limit needs factor-level (k+1) bookkeeping, which
// expansion would destroy.
//
// Canonical form: factors normalized to leading coefficient 1 (scale absorbed
// into the prefactor), sorted, no zero exponents. The zero value is encoded as
// prefactor 0 with no factors.
class FactoredRational {
 public:
  FactoredRational() : pref_(1) {}
  explicit FactoredRational(Rational constant) : pref_(std::move(constant)) {}

  static FactoredRational zero() { return FactoredRational(Rational(0)); }
  static FactoredRational one() { return FactoredRational(Rational(1)); }
  static FactoredRational form(const AffineForm& f, int exp = 1);

  bool is_zero() const { return sj::is_zero(pref_); }
  const Rational& prefactor() const { return pref_; }
  const std::vector<std::pair<AffineForm, int>>& factors() const { return factors_; }

  FactoredRational operator*(const FactoredRational& o) const;
  FactoredRational operator/(const FactoredRational& o) const { return *this * o.inverse(); }
  FactoredRational& operator*=(const FactoredRational& o) { return *this = *this * o; }
  FactoredRational inverse() const;
  FactoredRational pow(int e) const;
  bool operator==(const FactoredRational& o) const {
    return pref_ == o.pref_ && factors_ == o.factors_;
  }

  ExtendedScalar eval(const Rational& k, const Rational& p) const;

  std::string str() const;

 private:
  void push(const AffineForm& f, int exp);  // normalizes and merges
  Rational pref_;
  std::vector<std::pair<AffineForm, int>> factors_;
};

// Expansion of the substitution p = t(k+1): every factor becomes linear in k.
// Throws DivisionNotExact if a denominator factor collapses to the zero
// polynomial at this t (the function of k is then undefined); a collapsing
// numerator factor yields the zero result, which the caller must expect.
UniRational substitute_blowup(const FactoredRational& phi, const Rational& t);

// The three-case factored limit: classify factors by divisibility by (k+1)
// after the substitution p = t(k+1), compare multiplicities, and evaluate.
// t may be Infinity, matching lim_{t->inf} of the finite-t values.
ExtendedScalar blowup_limit(const FactoredRational& phi, const ExtendedScalar& t);

// k -> -1 with p symbolic. `order` is the net multiplicity of pure-(k+1)
// factors; when it is zero, `value` is a product of affine forms in p alone.
struct PSymbolicLimit {
  int order = 0;
  FactoredRational value;  // meaningful when order == 0

  bool vanishes() const { return order > 0 || value.is_zero(); }
  bool has_pole() const { return order < 0; }
};
PSymbolicLimit k_limit(const FactoredRational& phi);

// Evaluates a p-affine FactoredRational in the limit p -> 0 with order
// counting (used to compare k_limit at p=0 against blowup_limit at t=inf).
ExtendedScalar p_limit_at_zero(const FactoredRational& phi);

}  // namespace sj
