#include "sj/factored.hpp"

#include <cassert>
#include <sstream>

#include "sj/errors.hpp"

namespace sj {

std::string AffineForm::str() const {
  std::ostringstream os;
  bool any = false;
  auto emit = [&](const Rational& v, const char* sym) {
    if (sj::is_zero(v)) return;
    if (any) os << (sgn(v) > 0 ? " + " : " - ");
    else if (sgn(v) < 0) os << "-";
    Rational av = Rational(abs(v));
    if (sym[0] == '\0' || av != 1) os << to_string(av);
    if (sym[0] != '\0') {
      if (av != 1) os << "*";
      os << sym;
    }
    any = true;
  };
  emit(a, "k");
  emit(b, "p");
  emit(c, "");
  return any ? os.str() : "0";
}

FactoredRational FactoredRational::form(const AffineForm& f, int exp) {
  FactoredRational out;
  if (exp == 0) return out;
  if (f.is_zero()) {
    if (exp < 0) throw DivisionNotExact("FactoredRational: zero form in denominator");
    return zero();
  }
  out.push(f, exp);
  return out;
}

void FactoredRational::push(const AffineForm& f, int exp) {
  assert(!f.is_zero() && exp != 0);
  // Scale so the first nonzero of (a, b, c) is 1; the scale joins the prefactor.
  Rational s = !sj::is_zero(f.a) ? f.a : (!sj::is_zero(f.b) ? f.b : f.c);
  pref_ *= rat_pow(s, exp);
  AffineForm unit = f * (Rational(1) / s);
  if (unit.is_constant()) return;  // the form was a constant, fully absorbed
  for (auto it = factors_.begin(); it != factors_.end(); ++it) {
    if (it->first == unit) {
      it->second += exp;
      if (it->second == 0) factors_.erase(it);
      return;
    }
    if (unit < it->first) {
      factors_.insert(it, {unit, exp});
      return;
    }
  }
  factors_.push_back({unit, exp});
}

FactoredRational FactoredRational::operator*(const FactoredRational& o) const {
  if (is_zero() || o.is_zero()) return zero();
  FactoredRational out = *this;
  out.pref_ *= o.pref_;
  for (const auto& [f, e] : o.factors_) out.push(f, e);
  return out;
}

FactoredRational FactoredRational::inverse() const {
  if (is_zero()) throw DivisionNotExact("FactoredRational: inverse of zero");
  FactoredRational out;
  out.pref_ = Rational(1) / pref_;
  out.factors_ = factors_;
  for (auto& [f, e] : out.factors_) e = -e;
  return out;
}

FactoredRational FactoredRational::pow(int e) const {
  if (e == 0) return one();
  if (is_zero()) {
    if (e < 0) throw DivisionNotExact("FactoredRational: negative power of zero");
    return zero();
  }
  FactoredRational out;
  out.pref_ = rat_pow(pref_, e);
  out.factors_ = factors_;
  for (auto& [f, x] : out.factors_) x *= e;
  return out;
}

ExtendedScalar FactoredRational::eval(const Rational& k, const Rational& p) const {
  if (is_zero()) return ExtendedScalar(Rational(0));
  int zeros = 0, poles = 0;
  Rational value = pref_;
  for (const auto& [f, e] : factors_) {
    Rational v = f.eval(k, p);
    if (sj::is_zero(v)) {
      (e > 0 ? zeros : poles) += (e > 0 ? e : -e);
    } else {
      value *= rat_pow(v, e);
    }
  }
  if (zeros > 0 && poles > 0) return ExtendedScalar::undefined();
  if (poles > 0) return ExtendedScalar::infinity();
  if (zeros > 0) return ExtendedScalar(Rational(0));
  return ExtendedScalar(value);
}

std::string FactoredRational::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << to_string(pref_);
  for (const auto& [f, e] : factors_) {
    os << " * (" << f.str() << ")";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

UniRational substitute_blowup(const FactoredRational& phi, const Rational& t) {
  if (phi.is_zero()) return UniRational(Rational(0));
  UniPoly num(phi.prefactor()), den(Rational(1));
  for (const auto& [f, e] : phi.factors()) {
    UniPoly sub = f.substitute_t(t);
    if (sub.is_zero()) {
      if (e < 0) throw DivisionNotExact("substitute_blowup: denominator factor vanished at t");
      return UniRational(Rational(0));
    }
    UniPoly p = sub;
    for (int i = 1; i < (e > 0 ? e : -e); ++i) p *= sub;
    if (e > 0) num *= p;
    else den *= p;
  }
  return UniRational(std::move(num), std::move(den));
}

ExtendedScalar blowup_limit(const FactoredRational& phi, const ExtendedScalar& t) {
  assert(!t.is_undefined());
  if (phi.is_zero()) return ExtendedScalar(Rational(0));

  int net_order = 0;       // signed (k+1) multiplicity over divisible factors
  int net_t_degree = 0;    // signed t-degree of the divisible factors' t-parts
  bool num_collapse = false, den_collapse = false;
  Rational value = phi.prefactor();

  for (const auto& [f, e] : phi.factors()) {
    if (f.divisible_by_k_plus_1()) {
      net_order += e;
      if (!sj::is_zero(f.b)) net_t_degree += e;
      if (t.is_finite()) {
        Rational tf = f.a + f.b * t.value();
        if (sj::is_zero(tf)) (e > 0 ? num_collapse : den_collapse) = true;
        else value *= rat_pow(tf, e);
      } else {
        value *= rat_pow(sj::is_zero(f.b) ? f.a : f.b, e);
      }
    } else {
      value *= rat_pow(f.c - f.a, e);
    }
  }

  if (den_collapse) return ExtendedScalar::undefined();
  if (num_collapse) return ExtendedScalar(Rational(0));
  if (net_order < 0) return ExtendedScalar::infinity();
  if (net_order > 0) return ExtendedScalar(Rational(0));
  if (!t.is_finite()) {
    if (net_t_degree > 0) return ExtendedScalar::infinity();
    if (net_t_degree < 0) return ExtendedScalar(Rational(0));
  }
  return ExtendedScalar(value);
}

PSymbolicLimit k_limit(const FactoredRational& phi) {
  PSymbolicLimit out;
  if (phi.is_zero()) {
    out.value = FactoredRational::zero();
    return out;
  }
  FactoredRational value(phi.prefactor());
  for (const auto& [f, e] : phi.factors()) {
    if (f.divisible_by_k_plus_1() && sj::is_zero(f.b)) {
      out.order += e;  // pure multiple of (k+1); its unit scale is f.a
      value *= FactoredRational(rat_pow(f.a, e));
    } else {
      value *= FactoredRational::form(f.k_limit(), e);
    }
  }
  out.value = std::move(value);
  return out;
}

ExtendedScalar p_limit_at_zero(const FactoredRational& phi) {
  if (phi.is_zero()) return ExtendedScalar(Rational(0));
  int order = 0;
  Rational value = phi.prefactor();
  for (const auto& [f, e] : phi.factors()) {
    assert(sj::is_zero(f.a));
    if (sj::is_zero(f.c)) {
      order += e;
      value *= rat_pow(f.b, e);
    } else {
      value *= rat_pow(f.c, e);
    }
  }
  if (order > 0) return ExtendedScalar(Rational(0));
  if (order < 0) return ExtendedScalar::infinity();
  return ExtendedScalar(value);
}

}  // namespace sj
