#include "sj/unipoly.hpp"

#include <cassert>
#include <sstream>

#include "sj/errors.hpp"

namespace sj {

UniPoly UniPoly::var() { return linear(Rational(1), Rational(0)); }

UniPoly UniPoly::linear(Rational a, Rational b) {
  return UniPoly(std::vector<Rational>{std::move(b), std::move(a)});
}

const Rational& UniPoly::coeff(int d) const {
  static const Rational kZero(0);
  if (d < 0 || d >= static_cast<int>(c_.size())) return kZero;
  return c_[d];
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly out;
  out.c_.resize(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < out.c_.size(); ++i) {
    if (i < c_.size()) out.c_[i] += c_[i];
    if (i < o.c_.size()) out.c_[i] += o.c_[i];
  }
  out.trim();
  return out;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  UniPoly out;
  out.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out.c_[i + j] += c_[i] * o.c_[j];
  out.trim();
  return out;
}

UniPoly UniPoly::operator*(const Rational& s) const {
  if (sj::is_zero(s)) return UniPoly();
  UniPoly out = *this;
  for (auto& c : out.c_) c *= s;
  return out;
}

void UniPoly::divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) throw DivisionNotExact("UniPoly: division by zero");
  q = UniPoly();
  r = a;
  if (a.degree() < b.degree()) return;
  q.c_.assign(a.degree() - b.degree() + 1, Rational(0));
  const Rational& lead = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rational f = r.leading() / lead;
    q.c_[shift] = f;
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i + shift] -= f * b.c_[i];
    r.trim();
  }
  q.trim();
}

UniPoly UniPoly::div_exact(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  divrem(a, b, q, r);
  if (!r.is_zero()) throw DivisionNotExact("UniPoly: inexact division");
  return q;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  // Euclid with monic normalization after every remainder keeps the
  // representation canonical and coefficient growth in check.
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    UniPoly q, r;
    divrem(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return UniPoly();
  return *this * (Rational(1) / leading());
}

Rational UniPoly::eval(const Rational& x) const {
  Rational out(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x + *it;
  return out;
}

int UniPoly::order_at(const Rational& point) const {
  assert(!is_zero());
  UniPoly cur = *this;
  const UniPoly root = linear(Rational(1), -point);
  int order = 0;
  while (sj::is_zero(cur.eval(point))) {
    cur = div_exact(cur, root);
    ++order;
  }
  return order;
}

UniPoly UniPoly::deflate(const Rational& point, int times) const {
  UniPoly cur = *this;
  const UniPoly root = linear(Rational(1), -point);
  for (int i = 0; i < times; ++i) cur = div_exact(cur, root);
  return cur;
}

std::string UniPoly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = coeff(d);
    if (sj::is_zero(c)) continue;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    Rational a = first ? c : Rational(abs(c));
    first = false;
    if (d == 0 || a != 1) {
      os << to_string(a);
      if (d > 0) os << "*";
    }
    if (d > 0) {
      os << var;
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

UniRational::UniRational(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionNotExact("UniRational: zero denominator");
  if (num_.is_zero()) {
    den_ = UniPoly(Rational(1));
    return;
  }
  UniPoly g = UniPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = UniPoly::div_exact(num_, g);
    den_ = UniPoly::div_exact(den_, g);
  }
  Rational lead = den_.leading();
  den_ = den_ * (Rational(1) / lead);
  num_ = num_ * (Rational(1) / lead);
}

UniRational UniRational::operator-() const {
  UniRational out = *this;
  out.num_ = -out.num_;
  return out;
}

UniRational UniRational::operator+(const UniRational& o) const {
  return UniRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

UniRational UniRational::operator-(const UniRational& o) const { return *this + (-o); }

UniRational UniRational::operator*(const UniRational& o) const {
  return UniRational(num_ * o.num_, den_ * o.den_);
}

UniRational UniRational::operator/(const UniRational& o) const {
  if (o.is_zero()) throw DivisionNotExact("UniRational: division by zero");
  return UniRational(num_ * o.den_, den_ * o.num_);
}

UniRational UniRational::inverse() const {
  if (is_zero()) throw DivisionNotExact("UniRational: inverse of zero");
  return UniRational(den_, num_);
}

Rational UniRational::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (sj::is_zero(d)) throw PoleAtLimit("UniRational: pole at sample point");
  return num_.eval(x) / d;
}

std::string UniRational::str(const char* var) const {
  if (den_.is_one()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

ExtendedScalar uni_limit(const UniRational& f, const Rational& point) {
  if (f.is_zero()) return ExtendedScalar(Rational(0));
  // Canonical form means num and den share no root, but we cancel defensively
  // so the function is total on any coprime pair.
  UniPoly num = f.num(), den = f.den();
  int on = sj::is_zero(num.eval(point)) ? num.order_at(point) : 0;
  int od = sj::is_zero(den.eval(point)) ? den.order_at(point) : 0;
  int m = std::min(on, od);
  if (m > 0) {
    num = num.deflate(point, m);
    den = den.deflate(point, m);
    on -= m;
    od -= m;
  }
  if (od > 0) return ExtendedScalar::infinity();
  if (on > 0) return ExtendedScalar(Rational(0));
  Rational dv = den.eval(point);
  assert(!sj::is_zero(dv));
  return ExtendedScalar(num.eval(point) / dv);
}

}  // namespace sj
