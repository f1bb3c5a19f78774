#include "sj/pieri.hpp"

#include <cassert>

#include "sj/errors.hpp"

namespace sj {

namespace {

const AffineForm kForm(Rational(1), Rational(0), Rational(0));        // k
const AffineForm kHalfP(Rational(0), Rational(1, 2), Rational(0));    // p/2

AffineForm a_of(const Partition& p, int i) {  // a_i = λ_i + k i
  return AffineForm(Rational(i), Rational(0), Rational(p.part(i)));
}

AffineForm constant(long v) { return AffineForm::constant(Rational(v)); }

FactoredRational ratio(const AffineForm& num, const AffineForm& den) {
  return FactoredRational::form(num, 1) * FactoredRational::form(den, -1);
}

}  // namespace

FactoredRational hook_product(const Partition& p, const AffineForm& x, HookKind kind) {
  FactoredRational out = FactoredRational::one();
  Partition conj = p.conjugate();
  for (const Box& b : p.boxes()) {
    AffineForm f;
    switch (kind) {
      case HookKind::C0:
        f = AffineForm(Rational(b.row - 1) + x.a, x.b, Rational(b.col - 1) + x.c);
        break;
      case HookKind::CMinus:
        f = AffineForm(Rational(b.row - conj.part(b.col)) + x.a, x.b,
                       Rational(p.part(b.row) - b.col) + x.c);
        break;
      case HookKind::CPlus:
        f = AffineForm(Rational(conj.part(b.col) + b.row) + x.a, x.b,
                       Rational(p.part(b.row) + b.col) + x.c);
        break;
    }
    out *= FactoredRational::form(f, 1);
  }
  return out;
}

FactoredRational j_norm(const Partition& p, const ParamCtx& ctx) {
  AffineForm h = ctx.h();
  AffineForm x1 = h + kHalfP;                       // h + p/2 + q
  AffineForm x2 = constant(0) - kForm;              // -k
  AffineForm x3 = kForm + h - kHalfP + constant(0); // k + h - p/2 + 1/2
  x3.c += Rational(1, 2);
  AffineForm x4 = h * Rational(2);                  // 2h - 1
  x4.c -= 1;
  FactoredRational out(rat_pow(Rational(4), p.size()));
  out *= hook_product(p, x1, HookKind::C0);
  out *= hook_product(p, x2, HookKind::CMinus).inverse();
  out *= hook_product(p, x3, HookKind::C0);
  out *= hook_product(p, x4, HookKind::CPlus).inverse();
  return out;
}

FactoredRational v_coeff(const Partition& lambda, const Partition& mu, const ParamCtx& ctx) {
  auto change = box_change(lambda, mu);
  if (!change) throw NotAdjacent("v_coeff: " + mu.str() + " not adjacent to " + lambda.str());
  const int i = change->box.row;
  const int l = lambda.length();
  const AffineForm h = ctx.h();
  const AffineForm h2 = h * Rational(2);
  const AffineForm ai = a_of(lambda, i);

  FactoredRational out = FactoredRational::one();
  if (change->add) {
    for (int j = 1; j <= l + 1; ++j) {
      if (j == i) continue;
      AffineForm aj = a_of(lambda, j);
      out *= ratio(ai - aj - kForm, ai - aj);
      out *= ratio(ai + aj + h2 - kForm, ai + aj + h2);
    }
    AffineForm n1 = ai - kForm + h + kHalfP;                   // a_i - k + h + p/2 + q
    AffineForm d1 = ai - kForm * Rational(l + 2);              // a_i - k(l+2)
    AffineForm n2 = ai + kForm * Rational(l + 1) + h2;         // a_i + k(l+1) + 2h
    AffineForm d2 = ai + h;                                    // a_i + h
    AffineForm n3 = ai + h - kHalfP;                           // a_i + h - p/2 + 1/2
    n3.c += Rational(1, 2);
    AffineForm d3 = ai + h;                                    // a_i + h + 1/2
    d3.c += Rational(1, 2);
    out *= ratio(n1, d1) * ratio(n2, d2) * ratio(n3, d3);
  } else {
    for (int j = 1; j <= l; ++j) {
      if (j == i) continue;
      AffineForm aj = a_of(lambda, j);
      out *= ratio(ai - aj + kForm, ai - aj);
      out *= ratio(ai + aj + kForm + h2, ai + aj + h2);
    }
    AffineForm n1 = ai + kForm + h - kHalfP;                   // a_i + k + h - p/2 - q
    AffineForm d1 = ai + kForm * Rational(l + 1) + h2;         // a_i + k(l+1) + 2h
    AffineForm n2 = ai - kForm * Rational(l);                  // a_i - k l
    AffineForm d2 = ai + h;                                    // a_i + h
    AffineForm n3 = ai + h + kHalfP;                           // a_i + h + p/2 - 1/2
    n3.c -= Rational(1, 2);
    AffineForm d3 = ai + h;                                    // a_i + h - 1/2
    d3.c -= Rational(1, 2);
    out *= ratio(n1, d1) * ratio(n2, d2) * ratio(n3, d3);
  }
  return out;
}

PieriCoeff PieriCoeff::off_diagonal(FactoredRational v) {
  PieriCoeff out;
  out.diagonal_ = false;
  out.off_ = std::move(v);
  return out;
}

PieriCoeff PieriCoeff::diagonal(FactoredRational affine, std::vector<FactoredRational> vs) {
  PieriCoeff out;
  out.diagonal_ = true;
  out.diag_affine_ = std::move(affine);
  out.diag_vs_ = std::move(vs);
  return out;
}

const FactoredRational& PieriCoeff::factored() const {
  if (diagonal_) throw std::logic_error("PieriCoeff: diagonal coefficient is not a product");
  return off_;
}

UniRational PieriCoeff::substitute(const Rational& t) const {
  if (!diagonal_) return substitute_blowup(off_, t);
  UniRational out = substitute_blowup(diag_affine_, t);
  for (const auto& v : diag_vs_) out -= substitute_blowup(v, t);
  return out;
}

namespace {
UniRational substitute_p_value(const FactoredRational& phi, const Rational& p0) {
  if (phi.is_zero()) return UniRational(Rational(0));
  UniPoly num(phi.prefactor()), den(Rational(1));
  for (const auto& [f, e] : phi.factors()) {
    UniPoly lin = UniPoly::linear(f.a, f.b * p0 + f.c);
    if (lin.is_zero()) {
      if (e < 0) throw DivisionNotExact("substitute_p: denominator vanished");
      return UniRational(Rational(0));
    }
    UniPoly pw = lin;
    for (int x = 1; x < (e > 0 ? e : -e); ++x) pw *= lin;
    if (e > 0) num *= pw;
    else den *= pw;
  }
  return UniRational(std::move(num), std::move(den));
}
}  // namespace

UniRational PieriCoeff::substitute_p(const Rational& p0) const {
  if (!diagonal_) return substitute_p_value(off_, p0);
  UniRational out = substitute_p_value(diag_affine_, p0);
  for (const auto& v : diag_vs_) out -= substitute_p_value(v, p0);
  return out;
}

ExtendedScalar PieriCoeff::eval(const Rational& k, const Rational& p) const {
  if (!diagonal_) return off_.eval(k, p);
  ExtendedScalar aff = diag_affine_.eval(k, p);
  if (!aff.is_finite()) return aff;
  Rational out = aff.value();
  for (const auto& v : diag_vs_) {
    ExtendedScalar ev = v.eval(k, p);
    if (!ev.is_finite()) return ev;
    out -= ev.value();
  }
  return ExtendedScalar(out);
}

ExtendedScalar PieriCoeff::blowup(const ExtendedScalar& t) const {
  if (!diagonal_) return blowup_limit(off_, t);
  // Every term of the diagonal limit carries a factor of p, so the blow-up
  // value vanishes for all t including infinity.
  if (!t.is_finite()) return ExtendedScalar(Rational(0));
  return uni_limit(substitute(t.value()), Rational(-1));
}

PieriCoeff a_coeff(const Partition& lambda, const Partition& mu, const ParamCtx& ctx) {
  if (lambda == mu) {
    // -k^{-1}(2h + p + 2q) = (2mk + 2n)/k after substituting h.
    FactoredRational affine =
        FactoredRational::form(AffineForm(Rational(2 * ctx.m), Rational(0), Rational(2 * ctx.n)), 1) *
        FactoredRational::form(kForm, -1);
    std::vector<FactoredRational> vs;
    for (const Partition& q : add_candidates(lambda)) vs.push_back(v_coeff(lambda, q, ctx));
    for (const Partition& q : remove_candidates(lambda)) vs.push_back(v_coeff(lambda, q, ctx));
    return PieriCoeff::diagonal(std::move(affine), std::move(vs));
  }
  if (!box_change(lambda, mu))
    throw NotInS("a_coeff: " + mu.str() + " not in S(" + lambda.str() + ")");
  FactoredRational v = v_coeff(lambda, mu, ctx);
  if (v.is_zero()) return PieriCoeff::off_diagonal(FactoredRational::zero());
  return PieriCoeff::off_diagonal(v * j_norm(lambda, ctx) / j_norm(mu, ctx));
}

FactoredRational a2_factored(const Partition& lambda, const Partition& mu, const ParamCtx& ctx) {
  auto change = box_change(lambda, mu);
  if (!change) throw NotAdjacent("a2_factored: " + mu.str() + " not adjacent to " + lambda.str());
  const int i = change->box.row, j = change->box.col;
  const int l = lambda.length();
  const AffineForm h = ctx.h();
  const AffineForm h2 = h * Rational(2);
  const AffineForm ai = a_of(lambda, i);
  const Partition conj = lambda.conjugate();

  FactoredRational out = FactoredRational::one();
  if (change->add) {
    out *= FactoredRational(Rational(1, 4));
    for (int r = 1; r <= l + 1; ++r) {
      if (r == i) continue;
      AffineForm ar = a_of(lambda, r);
      out *= ratio(ai + ar + h2 - kForm, ai + ar + h2);
    }
    out *= ratio(ai + kForm * Rational(l + 1) + h2, ai + h);
    AffineForm n3 = ai + h - kHalfP;
    n3.c += Rational(1, 2);
    AffineForm d3 = ai + h;
    d3.c += Rational(1, 2);
    out *= ratio(n3, d3);
    // (2j-1+2ki+2h) / (j-1+ki+h-p/2+1/2)
    AffineForm n4 = kForm * Rational(2 * i) + h2 + constant(2 * j - 1);
    AffineForm d4 = kForm * Rational(i) + h - kHalfP + constant(j - 1);
    d4.c += Rational(1, 2);
    out *= ratio(n4, d4);
    for (int s = 1; s <= j - 1; ++s) {
      AffineForm base = ai + kForm * Rational(conj.part(s)) + constant(s) + h2;
      AffineForm den = base;
      den.c -= 1;
      out *= ratio(base, den);
    }
    for (int r = 1; r <= i - 1; ++r) {
      AffineForm base = a_of(lambda, r) + constant(j) + kForm * Rational(conj.part(j)) + h2;
      base.c -= 1;
      AffineForm num = base + kForm;
      out *= ratio(num, base);
    }
  } else {
    out *= FactoredRational(Rational(4));
    for (int r = 1; r <= l; ++r) {
      if (r == i) continue;
      AffineForm ar = a_of(lambda, r);
      out *= ratio(ai + ar + h2 + kForm, ai + ar + h2);
    }
    out *= ratio(ai + kForm + h - kHalfP, ai + kForm * Rational(l + 1) + h2);
    out *= FactoredRational::form(ai + h, -1);
    AffineForm n3 = ai + h + kHalfP;
    n3.c -= Rational(1, 2);
    AffineForm d3 = ai + h;
    d3.c += Rational(1, 2);
    out *= ratio(n3, d3);
    // (j-1+k(i-1)+h+p/2+q)(j-1+ki+h-p/2+1/2) / (2j-1+2ki+2h)
    AffineForm n4 = kForm * Rational(i - 1) + h + kHalfP + constant(j - 1);
    AffineForm n5 = kForm * Rational(i) + h - kHalfP + constant(j - 1);
    n5.c += Rational(1, 2);
    AffineForm d4 = kForm * Rational(2 * i) + h2 + constant(2 * j - 1);
    out *= FactoredRational::form(n4, 1) * FactoredRational::form(n5, 1) *
           FactoredRational::form(d4, -1);
    for (int s = 1; s <= j - 1; ++s) {
      AffineForm den = ai + kForm * Rational(conj.part(s)) + constant(s) + h2;
      den.c -= 1;
      AffineForm num = den;
      num.c -= 1;
      out *= ratio(num, den);
    }
    for (int r = 1; r <= i - 1; ++r) {
      AffineForm den = a_of(lambda, r) + constant(j) + kForm * Rational(conj.part(j)) + h2;
      den.c -= 1;
      AffineForm num = den - kForm;
      out *= ratio(num, den);
    }
  }
  return out;
}

PSymbolicLimit a_limit(const Partition& lambda, const Partition& mu, int n) {
  ParamCtx ctx{1, n};
  PieriCoeff a = a_coeff(lambda, mu, ctx);
  return k_limit(a.factored());
}

ExtendedScalar a_limit_eval(const Partition& lambda, const Partition& mu, int n,
                            const Rational& p0) {
  ParamCtx ctx{1, n};
  PieriCoeff a = a_coeff(lambda, mu, ctx);
  return uni_limit(a.substitute_p(p0), Rational(-1));
}

Rational a_limit_closed_remove(const Partition& lambda, int row, int n, const Rational& p0) {
  // (2ã_i+2h̃+p)(2ã_i+2h̃-p-2) (2ã_i+2h̃+p-1)(2ã_i+2h̃-p-1)
  // ----------------------------------------------------- , h̃ = 1-n-p/2, ã_i = λ_i - i.
  //      (2ã_i+2h̃-1)^2      (2ã_i+2h̃)(2ã_i+2h̃-2)
  Rational A = Rational(2 * (lambda.part(row) - row)) + 2 * (Rational(1 - n) - p0 / 2);
  return (A + p0) * (A - p0 - 2) * (A + p0 - 1) * (A - p0 - 1) /
         ((A - 1) * (A - 1) * A * (A - 2));
}

Rational a_limit_closed_diagonal(const Partition& lambda, int n, const Rational& p0) {
  Rational h2 = 2 * (Rational(1 - n) - p0 / 2);  // 2h̃ with p kept
  int l = lambda.length();
  Rational out = p0 * (p0 + 1) / (h2 - 2 * l - 1) + p0;
  for (int i = 1; i <= l; ++i) {
    Rational Ai = Rational(2 * (lambda.part(i) - i)) + h2;
    out -= 2 * p0 * (p0 + 1) / ((Ai - 1) * (Ai + 1));
  }
  return out;
}

ExtendedScalar a_blowup(const Partition& lambda, const Partition& mu,
                        const ExtendedScalar& t, int n) {
  ParamCtx ctx{1, n};
  return a_coeff(lambda, mu, ctx).blowup(t);
}

FactoredRational b_factored(const Partition& lambda, const ParamCtx& ctx) {
  DiagramClass c = classify(lambda, ctx.n);
  if (!c.singular)
    throw NotSingular("b_factored: " + lambda.str() + " is regular for n=" + std::to_string(ctx.n));
  int r = r_of(lambda, ctx.n);
  int row = lambda.conjugate().part(c.j);
  std::vector<int> parts = lambda.parts();
  parts[0] -= r;
  auto make = [](std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return Partition(std::move(v));
  };
  Partition cur = make(parts);
  FactoredRational out = FactoredRational::one();
  for (int s = 1; s <= r; ++s) {
    parts[row - 1] -= 1;
    Partition next = make(parts);
    out *= a_coeff(cur, next, ctx).factored();
    cur = next;
  }
  return out;
}

ExtendedScalar b_coeff_blowup(const Partition& lambda, const ExtendedScalar& t, int n) {
  DiagramClass c = classify(lambda, n);
  if (!c.singular)
    throw NotSingular("b_coeff_blowup: " + lambda.str() + " is regular for n=" + std::to_string(n));
  int l = lambda.conjugate().part(c.j);
  if (!t.is_finite()) return ExtendedScalar(Rational(l == 1 ? 0 : 1));
  if (l == 1) {
    if (sj::is_zero(t.value())) return ExtendedScalar::infinity();
    return ExtendedScalar(Rational(2) / t.value());
  }
  Rational den = t.value() - l + 1;
  if (sj::is_zero(den)) return ExtendedScalar::infinity();
  return ExtendedScalar((t.value() - l + 2) / den);
}

ExtendedScalar b_chain_blowup(const Partition& lambda, const ExtendedScalar& t, int n) {
  return blowup_limit(b_factored(lambda, ParamCtx{1, n}), t);
}

}  // namespace sj
