#include "sj/engine.hpp"

#include <cassert>
#include <set>

#include "sj/errors.hpp"

namespace sj {

namespace {

template <class C>
LaurentPoly<C> binomial(int nvars, std::vector<int> e1, std::vector<int> e2, const Rational& c2) {
  LaurentPoly<C> out(nvars);
  out.add_term(std::move(e1), C(Rational(1)));
  out.add_term(std::move(e2), C(c2));
  return out;
}

std::vector<int> unit(int nvars, int var, int e) {
  std::vector<int> out(nvars, 0);
  out[var] = e;
  return out;
}

std::vector<int> unit2(int nvars, int v1, int e1, int v2, int e2) {
  std::vector<int> out(nvars, 0);
  out[v1] = e1;
  out[v2] = e2;
  return out;
}

}  // namespace

template <class C>
LaurentPoly<C> apply_cms(const LaurentPoly<C>& f, const CmsScalars<C>& par) {
  using LP = LaurentPoly<C>;
  const int nv = f.nvars();
  const int n = nv - 1;
  const Rational one(1), minus_one(-1);

  LP dx = f.derivative(0);
  std::vector<LP> dy;
  dy.reserve(n);
  for (int j = 0; j < n; ++j) dy.push_back(f.derivative(1 + j));

  LP out = dx.derivative(0);
  for (int j = 0; j < n; ++j) out += dy[j].derivative(1 + j).scaled(par.k);

  // y_i / y_j interaction
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int vi = 1 + i, vj = 1 + j;
      LP diff = dy[i] - dy[j];
      LP sum = dy[i] + dy[j];
      LP t1 = LP::exact_div(binomial<C>(nv, unit(nv, vi, 1), unit(nv, vj, 1), one) * diff,
                            binomial<C>(nv, unit(nv, vi, 1), unit(nv, vj, 1), minus_one));
      LP t2 = LP::exact_div(binomial<C>(nv, unit2(nv, vi, 1, vj, 1), unit(nv, 0, 0) /*1*/, one) * sum,
                            binomial<C>(nv, unit2(nv, vi, 1, vj, 1), unit(nv, 0, 0), minus_one));
      out -= t1;
      out -= t2;
    }

  // x self-interaction (the 2q term is identically zero at q = 0)
  {
    LP t = LP::exact_div(binomial<C>(nv, unit(nv, 0, 1), unit(nv, 0, 0), one) * dx,
                         binomial<C>(nv, unit(nv, 0, 1), unit(nv, 0, 0), minus_one));
    out -= t.scaled(par.p);
  }

  // y_j self-interaction
  for (int j = 0; j < n; ++j) {
    const int vj = 1 + j;
    LP t1 = LP::exact_div(binomial<C>(nv, unit(nv, vj, 1), unit(nv, vj, 0), one) * dy[j],
                          binomial<C>(nv, unit(nv, vj, 1), unit(nv, vj, 0), minus_one));
    out -= t1.scaled(par.p);
    LP t2 = LP::exact_div(binomial<C>(nv, unit(nv, vj, 2), unit(nv, vj, 0), one) * dy[j],
                          binomial<C>(nv, unit(nv, vj, 2), unit(nv, vj, 0), minus_one));
    out -= t2.scaled(par.one_minus_k);
  }

  // x / y_j interaction
  for (int j = 0; j < n; ++j) {
    const int vj = 1 + j;
    LP a = dx - dy[j].scaled(par.k);
    LP b = dx + dy[j].scaled(par.k);
    out -= LP::exact_div(binomial<C>(nv, unit(nv, 0, 1), unit(nv, vj, 1), one) * a,
                         binomial<C>(nv, unit(nv, 0, 1), unit(nv, vj, 1), minus_one));
    out -= LP::exact_div(binomial<C>(nv, unit2(nv, 0, 1, vj, 1), unit(nv, 0, 0), one) * b,
                         binomial<C>(nv, unit2(nv, 0, 1, vj, 1), unit(nv, 0, 0), minus_one));
  }
  return out;
}

template LaurentPoly<UniPoly> apply_cms(const LaurentPoly<UniPoly>&, const CmsScalars<UniPoly>&);
template LaurentPoly<Rational> apply_cms(const LaurentPoly<Rational>&, const CmsScalars<Rational>&);

SymLaurent::SymLaurent(LaurentPoly<UniPoly> n, UniPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw DivisionNotExact("SymLaurent: zero denominator");
  normalize();
}

void SymLaurent::normalize() {
  if (num.is_zero()) {
    den = UniPoly(Rational(1));
    return;
  }
  UniPoly g = den.monic();
  for (const auto& [e, c] : num.terms()) {
    if (g.degree() == 0) break;
    g = UniPoly::gcd(g, c);
  }
  if (g.degree() > 0) {
    num = num.template map_coeffs<UniPoly>([&](const UniPoly& c) { return UniPoly::div_exact(c, g); });
    den = UniPoly::div_exact(den, g);
  }
  Rational lead = den.leading();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num = num.scaled(inv);
    den = den * inv;
  }
}

SymLaurent SymLaurent::operator+(const SymLaurent& o) const {
  assert(nvars() == o.nvars());
  if (den == o.den) return SymLaurent(num + o.num, den);
  return SymLaurent(num.scaled(o.den) + o.num.scaled(den), den * o.den);
}

SymLaurent SymLaurent::operator-(const SymLaurent& o) const {
  assert(nvars() == o.nvars());
  if (den == o.den) return SymLaurent(num - o.num, den);
  return SymLaurent(num.scaled(o.den) - o.num.scaled(den), den * o.den);
}

SymLaurent SymLaurent::scaled(const UniRational& s) const {
  if (s.is_zero() || is_zero()) return SymLaurent(nvars());
  return SymLaurent(num.scaled(s.num()), den * s.den());
}

bool SymLaurent::operator==(const SymLaurent& o) const {
  if (den == o.den) return num == o.num;
  return num.scaled(o.den) == o.num.scaled(den);
}

UniRational SymLaurent::coeff(const std::vector<int>& e) const {
  const UniPoly* c = num.coeff(e);
  if (!c) return UniRational(Rational(0));
  return UniRational(*c, den);
}

LaurentPoly<Rational> SymLaurent::limit_at_minus1() const {
  LaurentPoly<Rational> out(nvars());
  const Rational at(-1);
  Rational dval = den.eval(at);
  if (!sj::is_zero(dval)) {
    for (const auto& [e, c] : num.terms()) out.add_term(e, c.eval(at) / dval);
    return out;
  }
  for (const auto& [e, c] : num.terms()) {
    ExtendedScalar v = uni_limit(UniRational(c, den), at);
    if (!v.is_finite())
      throw PoleAtLimit("coefficient limit diverges at k=-1");
    out.add_term(e, v.value());
  }
  return out;
}

bool SymLaurent::regular_at_minus1() const {
  const Rational at(-1);
  if (!sj::is_zero(den.eval(at))) return true;
  for (const auto& [e, c] : num.terms())
    if (uni_limit(UniRational(c, den), at).is_infinite()) return false;
  return true;
}

JacobiEngine::JacobiEngine(int n, Rational t)
    : n_(n), t_(std::move(t)), par_(cms_symbolic(t_)) {}

UniPoly JacobiEngine::eigen_poly(const Partition& p) const {
  return eigenvalue(p, ParamCtx{1, n_}).substitute_t(t_);
}

const SymLaurent& JacobiEngine::jacobi(const Partition& p) {
  auto it = cache_.find(p);
  if (it != cache_.end()) return it->second;
  return build(p);
}

const SymLaurent& JacobiEngine::build(const Partition& p) {
  const int nv = 1 + n_;
  if (p.empty()) {
    SymLaurent one(nv);
    one.num = LaurentPoly<UniPoly>::constant(nv, UniPoly(Rational(1)));
    return cache_.emplace(p, std::move(one)).first->second;
  }
  if (!in_hook(p, 1, n_))
    throw std::invalid_argument("jacobi: " + p.str() + " outside H(1," + std::to_string(n_) + ")");

  // Canonical parent: remove the bottom-most removable corner.
  Box corner = p.removable_boxes().back();
  Partition parent = p.without_box(corner);
  const SymLaurent& jp = jacobi(parent);

  // Members of S(parent) ∩ H and their eigenvalue polynomials in k. The
  // recursion needs all pairwise differences nonzero; at non-integer t this
  // holds automatically, at integer t it is a genuine runtime check.
  auto [adds, removes] = add_remove_sets(parent, 1, n_);
  std::vector<Partition> s_set{parent};
  s_set.insert(s_set.end(), adds.begin(), adds.end());
  s_set.insert(s_set.end(), removes.begin(), removes.end());
  std::vector<UniPoly> c_polys;
  c_polys.reserve(s_set.size());
  for (const auto& nu : s_set) c_polys.push_back(eigen_poly(nu));
  for (size_t a = 0; a < s_set.size(); ++a)
    for (size_t b = a + 1; b < s_set.size(); ++b)
      if (c_polys[a] == c_polys[b])
        throw DegenerateParameters("c_" + s_set[a].str() + " = c_" + s_set[b].str() +
                                   " at t=" + to_string(t_) + ", n=" + std::to_string(n_));

  UniPoly c_target = eigen_poly(p);
  SymLaurent g = p1_times(jp);
  for (size_t a = 0; a < s_set.size(); ++a) {
    if (s_set[a] == p) continue;
    g.num = apply_cms(g.num, par_) - g.num.scaled(c_polys[a]);
    g.den = g.den * (c_target - c_polys[a]);
  }
  UniRational a_val = pieri_coeff(parent, p);
  if (a_val.is_zero())
    throw DegenerateParameters("a_{" + parent.str() + "," + p.str() + "} vanishes at t=" +
                               to_string(t_));
  g.num = g.num.scaled(a_val.den());
  g.den = g.den * a_val.num();
  g.normalize();
  return cache_.emplace(p, std::move(g)).first->second;
}

SymLaurent JacobiEngine::p1_times(const SymLaurent& f) const {
  // p_1 = x + x^{-1} + k^{-1} Σ (y_j + y_j^{-1}); multiply by k and push the
  // k into the denominator.
  const int nv = f.nvars();
  const UniPoly one(Rational(1));
  LaurentPoly<UniPoly> num =
      (f.num.shifted(0, 1, one) + f.num.shifted(0, -1, one)).scaled(par_.k);
  for (int j = 1; j < nv; ++j) num += f.num.shifted(j, 1, one) + f.num.shifted(j, -1, one);
  return SymLaurent(std::move(num), f.den * par_.k);
}

SymLaurent JacobiEngine::apply_operator(const SymLaurent& f) const {
  SymLaurent out(f.nvars());
  out.num = apply_cms(f.num, par_);
  out.den = f.den;
  return out;
}

UniRational JacobiEngine::pieri_coeff(const Partition& lambda, const Partition& mu) {
  return a_coeff(lambda, mu, ParamCtx{1, n_}).substitute(t_);
}

std::vector<std::pair<Partition, UniRational>> JacobiEngine::pieri_row(const Partition& lambda) {
  std::vector<std::pair<Partition, UniRational>> out;
  auto [adds, removes] = add_remove_sets(lambda, 1, n_);
  for (const auto& mu : adds) out.emplace_back(mu, pieri_coeff(lambda, mu));
  for (const auto& mu : removes) out.emplace_back(mu, pieri_coeff(lambda, mu));
  out.emplace_back(lambda, pieri_coeff(lambda, lambda));
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

JBasisCombo JacobiEngine::translate(const JBasisCombo& combo, long target) {
  JBasisCombo out;
  for (const auto& [nu, cv] : combo) {
    for (const auto& [mu, a] : pieri_row(nu)) {
      if (tilde_c(mu, n_) != target) continue;
      auto it = out.find(mu);
      if (it == out.end()) out.emplace(mu, cv * a);
      else {
        it->second += cv * a;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

const JBasisCombo& JacobiEngine::i_combo(const Partition& p) {
  auto it = icache_.find(p);
  if (it != icache_.end()) return it->second;
  JBasisCombo combo;
  if (p.part(1) <= n_) {
    combo.emplace(p, UniRational(Rational(1)));
  } else {
    Partition mu = p.without_box({1, p.part(1)});
    combo = translate(i_combo(mu), tilde_c(p, n_));
  }
  return icache_.emplace(p, std::move(combo)).first->second;
}

SymLaurent JacobiEngine::realize(const JBasisCombo& combo) {
  SymLaurent out(1 + n_);
  for (const auto& [nu, cv] : combo) out = out + jacobi(nu).scaled(cv);
  return out;
}

LaurentPoly<Rational> JacobiEngine::specialize(const Partition& p) {
  return jacobi(p).limit_at_minus1();
}

InfinityEngine::InfinityEngine(int n) : n_(n), par_(cms_specialized()) {}

LaurentPoly<Rational> InfinityEngine::p1_times(const LaurentPoly<Rational>& f) const {
  const Rational one(1), minus_one(-1);
  LaurentPoly<Rational> out = f.shifted(0, 1, one) + f.shifted(0, -1, one);
  for (int j = 1; j < f.nvars(); ++j)
    out += f.shifted(j, 1, minus_one) + f.shifted(j, -1, minus_one);
  return out;
}

LaurentPoly<Rational> InfinityEngine::apply_operator(const LaurentPoly<Rational>& f) const {
  return apply_cms(f, par_);
}

Rational InfinityEngine::limit_coeff(const Partition& lambda, const Partition& mu, int n) {
  if (lambda == mu) return Rational(0);
  auto change = box_change(lambda, mu);
  if (!change) throw NotInS("limit_coeff: " + mu.str() + " not in S(" + lambda.str() + ")");
  if (change->add) return Rational(1);
  if (change->box.row == 1) {
    if (lambda.part(1) == n) return Rational(0);
    if (lambda.part(1) == n + 1) return Rational(2);
  }
  return Rational(1);
}

const LaurentPoly<Rational>& InfinityEngine::sj_infinity(const Partition& p) {
  auto it = cache_.find(p);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(p, build(p)).first->second;
}

LaurentPoly<Rational> InfinityEngine::build(const Partition& p) {
  const int nv = 1 + n_;
  if (p.empty()) return LaurentPoly<Rational>::constant(nv, Rational(1));
  if (!in_hook(p, 1, n_))
    throw std::invalid_argument("sj_infinity: " + p.str() + " outside H(1," + std::to_string(n_) + ")");

  Box corner = p.removable_boxes().back();
  Partition parent = p.without_box(corner);
  LaurentPoly<Rational> g = p1_times(sj_infinity(parent));

  auto [adds, removes] = add_remove_sets(parent, 1, n_);
  std::vector<Partition> s_set{parent};
  s_set.insert(s_set.end(), adds.begin(), adds.end());
  s_set.insert(s_set.end(), removes.begin(), removes.end());

  const long target = tilde_c(p, n_);
  std::set<long> other_values;
  for (const auto& nu : s_set)
    if (!(nu == p) && tilde_c(nu, n_) != target) other_values.insert(tilde_c(nu, n_));

  for (long v : other_values) {
    LaurentPoly<Rational> lg = apply_operator(g);
    g = (lg - g.scaled(Rational(v))).scaled(Rational(1) / Rational(target - v));
  }

  // Collision partners share the target eigenvalue; the collision lemma makes
  // them box-removals, hence already built. Subtract their contribution.
  for (const auto& nu : s_set) {
    if (nu == p || tilde_c(nu, n_) != target) continue;
    assert(nu.size() < p.size());
    Rational c = limit_coeff(parent, nu, n_);
    if (!sj::is_zero(c)) g -= sj_infinity(nu).scaled(c);
  }

  Rational lead = limit_coeff(parent, p, n_);
  assert(lead == 1);
  return g;
}

LaurentPoly<Rational> sj_via_formula(InfinityEngine& eng, const Partition& lambda,
                                     const ExtendedScalar& t) {
  const int n = eng.n();
  DiagramClass cls = classify(lambda, n);
  // Regular diagrams are t-independent, and every diagram agrees with the
  // infinity family at t = infinity.
  if (!cls.singular || !t.is_finite()) return eng.sj_infinity(lambda);
  std::vector<Partition> chain = sharp_chain(lambda, n);
  const int l = static_cast<int>(chain.size()) - 1;  // = λ'_j

  // SJ(t) = SJ(∞) + (1/(t-l+1)) * M with M independent of t.
  LaurentPoly<Rational> m(1 + n);
  int sign = -1;
  for (int s = 1; s <= l; ++s) {
    Rational w = (s == l) ? Rational(2 * sign) : Rational(sign);
    m += eng.sj_infinity(chain[s]).scaled(w);
    sign = -sign;
  }
  Rational den = t.value() - l + 1;
  if (sj::is_zero(den)) {
    if (!m.is_zero())
      throw PoleAtLimit("SJ_" + lambda.str() + "(t) has a pole at t=" + to_string(t.value()));
    return eng.sj_infinity(lambda);
  }
  return eng.sj_infinity(lambda) + m.scaled(Rational(1) / den);
}

LaurentPoly<Rational> si_poly(InfinityEngine& eng, const Partition& lambda) {
  DiagramClass cls = classify(lambda, eng.n());
  if (!cls.singular) return eng.sj_infinity(lambda);
  int l = lambda.conjugate().part(cls.j);
  if (l == 1) return eng.sj_infinity(lambda);
  return eng.sj_infinity(lambda) + eng.sj_infinity(sharp(lambda, eng.n()));
}

}  // namespace sj
