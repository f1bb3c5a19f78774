#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <vector>

#include "sj/errors.hpp"
#include "sj/rational.hpp"
#include "sj/unipoly.hpp"

namespace sj {

// Finitely supported Laurent polynomial in nvars variables, generic over the
// coefficient scalar (Rational for characters and specialized polynomials,
// UniPoly/UniRational for the symbolic-k engine). Terms are kept in a map
// under lexicographic exponent order; no zero coefficient is ever stored.
template <class C>
class LaurentPoly {
 public:
  using Exps = std::vector<int>;
  using TermMap = std::map<Exps, C>;

  explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, C value) {
    LaurentPoly out(nvars);
    out.add_term(Exps(nvars, 0), std::move(value));
    return out;
  }
  static LaurentPoly monomial(int nvars, Exps e, C value) {
    assert(static_cast<int>(e.size()) == nvars);
    LaurentPoly out(nvars);
    out.add_term(std::move(e), std::move(value));
    return out;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  const C* coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
  }

  void add_term(Exps e, C value) {
    if (sj::is_zero(value)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), std::move(value));
    } else {
      it->second += value;
      if (sj::is_zero(it->second)) terms_.erase(it);
    }
  }

  LaurentPoly operator-() const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    assert(nvars_ == o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    assert(nvars_ == o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    out += o;
    return out;
  }
  LaurentPoly operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    out -= o;
    return out;
  }

  LaurentPoly operator*(const LaurentPoly& o) const {
    assert(nvars_ == o.nvars_);
    LaurentPoly out(nvars_);
    Exps e(nvars_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  template <class S>
  LaurentPoly scaled(const S& s) const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
  }

  // Multiplication by value * x^delta, one variable at a time kept cheap.
  LaurentPoly shifted(int var, int delta, const C& value) const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      Exps e2 = e;
      e2[var] += delta;
      out.add_term(std::move(e2), c * value);
    }
    return out;
  }

  // Euler derivative x_var * d/dx_var: multiplies each term by its exponent.
  LaurentPoly derivative(int var) const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      out.add_term(e, c * Rational(e[var]));
    }
    return out;
  }

  // Applies an exponent substitution (signed permutation or inversion);
  // fn must be injective on the support.
  LaurentPoly map_exponents(const std::function<Exps(const Exps&)>& fn) const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(fn(e), c);
    return out;
  }

  template <class C2, class Fn>
  LaurentPoly<C2> map_coeffs(Fn fn) const {
    LaurentPoly<C2> out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, fn(c));
    return out;
  }

  bool operator==(const LaurentPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Exact division, leading-term elimination under lex order. Termination and
  // inexactness detection use the support box of any exact quotient: per
  // coordinate, min(q) = min(f) - min(g) and max(q) = max(f) - max(g).
  static LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    assert(f.nvars_ == g.nvars_);
    if (g.is_zero()) throw DivisionNotExact("laurent: division by zero");
    if (f.is_zero()) return LaurentPoly(f.nvars_);
    const int nv = f.nvars_;
    Exps qmin(nv), qmax(nv);
    {
      Exps fmin, fmax, gmin, gmax;
      f.support_box(fmin, fmax);
      g.support_box(gmin, gmax);
      for (int i = 0; i < nv; ++i) {
        qmin[i] = fmin[i] - gmin[i];
        qmax[i] = fmax[i] - gmax[i];
        if (qmin[i] > qmax[i]) throw DivisionNotExact("laurent: support box mismatch");
      }
    }
    const Exps glead_exp = g.terms_.rbegin()->first;
    const C glead_coeff = g.terms_.rbegin()->second;
    LaurentPoly q(nv), r = f;
    Exps m(nv);
    while (!r.is_zero()) {
      const Exps rlead_exp = r.terms_.rbegin()->first;
      const C rlead_coeff = r.terms_.rbegin()->second;
      for (int i = 0; i < nv; ++i) {
        m[i] = rlead_exp[i] - glead_exp[i];
        if (m[i] < qmin[i] || m[i] > qmax[i])
          throw DivisionNotExact("laurent: quotient leaves support box");
      }
      C coeff = sj::div_exact(rlead_coeff, glead_coeff);
      for (const auto& [ge, gc] : g.terms_) {
        Exps e(nv);
        for (int i = 0; i < nv; ++i) e[i] = m[i] + ge[i];
        r.add_term(std::move(e), -(coeff * gc));
      }
      q.add_term(m, std::move(coeff));
    }
    return q;
  }

 private:
  void support_box(Exps& mn, Exps& mx) const {
    mn.assign(nvars_, 0);
    mx.assign(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (int i = 0; i < nvars_; ++i) {
        if (first || e[i] < mn[i]) mn[i] = e[i];
        if (first || e[i] > mx[i]) mx[i] = e[i];
      }
      first = false;
    }
  }

  int nvars_;
  TermMap terms_;
};

template <class C>
LaurentPoly<C> laurent_exact_div(const LaurentPoly<C>& f, const LaurentPoly<C>& g) {
  return LaurentPoly<C>::exact_div(f, g);
}

}  // namespace sj
