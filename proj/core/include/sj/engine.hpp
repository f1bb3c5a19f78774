#pragma once

#include <map>
#include <vector>

#include "sj/laurent.hpp"
#include "sj/partition.hpp"
#include "sj/pieri.hpp"
#include "sj/unipoly.hpp"

namespace sj {

// Scalar bundle for the deformed CMS operator at m = 1, q = 0. The parameter
// relations kr = p and 2ks = 1-k have already been substituted, so every
// operator coefficient is polynomial in k and the scalars live in a ring.
template <class C>
struct CmsScalars {
  C k, p, one_minus_k;
};

inline CmsScalars<UniPoly> cms_symbolic(const Rational& t) {
  return {UniPoly::var(), UniPoly::linear(t, t), UniPoly::linear(Rational(-1), Rational(1))};
}
inline CmsScalars<Rational> cms_specialized() {
  return {Rational(-1), Rational(0), Rational(2)};
}

// Applies the deformed CMS operator term by term: each fraction is a product
// with the numerator binomial followed by an exact division by the
// denominator binomial. Variables: index 0 is x, indices 1..n are y_1..y_n.
template <class C>
LaurentPoly<C> apply_cms(const LaurentPoly<C>& f, const CmsScalars<C>& par);

// Laurent polynomial over Q[k] with one common monic denominator. This is the
// engine's working form of a polynomial with UniRational coefficients: all
// CMS divisors have unit coefficients and all multipliers are polynomial in
// k, so ring operations never need per-coefficient gcds.
struct SymLaurent {
  LaurentPoly<UniPoly> num;
  UniPoly den;

  explicit SymLaurent(int nvars = 0)
      : num(nvars), den(UniPoly(Rational(1))) {}
  SymLaurent(LaurentPoly<UniPoly> n, UniPoly d);

  bool is_zero() const { return num.is_zero(); }
  int nvars() const { return num.nvars(); }

  void normalize();  // cancel the common polynomial content, make den monic
  SymLaurent operator+(const SymLaurent& o) const;
  SymLaurent operator-(const SymLaurent& o) const;
  SymLaurent scaled(const UniRational& s) const;
  bool operator==(const SymLaurent& o) const;

  UniRational coeff(const std::vector<int>& e) const;
  // Coefficientwise limit k -> -1; throws PoleAtLimit if any coefficient
  // diverges (expected exactly at the excluded specialization points).
  LaurentPoly<Rational> limit_at_minus1() const;
  // True iff every coefficient has a finite limit at k -> -1.
  bool regular_at_minus1() const;
};

using JBasisCombo = std::map<Partition, UniRational>;

// Builds super Jacobi polynomials at a fixed rational blow-up slope t
// (p = t(k+1), k symbolic) by the spectral-projector Pieri recursion, and the
// translation-functor constructions on top of them.
class JacobiEngine {
 public:
  JacobiEngine(int n, Rational t);

  int n() const { return n_; }
  const Rational& t() const { return t_; }

  const SymLaurent& jacobi(const Partition& p);

  // a_{λ,μ}(k) after p = t(k+1); zero coefficients are preserved as zeros.
  UniRational pieri_coeff(const Partition& lambda, const Partition& mu);
  // All of S(λ) ∩ H(1,n) with nonzero coefficient, diagonal included.
  std::vector<std::pair<Partition, UniRational>> pieri_row(const Partition& lambda);

  // F_i(f) = P_i(p_1 f): Pieri-expand every term and keep the c̃ = target part.
  JBasisCombo translate(const JBasisCombo& combo, long target);
  // I_λ by the literal translation recursion (memoized).
  const JBasisCombo& i_combo(const Partition& p);

  SymLaurent p1_times(const SymLaurent& f) const;
  SymLaurent apply_operator(const SymLaurent& f) const;
  SymLaurent realize(const JBasisCombo& combo);

  // Route A specialization: coefficientwise limit of the symbolic build.
  LaurentPoly<Rational> specialize(const Partition& p);

  UniPoly eigen_poly(const Partition& p) const;  // c_λ(k) at this t

 private:
  const SymLaurent& build(const Partition& p);

  int n_;
  Rational t_;
  CmsScalars<UniPoly> par_;
  std::map<Partition, SymLaurent> cache_;
  std::map<Partition, JBasisCombo> icache_;
};

// Builds the t = infinity family (the k = -1, p = q = 0 limit) directly with
// rational scalars. Eigenvalue collisions of c̃ are resolved by subtracting
// the already-known colliding component, which the collision lemma guarantees
// is a smaller diagram.
class InfinityEngine {
 public:
  explicit InfinityEngine(int n);

  int n() const { return n_; }
  const LaurentPoly<Rational>& sj_infinity(const Partition& p);

  LaurentPoly<Rational> p1_times(const LaurentPoly<Rational>& f) const;
  LaurentPoly<Rational> apply_operator(const LaurentPoly<Rational>& f) const;

  // The limit Pieri table: 1 for adds and interior removes, 0/2 at the
  // first-row walls λ_1 = n / n+1, 0 on the diagonal.
  static Rational limit_coeff(const Partition& lambda, const Partition& mu, int n);

 private:
  LaurentPoly<Rational> build(const Partition& p);

  int n_;
  CmsScalars<Rational> par_;
  std::map<Partition, LaurentPoly<Rational>> cache_;
};

// Route B: SJ_λ(t) assembled from the infinity family along the sharp chain.
LaurentPoly<Rational> sj_via_formula(InfinityEngine& eng, const Partition& lambda,
                                     const ExtendedScalar& t);
// SI_λ from the infinity family (t-independent).
LaurentPoly<Rational> si_poly(InfinityEngine& eng, const Partition& lambda);

}  // namespace sj
