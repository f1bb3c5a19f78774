#pragma once

#include <optional>
#include <vector>

#include "sj/factored.hpp"
#include "sj/partition.hpp"
#include "sj/unipoly.hpp"

namespace sj {

enum class HookKind { C0, CMinus, CPlus };

// Π over boxes of c^0/c^-/c^+ evaluated at the affine argument x.
FactoredRational hook_product(const Partition& p, const AffineForm& x, HookKind kind);

// J_λ(1) = 4^{|λ|} C0(h+p/2+q) C0(k+h-p/2+1/2) / (C-(-k) C+(2h-1)).
FactoredRational j_norm(const Partition& p, const ParamCtx& ctx);

// The single-box transition products V_μ(λ); a_i = λ_i + k i is always read
// from the base partition λ (rows beyond l(λ) contribute λ_i = 0).
FactoredRational v_coeff(const Partition& lambda, const Partition& mu, const ParamCtx& ctx);

// Pieri coefficient a_{λ,μ}. Off-diagonal values are pure factored products;
// the diagonal is the one non-product coefficient and is kept as an
// evaluatable sum -k^{-1}(2h+p+2q) - Σ V_μ(λ).
class PieriCoeff {
 public:
  static PieriCoeff off_diagonal(FactoredRational v);
  static PieriCoeff diagonal(FactoredRational affine, std::vector<FactoredRational> vs);

  bool is_diagonal() const { return diagonal_; }
  const FactoredRational& factored() const;  // throws logic_error on diagonal

  // p := t(k+1); the diagonal expands into a UniRational sum here.
  UniRational substitute(const Rational& t) const;
  // p := p0 with k kept symbolic.
  UniRational substitute_p(const Rational& p0) const;
  ExtendedScalar eval(const Rational& k, const Rational& p) const;
  ExtendedScalar blowup(const ExtendedScalar& t) const;

 private:
  bool diagonal_ = false;
  FactoredRational off_;
  FactoredRational diag_affine_;
  std::vector<FactoredRational> diag_vs_;
};

PieriCoeff a_coeff(const Partition& lambda, const Partition& mu, const ParamCtx& ctx);

// The factored split a_{λ,μ} = a^(1) a^(2): a^(2) carries all p-dependence.
FactoredRational a2_factored(const Partition& lambda, const Partition& mu, const ParamCtx& ctx);

// k -> -1 with p symbolic (off-diagonal pairs).
PSymbolicLimit a_limit(const Partition& lambda, const Partition& mu, int n);
// Total evaluator of lim_{k->-1} a_{λ,μ}(k, p0), diagonal included.
ExtendedScalar a_limit_eval(const Partition& lambda, const Partition& mu, int n,
                            const Rational& p0);
// Closed forms of the k -> -1 limit for cross-checking: the remove-case
// product and the diagonal sum, as functions of a fixed p0 (q = 0).
Rational a_limit_closed_remove(const Partition& lambda, int row, int n, const Rational& p0);
Rational a_limit_closed_diagonal(const Partition& lambda, int n, const Rational& p0);

// Blow-up value of a_{λ,μ} at parameter t (Infinity allowed).
ExtendedScalar a_blowup(const Partition& lambda, const Partition& mu,
                        const ExtendedScalar& t, int n);

// b_λ: the product of Pieri coefficients along the deletion chain
// λ^(0), ..., λ^(r) (first r first-row boxes, then r boxes from row λ'_j).
FactoredRational b_factored(const Partition& lambda, const ParamCtx& ctx);
// Its blow-up closed form: 2/t when λ'_j = 1, (t-λ'_j+2)/(t-λ'_j+1) otherwise.
ExtendedScalar b_coeff_blowup(const Partition& lambda, const ExtendedScalar& t, int n);
// The same value computed from the chain product (cross-check route).
ExtendedScalar b_chain_blowup(const Partition& lambda, const ExtendedScalar& t, int n);

}  // namespace sj
