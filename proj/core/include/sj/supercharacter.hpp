#pragma once

#include <optional>
#include <vector>

#include "sj/laurent.hpp"
#include "sj/partition.hpp"
#include "sj/rational.hpp"

namespace sj {

// Supercharacters of osp(2,2n) modules as Laurent polynomials in
// x = e^ε, y_j = e^{δ_j} (variable 0 is x, 1..n are the y's) — the same
// variable layout the polynomial engine uses, so identities compare directly.
using CharElem = LaurentPoly<Rational>;

// Integer weight χ = e·ε + Σ d_j·δ_j.
struct Weight {
  int e = 0;
  std::vector<int> d;  // length n

  bool dominant() const {
    for (size_t i = 1; i < d.size(); ++i)
      if (d[i] > d[i - 1]) return false;
    return d.empty() || d.back() >= 0;
  }
};

// Odd root ε + sign·δ_i (sign = ±1, i 1-based).
struct OddRoot {
  int i = 1;
  int sign = 1;
};

// Alternation over W_0 = S_n ⋉ Z_2^n acting on the y's, with the type-C sign
// (permutation parity times the number of sign flips); x is untouched.
CharElem alternate(const CharElem& f);

// Π over positive even roots of (e^{α/2} - e^{-α/2}); equals alternate(e^ρ0).
CharElem weyl_denominator(int n);

// χ_λ = λ_1 ε + Σ μ'_j δ_j with μ = λ minus its first row.
Weight chi_of(const Partition& lambda, int n);

// The unique α in R1+ with (χ+ρ, α) = 0, if any.
std::optional<OddRoot> atypical_root(const Weight& chi, int n);

CharElem kac_sch(const Weight& chi, int n);  // sch K(χ) = {K_χ}/L_0
CharElem irr_sch(const Weight& chi, int n);  // Van der Jeugt sch L(χ)
// sch of the irreducible with λ_1 <= n via the alternant of
// y^{μ'+ρ0} Π_{i<=λ_1} (u - v_i); cross-checks irr_sch.
CharElem ls_formula(const Partition& lambda, int n);

CharElem theta(const CharElem& f);  // x <-> x^{-1}

CharElem e_sch(const Partition& lambda, int n);
CharElem l_sch(const Partition& lambda, int n);

// sch E(box) * sch E(λ) = Σ d_{λ,μ} sch E(μ) with the 0/2/±1 coefficient table.
bool euler_pieri_check(const Partition& lambda, int n);
Rational euler_d_coeff(const Partition& lambda, const Partition& mu, int n);

// sch K(χ_λ) = sch L(χ_λ) + (-1)^{s(λ)-s(λ#)} sch L(χ_{λ#}) for singular λ.
bool kac_decomposition_check(const Partition& lambda, int n);
// The telescoped alternating expansion along the sharp chain.
bool kac_alternating_expansion_check(const Partition& lambda, int n);

}  // namespace sj
