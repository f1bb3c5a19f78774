#include "sj/supercharacter.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "sj/errors.hpp"

namespace sj {

namespace {

std::vector<int> weight_exps(const Weight& chi, int n) {
  std::vector<int> e(1 + n, 0);
  e[0] = chi.e;
  for (int j = 0; j < n; ++j) e[1 + j] = j < static_cast<int>(chi.d.size()) ? chi.d[j] : 0;
  return e;
}

int permutation_parity(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t a = 0; a < perm.size(); ++a)
    for (size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

// rho_0 as y-exponents: (n, n-1, ..., 1).
std::vector<int> rho0_exps(int n) {
  std::vector<int> e(1 + n, 0);
  for (int j = 1; j <= n; ++j) e[j] = n + 1 - j;
  return e;
}

CharElem one_minus_exp(int n, int xe, int ye_index, int ye) {
  // 1 - x^{xe} y_i^{ye}
  CharElem out(1 + n);
  out.add_term(std::vector<int>(1 + n, 0), Rational(1));
  std::vector<int> e(1 + n, 0);
  e[0] = xe;
  e[ye_index] = ye;
  out.add_term(std::move(e), Rational(-1));
  return out;
}

// Product of (1 - e^{-α}) over α in R1+ = {ε ± δ_i}, optionally omitting one.
CharElem odd_root_product(int n, const std::optional<OddRoot>& omit) {
  CharElem out = CharElem::constant(1 + n, Rational(1));
  for (int i = 1; i <= n; ++i) {
    for (int s : {+1, -1}) {
      if (omit && omit->i == i && omit->sign == s) continue;
      out = out * one_minus_exp(n, -1, i, -s);
    }
  }
  return out;
}

}  // namespace

CharElem alternate(const CharElem& f) {
  const int n = f.nvars() - 1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CharElem out(f.nvars());
  do {
    int psign = permutation_parity(perm);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      int sign = psign * (__builtin_popcount(mask) % 2 == 0 ? 1 : -1);
      CharElem moved = f.map_exponents([&](const std::vector<int>& e) {
        std::vector<int> out_e(e.size());
        out_e[0] = e[0];
        for (int j = 0; j < n; ++j) {
          int img = perm[j];
          out_e[1 + img] = (mask >> img) & 1 ? -e[1 + j] : e[1 + j];
        }
        return out_e;
      });
      out += sign > 0 ? moved : -moved;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

CharElem weyl_denominator(int n) {
  const int nv = 1 + n;
  CharElem out = CharElem::constant(nv, Rational(1));
  auto root_factor = [&](int i, int j, int si, int sj) {
    // e^{si δ_i + sj δ_j} - 1 (j = 0 encodes a single-δ root)
    CharElem f(nv);
    std::vector<int> e(nv, 0);
    e[i] = si;
    if (j) e[j] += sj;
    f.add_term(std::move(e), Rational(1));
    f.add_term(std::vector<int>(nv, 0), Rational(-1));
    return f;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      out = out * root_factor(i, j, 1, -1);
      out = out * root_factor(i, j, 1, 1);
    }
  for (int i = 1; i <= n; ++i) out = out * root_factor(i, i, 1, 1);  // 2δ_i
  // Multiply by e^{-ρ0} to restore the half-root normalization.
  std::vector<int> rho = rho0_exps(n);
  return out.map_exponents([&](const std::vector<int>& e) {
    std::vector<int> out_e = e;
    for (int j = 1; j <= n; ++j) out_e[j] -= rho[j];
    return out_e;
  });
}

Weight chi_of(const Partition& lambda, int n) {
  Weight chi;
  chi.e = lambda.part(1);
  chi.d.assign(n, 0);
  for (int j = 1; j <= n; ++j) {
    int count = 0;
    for (int i = 2; i <= lambda.length(); ++i)
      if (lambda.part(i) >= j) ++count;
    chi.d[j - 1] = count;
  }
  return chi;
}

std::optional<OddRoot> atypical_root(const Weight& chi, int n) {
  const long c0 = chi.e - n;
  std::optional<OddRoot> found;
  for (int i = 1; i <= n; ++i) {
    long ci = (i <= static_cast<int>(chi.d.size()) ? chi.d[i - 1] : 0) + n + 1 - i;
    for (int s : {+1, -1}) {
      if (c0 - s * ci != 0) continue;
      if (found)
        throw MultipleAtypicalRoots("weight has two atypical roots");
      found = OddRoot{i, s};
    }
  }
  return found;
}

CharElem kac_sch(const Weight& chi, int n) {
  Weight shifted = chi;
  CharElem k = odd_root_product(n, std::nullopt);
  std::vector<int> top = weight_exps(chi, n);
  for (int j = 1; j <= n; ++j) top[j] += n + 1 - j;  // + ρ0
  k = k.map_exponents([&](const std::vector<int>& e) {
    std::vector<int> out_e = e;
    for (size_t i = 0; i < out_e.size(); ++i) out_e[i] += top[i];
    return out_e;
  });
  return CharElem::exact_div(alternate(k), weyl_denominator(n));
}

CharElem irr_sch(const Weight& chi, int n) {
  std::optional<OddRoot> alpha = atypical_root(chi, n);
  if (!alpha) return kac_sch(chi, n);
  CharElem k = odd_root_product(n, alpha);
  std::vector<int> top = weight_exps(chi, n);
  for (int j = 1; j <= n; ++j) top[j] += n + 1 - j;
  k = k.map_exponents([&](const std::vector<int>& e) {
    std::vector<int> out_e = e;
    for (size_t i = 0; i < out_e.size(); ++i) out_e[i] += top[i];
    return out_e;
  });
  return CharElem::exact_div(alternate(k), weyl_denominator(n));
}

CharElem ls_formula(const Partition& lambda, int n) {
  if (lambda.part(1) > n)
    throw std::invalid_argument("ls_formula needs lambda_1 <= n");
  const int nv = 1 + n;
  Weight chi = chi_of(lambda, n);
  std::vector<int> top(nv, 0);
  for (int j = 1; j <= n; ++j) top[j] = chi.d[j - 1] + n + 1 - j;  // μ' + ρ0
  CharElem f = CharElem::monomial(nv, top, Rational(1));
  for (int i = 1; i <= lambda.part(1); ++i) {
    // u - v_i = x + x^{-1} - y_i - y_i^{-1}
    CharElem uv(nv);
    for (int s : {+1, -1}) {
      uv.add_term([&] { std::vector<int> e(nv, 0); e[0] = s; return e; }(), Rational(1));
      uv.add_term([&] { std::vector<int> e(nv, 0); e[i] = s; return e; }(), Rational(-1));
    }
    f = f * uv;
  }
  return CharElem::exact_div(alternate(f), weyl_denominator(n));
}

CharElem theta(const CharElem& f) {
  return f.map_exponents([](const std::vector<int>& e) {
    std::vector<int> out_e = e;
    out_e[0] = -out_e[0];
    return out_e;
  });
}

CharElem e_sch(const Partition& lambda, int n) {
  Weight chi = chi_of(lambda, n);
  if (lambda.part(1) <= n) return irr_sch(chi, n);
  CharElem k = kac_sch(chi, n);
  return k + theta(k);
}

CharElem l_sch(const Partition& lambda, int n) {
  Weight chi = chi_of(lambda, n);
  if (lambda.part(1) <= n) return irr_sch(chi, n);
  CharElem l = irr_sch(chi, n);
  return l + theta(l);
}

Rational euler_d_coeff(const Partition& lambda, const Partition& mu, int n) {
  if (lambda == mu) return Rational(0);
  auto change = box_change(lambda, mu);
  if (!change) throw NotInS("euler_d_coeff: not a single-box move");
  if (!change->add && change->box.row == 1) {
    if (lambda.part(1) == n) return Rational(0);
    if (lambda.part(1) == n + 1) return Rational(2);
  }
  int ds = s_stat(lambda) - s_stat(mu);
  return Rational(ds % 2 == 0 ? 1 : -1);
}

bool euler_pieri_check(const Partition& lambda, int n) {
  CharElem lhs = e_sch(Partition({1}), n) * e_sch(lambda, n);
  CharElem rhs(1 + n);
  auto [adds, removes] = add_remove_sets(lambda, 1, n);
  for (const auto& mu : adds) rhs += e_sch(mu, n).scaled(euler_d_coeff(lambda, mu, n));
  for (const auto& mu : removes) rhs += e_sch(mu, n).scaled(euler_d_coeff(lambda, mu, n));
  return lhs == rhs;
}

bool kac_decomposition_check(const Partition& lambda, int n) {
  DiagramClass cls = classify(lambda, n);
  if (!cls.singular) throw NotSingular("kac_decomposition_check: regular diagram");
  Partition sh = sharp(lambda, n);
  int ds = s_stat(lambda) - s_stat(sh);
  CharElem rhs = irr_sch(chi_of(lambda, n), n) +
                 irr_sch(chi_of(sh, n), n).scaled(Rational(ds % 2 == 0 ? 1 : -1));
  return kac_sch(chi_of(lambda, n), n) == rhs;
}

bool kac_alternating_expansion_check(const Partition& lambda, int n) {
  DiagramClass cls = classify(lambda, n);
  if (!cls.singular) throw NotSingular("kac_alternating_expansion_check: regular diagram");
  std::vector<Partition> chain = sharp_chain(lambda, n);
  const int l = static_cast<int>(chain.size()) - 1;
  auto sgn = [](int v) { return Rational(v % 2 == 0 ? 1 : -1); };
  CharElem rhs(1 + n);
  for (int s = 0; s < l; ++s)
    rhs += kac_sch(chi_of(chain[s], n), n).scaled(sgn(s) * sgn(s_stat(chain[s])));
  rhs += irr_sch(chi_of(chain[l], n), n).scaled(sgn(l) * sgn(s_stat(chain[l])));
  CharElem lhs = irr_sch(chi_of(lambda, n), n).scaled(sgn(s_stat(lambda)));
  return lhs == rhs;
}

}  // namespace sj
