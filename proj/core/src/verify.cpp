#include "sj/verify.hpp"

#include <random>
#include <set>

#include "sj/errors.hpp"
#include "sj/supercharacter.hpp"

namespace sj {

namespace {

Rational sign_of(int parity) { return Rational(parity % 2 == 0 ? 1 : -1); }

std::string case_name(const Partition& p, int n) {
  return "lambda=" + p.str() + ", n=" + std::to_string(n);
}

}  // namespace

JacobiEngine& VerifyEnv::sym(int n, const Rational& t) {
  auto key = std::make_pair(n, to_string(t));
  auto it = sym_.find(key);
  if (it == sym_.end())
    it = sym_.emplace(key, std::make_unique<JacobiEngine>(n, t)).first;
  return *it->second;
}

InfinityEngine& VerifyEnv::inf(int n) {
  auto it = inf_.find(n);
  if (it == inf_.end()) it = inf_.emplace(n, std::make_unique<InfinityEngine>(n)).first;
  return *it->second;
}

CheckResult check_eigenfunction(VerifyEnv& env, int n, int max_size, const Rational& t) {
  CheckResult out{"eigenfunction n=" + std::to_string(n)};
  JacobiEngine& eng = env.sym(n, t);
  for (const Partition& p : hook_partitions(n, max_size)) {
    const SymLaurent& j = eng.jacobi(p);
    SymLaurent lhs = eng.apply_operator(j);
    if (lhs.num != j.num.scaled(eng.eigen_poly(p))) out.fail(case_name(p, n));
    ++out.cases;
  }
  return out;
}

CheckResult check_pieri(VerifyEnv& env, int n, int max_size, const Rational& t) {
  CheckResult out{"pieri n=" + std::to_string(n)};
  JacobiEngine& eng = env.sym(n, t);
  for (const Partition& p : hook_partitions(n, max_size)) {
    SymLaurent lhs = eng.p1_times(eng.jacobi(p));
    SymLaurent rhs(1 + n);
    for (const auto& [mu, a] : eng.pieri_row(p)) rhs = rhs + eng.jacobi(mu).scaled(a);
    if (!(lhs == rhs)) out.fail(case_name(p, n));
    ++out.cases;
  }
  return out;
}

CheckResult check_combinatorics(int n, int max_size) {
  CheckResult out{"combinatorics n=" + std::to_string(n)};
  std::vector<Partition> all = hook_partitions(n, max_size);

  for (const Partition& lam : all) {
    ++out.cases;
    // Eigenvalue routes agree, and tilde_c is their value at (-1, 0).
    AffineForm c1 = eigenvalue(lam, ParamCtx{1, n});
    AffineForm c2 = eigenvalue_boxsum(lam, n);
    if (!(c1 == c2)) out.fail("eigenvalue routes differ: " + case_name(lam, n));
    if (c1.eval(Rational(-1), Rational(0)) != Rational(tilde_c(lam, n)))
      out.fail("tilde_c mismatch: " + case_name(lam, n));

    // Collision law over the unrestricted S(λ).
    std::vector<std::pair<Partition, Box>> moves;
    for (const Box& b : lam.addable_boxes()) moves.emplace_back(lam.with_box(b), b);
    for (const Box& b : lam.removable_boxes()) moves.emplace_back(lam.without_box(b), b);
    for (size_t a = 0; a < moves.size(); ++a)
      for (size_t b = a + 1; b < moves.size(); ++b) {
        bool collide = tilde_c(moves[a].first, n) == tilde_c(moves[b].first, n);
        bool add_a = moves[a].first.size() > lam.size();
        bool add_b = moves[b].first.size() > lam.size();
        bool law = false;
        if (add_a != add_b) {
          const Box& add_box = add_a ? moves[a].second : moves[b].second;
          const Box& del_box = add_a ? moves[b].second : moves[a].second;
          law = add_box.col - add_box.row + del_box.col - del_box.row == 2 * n - 1;
        }
        if (collide != law) out.fail("collision law: " + case_name(lam, n));
      }

    DiagramClass cls = classify(lam, n);
    if (lam.part(1) <= n && cls.singular)
      out.fail("diagram with first row <= n classified singular: " + case_name(lam, n));
    if (cls.singular) {
      std::vector<Partition> chain = sharp_chain(lam, n);  // validates length internally
      for (const Partition& q : chain)
        if (tilde_c(q, n) != tilde_c(lam, n)) out.fail("sharp changes tilde_c: " + case_name(lam, n));
      if (classify(chain.back(), n).singular) out.fail("chain ends singular: " + case_name(lam, n));
    }

    // Closed forms of F_λ(μ).
    if (lam.part(1) <= n) {
      for (const Partition& mu : remove_candidates(lam)) {
        if (f_set(lam, mu, n) != std::vector<Partition>{lam})
          out.fail("F closed form (small rows): " + case_name(lam, n));
      }
    }
    if (lam.part(1) > n) {
      Partition mu = lam.without_box({1, lam.part(1)});
      std::vector<Partition> f = f_set(lam, mu, n);
      if (!cls.singular) {
        if (f != std::vector<Partition>{lam}) out.fail("F closed form (regular): " + case_name(lam, n));
      } else {
        // Deletability of the column-j box has to be read off μ: when
        // j+1 = λ_1 the first-row deletion has already shortened column j+1.
        Partition mu_conj = mu.conjugate();
        std::vector<Partition> expect;
        if (mu_conj.part(cls.j + 1) == mu_conj.part(cls.j)) {
          expect = {lam};
        } else {
          Partition nu = mu.without_box({mu_conj.part(cls.j), cls.j});
          expect = {lam, nu};
          std::sort(expect.begin(), expect.end());
        }
        if (f != expect) out.fail("F closed form (singular): " + case_name(lam, n));
      }
      // Statement about F_λ(μ#) when μ is singular and λ adds a first-row box.
      DiagramClass mu_cls = classify(mu, n);
      if (mu_cls.singular) {
        std::vector<Partition> f2 = f_set(lam, sharp(mu, n), n);
        if (!cls.singular) {
          if (!f2.empty()) out.fail("F(mu#) should be empty: " + case_name(lam, n));
        } else if (f2 != std::vector<Partition>{sharp(lam, n)}) {
          out.fail("F(mu#) != {lambda#}: " + case_name(lam, n));
        }
      }
    }

    // π_λ closed form.
    std::vector<Partition> pi = pi_set(lam, n);
    std::vector<Partition> pi_expect;
    if (lam.part(1) <= n || !cls.singular) {
      pi_expect = {lam};
    } else {
      pi_expect = {lam, sharp(lam, n)};
      std::sort(pi_expect.begin(), pi_expect.end());
    }
    if (pi != pi_expect) out.fail("pi closed form: " + case_name(lam, n));
  }
  return out;
}

CheckResult check_blowup_oracle(int count, unsigned long seed) {
  CheckResult out{"blow-up oracle"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-5, 5);
  std::uniform_int_distribution<int> expo(1, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> nfac(0, 4);
  std::uniform_int_distribution<int> tnum(-20, 20);

  for (int it = 0; it < count; ++it) {
    int pref = small(rng);
    FactoredRational phi(Rational(pref == 0 ? 1 : pref));
    int dividing = nfac(rng), plain = nfac(rng);
    for (int i = 0; i < dividing; ++i) {
      // p - d(k+1), in the orientation the factored limit classifies
      Rational d(small(rng));
      AffineForm f(-d, Rational(1), -d);
      phi *= FactoredRational::form(f, coin(rng) ? expo(rng) : -expo(rng));
    }
    for (int i = 0; i < plain; ++i) {
      Rational a(small(rng)), c(small(rng));
      if (sj::is_zero(a) && sj::is_zero(c)) a = 1;
      phi *= FactoredRational::form(AffineForm(a, Rational(0), c),
                                    coin(rng) ? expo(rng) : -expo(rng));
    }
    // Non-integer t avoids collapsing any p - d(k+1) factor.
    Rational t = Rational(tnum(rng), 7);
    t.canonicalize();
    if (is_integer(t)) t += Rational(1, 7);

    ExtendedScalar direct = blowup_limit(phi, ExtendedScalar(t));
    ExtendedScalar oracle = uni_limit(substitute_blowup(phi, t), Rational(-1));
    if (direct != oracle) out.fail("random case #" + std::to_string(it));
    ++out.cases;
  }
  return out;
}

CheckResult check_i_regularity(VerifyEnv& env, int n, int max_size) {
  CheckResult out{"nonsingular-basis regularity n=" + std::to_string(n)};
  const Rational t1(1, 2), t2(5, 3);
  JacobiEngine& e1 = env.sym(n, t1);
  JacobiEngine& e2 = env.sym(n, t2);
  for (const Partition& p : hook_partitions(n, max_size)) {
    ++out.cases;
    LaurentPoly<Rational> si1(1 + n), si2(1 + n);
    bool regular = true;
    for (JacobiEngine* eng : {&e1, &e2}) {
      const JBasisCombo& combo = eng->i_combo(p);
      for (const auto& [nu, cv] : combo)
        if (uni_limit(cv, Rational(-1)).is_infinite())
          out.fail("I coefficient has a pole: " + case_name(p, n));
      SymLaurent realized = eng->realize(combo);
      if (!realized.regular_at_minus1()) {
        out.fail("I realization has a pole: " + case_name(p, n));
        regular = false;
        continue;
      }
      (eng == &e1 ? si1 : si2) = realized.limit_at_minus1();
    }
    if (regular && !(si1 == si2))
      out.fail("SI differs between t=1/2 and t=5/3: " + case_name(p, n));
  }
  return out;
}

CheckResult check_sj_infinity_identity(VerifyEnv& env, int n, int max_size) {
  CheckResult out{"SJ(inf) vs Kac-module supercharacters n=" + std::to_string(n)};
  InfinityEngine& eng = env.inf(n);
  for (const Partition& p : hook_partitions(n, max_size)) {
    ++out.cases;
    LaurentPoly<Rational> expect = e_sch(p, n).scaled(sign_of(s_stat(p)));
    if (!(eng.sj_infinity(p) == expect)) out.fail(case_name(p, n));
  }
  return out;
}

CheckResult check_singular_point_identity(VerifyEnv& env, int n, int max_size) {
  CheckResult out{"SJ(lambda'_j) vs irreducible supercharacters n=" + std::to_string(n)};
  InfinityEngine& eng = env.inf(n);
  for (const Partition& p : hook_partitions(n, max_size)) {
    DiagramClass cls = classify(p, n);
    if (!cls.singular) continue;
    ++out.cases;
    Rational tj(p.conjugate().part(cls.j));
    LaurentPoly<Rational> sj = sj_via_formula(eng, p, ExtendedScalar(tj));
    LaurentPoly<Rational> expect = l_sch(p, n).scaled(sign_of(s_stat(p)));
    if (!(sj == expect)) out.fail(case_name(p, n));
  }
  return out;
}

CheckResult check_projective_identity(VerifyEnv& env, int n, int max_size) {
  CheckResult out{"SI vs projective-cover supercharacters n=" + std::to_string(n)};
  InfinityEngine& eng = env.inf(n);
  for (const Partition& p : hook_partitions(n, max_size)) {
    DiagramClass cls = classify(p, n);
    if (!cls.singular) continue;
    ++out.cases;
    LaurentPoly<Rational> si = si_poly(eng, p);
    Partition sh = sharp(p, n);
    LaurentPoly<Rational> expect = e_sch(p, n).scaled(sign_of(s_stat(p)));
    if (p.conjugate().part(cls.j) > 1)
      expect += e_sch(sh, n).scaled(sign_of(s_stat(sh)));
    if (!(si == expect)) out.fail(case_name(p, n));
  }
  return out;
}

CheckResult check_character_side(int n, int max_size) {
  CheckResult out{"character-side identities n=" + std::to_string(n)};
  for (const Partition& p : hook_partitions(n, max_size)) {
    ++out.cases;
    if (!euler_pieri_check(p, n)) out.fail("Euler Pieri: " + case_name(p, n));
    DiagramClass cls = classify(p, n);
    if (cls.singular) {
      if (!kac_decomposition_check(p, n)) out.fail("Kac decomposition: " + case_name(p, n));
      if (!kac_alternating_expansion_check(p, n))
        out.fail("alternating Kac expansion: " + case_name(p, n));
    }
    // Typicality matches regularity exactly on the λ_1 > n range.
    if (p.part(1) > n) {
      auto alpha = atypical_root(chi_of(p, n), n);
      if (alpha.has_value() != cls.singular)
        out.fail("typicality vs regularity: " + case_name(p, n));
      if (cls.singular && (alpha->sign != 1 || alpha->i != cls.j))
        out.fail("atypical root disagrees with witness: " + case_name(p, n));
    }
  }
  return out;
}

CheckResult check_t_independence(VerifyEnv& env, int n, int max_size) {
  CheckResult out{"t-independence and reconstruction n=" + std::to_string(n)};
  InfinityEngine& inf = env.inf(n);
  JacobiEngine& at_half = env.sym(n, Rational(1, 2));
  JacobiEngine& at_seven = env.sym(n, Rational(7));
  JacobiEngine& at_73 = env.sym(n, Rational(7, 3));
  for (const Partition& p : hook_partitions(n, max_size)) {
    ++out.cases;
    DiagramClass cls = classify(p, n);
    if (!cls.singular) {
      LaurentPoly<Rational> v_inf = inf.sj_infinity(p);
      if (!(at_half.specialize(p) == v_inf)) out.fail("t=1/2 differs: " + case_name(p, n));
      if (!(at_seven.specialize(p) == v_inf)) out.fail("t=7 differs: " + case_name(p, n));
    } else {
      LaurentPoly<Rational> direct = at_73.specialize(p);
      LaurentPoly<Rational> formula = sj_via_formula(inf, p, ExtendedScalar(Rational(7, 3)));
      if (!(direct == formula)) out.fail("reconstruction at t=7/3: " + case_name(p, n));
    }
  }
  return out;
}

std::vector<std::string> suite_names() {
  return {"eigen", "pieri", "comb", "special", "euler", "kac"};
}

std::vector<CheckResult> run_suite(VerifyEnv& env, const std::string& suite, int n, int max_size,
                                   unsigned long seed) {
  std::vector<CheckResult> out;
  if (suite == "eigen") {
    out.push_back(check_eigenfunction(env, n, max_size, Rational(1, 2)));
  } else if (suite == "pieri") {
    out.push_back(check_pieri(env, n, max_size, Rational(1, 2)));
  } else if (suite == "comb") {
    out.push_back(check_combinatorics(n, max_size));
  } else if (suite == "special") {
    out.push_back(check_blowup_oracle(1000, seed));
    out.push_back(check_i_regularity(env, n, max_size));
    out.push_back(check_t_independence(env, n, max_size));
  } else if (suite == "euler") {
    out.push_back(check_character_side(n, max_size));
    out.push_back(check_sj_infinity_identity(env, n, max_size));
  } else if (suite == "kac") {
    out.push_back(check_singular_point_identity(env, n, max_size));
    out.push_back(check_projective_identity(env, n, max_size));
  } else {
    throw ParseError("unknown verify suite: '" + suite + "'");
  }
  return out;
}

}  // namespace sj
