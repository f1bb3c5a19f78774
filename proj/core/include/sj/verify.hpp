#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sj/engine.hpp"

namespace sj {

struct CheckResult {
  std::string name;
  bool pass = true;
  long cases = 0;
  std::string detail;  // first failure, empty when green

  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
};

// Shared engine cache so suites that need the same (n, t) family reuse it.
class VerifyEnv {
 public:
  JacobiEngine& sym(int n, const Rational& t);
  InfinityEngine& inf(int n);

 private:
  std::map<std::pair<int, std::string>, std::unique_ptr<JacobiEngine>> sym_;
  std::map<int, std::unique_ptr<InfinityEngine>> inf_;
};

// The acceptance checks. Each runs exhaustively over H(1,n) up to max_size.
CheckResult check_eigenfunction(VerifyEnv& env, int n, int max_size, const Rational& t);
CheckResult check_pieri(VerifyEnv& env, int n, int max_size, const Rational& t);
CheckResult check_combinatorics(int n, int max_size);
CheckResult check_blowup_oracle(int count, unsigned long seed);
CheckResult check_i_regularity(VerifyEnv& env, int n, int max_size);
CheckResult check_sj_infinity_identity(VerifyEnv& env, int n, int max_size);
CheckResult check_singular_point_identity(VerifyEnv& env, int n, int max_size);
CheckResult check_projective_identity(VerifyEnv& env, int n, int max_size);
CheckResult check_character_side(int n, int max_size);
CheckResult check_t_independence(VerifyEnv& env, int n, int max_size);

// Named suites for the CLI: eigen, pieri, comb, special, euler, kac.
std::vector<CheckResult> run_suite(VerifyEnv& env, const std::string& suite, int n, int max_size,
                                   unsigned long seed);
std::vector<std::string> suite_names();

}  // namespace sj
