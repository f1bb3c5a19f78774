#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sj/errors.hpp"
#include "sj/io.hpp"
#include "sj/jobs.hpp"
#include "sj/verify.hpp"

namespace {

struct CommonFlags {
  int n = 1;
  std::string lambda = "-";
  std::string t = "inf";
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_t) {
  cmd->add_option("--n", flags.n, "number of y variables (>= 1)")->required();
  cmd->add_option("--lambda", flags.lambda, "partition, e.g. \"3,1\"; \"-\" for empty")
      ->required();
  if (with_t)
    cmd->add_option("--t", flags.t, "blow-up parameter: a rational \"a/b\" or \"inf\"");
  cmd->add_option("--format", flags.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact engine for super Jacobi polynomials of type BC(1,n): blow-up\n"
      "specializations SJ(t), SJ(inf), SI, and osp(2,2n) supercharacters."};
  app.require_subcommand(1);

  CommonFlags sj_flags, si_flags, sch_flags;
  sj::JobSpec verify_spec, table_spec;
  std::string verify_suite;

  CLI::App* c_sj = app.add_subcommand("compute-sj", "compute SJ_lambda(t)");
  add_common(c_sj, sj_flags, true);
  CLI::App* c_si = app.add_subcommand("compute-si", "compute SI_lambda (t-independent)");
  add_common(c_si, si_flags, false);
  CLI::App* c_sch = app.add_subcommand("compute-sch",
                                       "compute sch E(lambda), sch L(lambda), sch K(chi_lambda)");
  add_common(c_sch, sch_flags, false);

  CLI::App* c_verify = app.add_subcommand(
      "verify",
      "run a verification suite. Suites: eigen, pieri, comb, special, euler, kac.\n"
      "eigen/pieri use the blow-up slope t=1/2; 'special' additionally tries\n"
      "t in {1/2, 5/3, 7, 7/3}, the fixed retry list for degenerate parameters.");
  c_verify->add_option("suite", verify_suite, "suite name")->required();
  c_verify->add_option("--n", verify_spec.n, "number of y variables")->required();
  c_verify->add_option("--max-size", verify_spec.max_size, "largest |lambda| to test");
  c_verify->add_option("--seed", verify_spec.seed, "seed for randomized checks");

  CLI::App* c_table = app.add_subcommand("table", "per-diagram summary table");
  c_table->add_option("--n", table_spec.n, "number of y variables")->required();
  c_table->add_option("--max-size", table_spec.max_size, "largest |lambda| to list");

  CLI11_PARSE(app, argc, argv);

  try {
    sj::JobSpec spec;
    if (c_sj->parsed() || c_si->parsed() || c_sch->parsed()) {
      const CommonFlags& f = c_sj->parsed() ? sj_flags : (c_si->parsed() ? si_flags : sch_flags);
      spec.command = c_sj->parsed() ? sj::JobCommand::ComputeSJ
                                    : (c_si->parsed() ? sj::JobCommand::ComputeSI
                                                      : sj::JobCommand::ComputeSch);
      spec.n = f.n;
      spec.lambda = sj::Partition::parse(f.lambda);
      spec.t = sj::t_from_string(f.t);
      spec.format = f.format == "json" ? sj::OutputFormat::Json : sj::OutputFormat::Text;
    } else if (c_verify->parsed()) {
      spec = verify_spec;
      spec.command = sj::JobCommand::Verify;
      spec.suite = verify_suite;
    } else {
      spec = table_spec;
      spec.command = sj::JobCommand::Table;
    }
    if (spec.n < 1) {
      std::cerr << "error: --n must be >= 1\n";
      return 1;
    }
    return sj::run_job(spec, std::cout, std::cerr);
  } catch (const sj::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const sj::DegenerateParameters& e) {
    std::cerr << "error: degenerate parameters: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
