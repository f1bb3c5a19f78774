#include "sj/jobs.hpp"

#include <json.hpp>

#include "sj/engine.hpp"
#include "sj/errors.hpp"
#include "sj/io.hpp"
#include "sj/pieri.hpp"
#include "sj/supercharacter.hpp"
#include "sj/verify.hpp"

namespace sj {

namespace {

nlohmann::json poly_terms_json(const LaurentPoly<Rational>& p) {
  nlohmann::json doc = nlohmann::json::parse(poly_to_json(p, p.nvars() - 1, Partition(), ""));
  return doc["terms"];
}

std::string b_closed_form(const Partition& lambda, int n) {
  DiagramClass cls = classify(lambda, n);
  if (!cls.singular) return "-";
  int l = lambda.conjugate().part(cls.j);
  if (l == 1) return "2/t";
  auto shifted = [](int c) {
    if (c == 0) return std::string("t");
    return "t" + std::string(c > 0 ? "+" : "") + std::to_string(c);
  };
  return "(" + shifted(2 - l) + ")/(" + shifted(1 - l) + ")";
}

int run_compute(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  if (!in_hook(spec.lambda, 1, spec.n)) {
    err << "error: lambda=" << spec.lambda.str() << " is outside H(1," << spec.n << ")\n";
    return 1;
  }
  InfinityEngine eng(spec.n);
  LaurentPoly<Rational> poly(1 + spec.n);
  std::string t_label;
  try {
    if (spec.command == JobCommand::ComputeSJ) {
      poly = sj_via_formula(eng, spec.lambda, spec.t);
      t_label = t_to_string(spec.t);
    } else {
      poly = si_poly(eng, spec.lambda);
    }
  } catch (const PoleAtLimit& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (spec.format == OutputFormat::Json) {
    out << poly_to_json(poly, spec.n, spec.lambda, t_label);
  } else {
    out << poly_to_text(poly);
  }
  return 0;
}

int run_compute_sch(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  if (!in_hook(spec.lambda, 1, spec.n)) {
    err << "error: lambda=" << spec.lambda.str() << " is outside H(1," << spec.n << ")\n";
    return 1;
  }
  CharElem e = e_sch(spec.lambda, spec.n);
  CharElem l = l_sch(spec.lambda, spec.n);
  CharElem k = kac_sch(chi_of(spec.lambda, spec.n), spec.n);
  if (spec.format == OutputFormat::Json) {
    nlohmann::json doc;
    doc["n"] = spec.n;
    doc["lambda"] = spec.lambda.parts();
    doc["sch_E"] = poly_terms_json(e);
    doc["sch_L"] = poly_terms_json(l);
    doc["sch_K"] = poly_terms_json(k);
    out << doc.dump(2) << "\n";
  } else {
    out << "sch E(" << spec.lambda.str() << "):\n" << poly_to_text(e);
    out << "sch L(" << spec.lambda.str() << "):\n" << poly_to_text(l);
    out << "sch K(chi):\n" << poly_to_text(k);
  }
  return 0;
}

int run_verify(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  VerifyEnv env;
  std::vector<CheckResult> results;
  try {
    results = run_suite(env, spec.suite, spec.n, spec.max_size, spec.seed);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DegenerateParameters& e) {
    err << "error: degenerate parameters: " << e.what() << "\n";
    return 2;
  }
  bool all_pass = true;
  for (const CheckResult& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.cases << " cases)";
    if (!r.pass) out << " first failure: " << r.detail;
    out << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

int run_table(const JobSpec& spec, std::ostream& out, std::ostream&) {
  out << "lambda\tclass\tj\ttilde_c\tsharp_chain\tb(t)\n";
  for (const Partition& p : hook_partitions(spec.n, spec.max_size)) {
    DiagramClass cls = classify(p, spec.n);
    out << p.str() << "\t" << (cls.singular ? "singular" : "regular") << "\t"
        << (cls.singular ? std::to_string(cls.j) : "-") << "\t" << tilde_c(p, spec.n) << "\t";
    if (cls.singular) {
      std::vector<Partition> chain = sharp_chain(p, spec.n);
      for (size_t i = 0; i < chain.size(); ++i) out << (i ? " -> " : "") << chain[i].str();
    } else {
      out << "-";
    }
    out << "\t" << b_closed_form(p, spec.n) << "\n";
  }
  return 0;
}

}  // namespace

int run_job(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  switch (spec.command) {
    case JobCommand::ComputeSJ:
    case JobCommand::ComputeSI:
      return run_compute(spec, out, err);
    case JobCommand::ComputeSch:
      return run_compute_sch(spec, out, err);
    case JobCommand::Verify:
      return run_verify(spec, out, err);
    case JobCommand::Table:
      return run_table(spec, out, err);
  }
  return 1;
}

}  // namespace sj
