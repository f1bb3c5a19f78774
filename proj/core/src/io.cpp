#include "sj/io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "sj/errors.hpp"

namespace sj {

namespace {

using Exps = std::vector<int>;

std::vector<std::pair<Exps, Rational>> graded_lex_terms(const LaurentPoly<Rational>& p) {
  std::vector<std::pair<Exps, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da < db;
    return a.first < b.first;
  });
  return terms;
}

}  // namespace

std::string variable_name(int index) {
  if (index == 0) return "x";
  return "y" + std::to_string(index);
}

std::string poly_to_text(const LaurentPoly<Rational>& p) {
  if (p.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& [e, c] : graded_lex_terms(p)) {
    os << to_string(c);
    bool any = false;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (any ? " " : " * ") << variable_name(static_cast<int>(i)) << "^" << e[i];
      any = true;
    }
    os << "\n";
  }
  return os.str();
}

std::string poly_to_json(const LaurentPoly<Rational>& p, int n, const Partition& lambda,
                         const std::string& t_label) {
  nlohmann::json doc;
  doc["n"] = n;
  doc["lambda"] = lambda.parts();
  if (!t_label.empty()) doc["t"] = t_label;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : graded_lex_terms(p)) {
    nlohmann::json term;
    term["exp"] = e;
    term["coeff"] = to_string(c);
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  return doc.dump(2) + "\n";
}

LaurentPoly<Rational> poly_from_json(std::string_view doc) {
  nlohmann::json j = nlohmann::json::parse(doc);
  int nvars = 1 + j.at("n").get<int>();
  LaurentPoly<Rational> out(nvars);
  for (const auto& term : j.at("terms")) {
    Exps e = term.at("exp").get<Exps>();
    if (static_cast<int>(e.size()) != nvars) throw ParseError("poly_from_json: bad exponent length");
    out.add_term(std::move(e), rational_from_string(term.at("coeff").get<std::string>()));
  }
  return out;
}

std::string t_to_string(const ExtendedScalar& t) {
  return t.is_finite() ? to_string(t.value()) : "inf";
}

ExtendedScalar t_from_string(std::string_view s) {
  if (s == "inf" || s == "infinity" || s == "oo") return ExtendedScalar::infinity();
  return ExtendedScalar(rational_from_string(s));
}

}  // namespace sj
