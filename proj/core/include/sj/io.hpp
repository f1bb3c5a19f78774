#pragma once

#include <string>
#include <string_view>

#include "sj/extended_scalar.hpp"
#include "sj/laurent.hpp"
#include "sj/partition.hpp"
#include "sj/rational.hpp"

namespace sj {

// Stable text/JSON emission for golden tests. Terms are ordered graded-lex:
// by total degree, then lexicographically on the exponent vector.

std::string variable_name(int index);  // 0 -> "x", j -> "y<j>"

// One monomial per line: "coeff * x^a y1^b ..."; the constant term is bare.
std::string poly_to_text(const LaurentPoly<Rational>& p);

// {"n":., "lambda":[..], "t":"..", "terms":[{"exp":[..],"coeff":"a/b"},..]}
std::string poly_to_json(const LaurentPoly<Rational>& p, int n, const Partition& lambda,
                         const std::string& t_label);
LaurentPoly<Rational> poly_from_json(std::string_view doc);

std::string t_to_string(const ExtendedScalar& t);
ExtendedScalar t_from_string(std::string_view s);  // "a/b" or "inf"

}  // namespace sj
