#pragma once

#include <string>
#include <string_view>

#include "detrees/poly/polynomial.hpp"

namespace detrees::poly {

// Canonical text form:
//   poly   := term (("+"|"-") term)*
//   term   := [coeff "*"] factor ("*" factor)*
//   factor := var ["^" int]
//   var    := "x[" i "," j "]" | "T[" c1 " " ... " " cn ";" k "]" | "t[" i "]"
// Terms are printed in descending order; factors in ring enumeration order;
// unit coefficients are omitted. The zero polynomial prints as "0".
std::string to_string(const Polynomial& p);
std::string to_string(const Monomial& m, const Ring& ring);

// Parses the canonical grammar (whitespace around operators is free,
// coefficients may be integers or fractions p/q). Throws ParseError.
Polynomial parse_polynomial(std::string_view text, RingPtr ring, OrderPtr order);

}  // namespace detrees::poly
