#ifndef PFL_POLY_TEXT_HPP
#define PFL_POLY_TEXT_HPP

#include <string>

#include "pfl/polynomial.hpp"

namespace pfl {

/// Renders a polynomial in the interchange format used by golden files and
/// certificates: terms in the ambient order, variables by precedence,
/// e.g. "x[4,5]*x[6,7]-x[4,6]*x[5,7]+x[4,7]*x[5,6]" or "-3/2*x[1,2]^2+1".
std::string poly_to_string(const Polynomial& f);

/// Parses the same format. Entries x[i,j] with i>j are folded to the
/// canonical variable with a sign flip; x[i,i] annihilates its term.
Polynomial parse_poly(const std::string& text, PolyContext ctx = {});

}  // namespace pfl

#endif
