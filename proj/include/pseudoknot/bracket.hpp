#pragma once

#include "pseudoknot/laurent.hpp"
#include "pseudoknot/pd.hpp"

namespace pk {

// Kauffman bracket in A, normalized so the crossingless loop gives 1.
// Evaluated by a frontier sweep: crossings are absorbed one at a time and
// partial states are merged by how their open arcs are paired, so the cost
// grows with the widest frontier rather than with 2^n. Works for any
// single-component PD code, planar or not.
LaurentPolynomial kauffman_bracket(const ResolvedPD& d);

// (-A^3)^(-writhe) * <d>, still in A.
LaurentPolynomial normalized_bracket(const ResolvedPD& d);

// Jones polynomial in t, via A = t^(-1/4). Throws InternalError when an
// exponent is not a multiple of four (cannot happen for classical knots).
LaurentPolynomial jones(const ResolvedPD& d);

// Same substitution applied to an already normalized bracket.
LaurentPolynomial jones_from_normalized_bracket(const LaurentPolynomial& f);

}  // namespace pk
