#pragma once

#include <vector>

#include "linkcalc/laurent.hpp"
#include "linkcalc/link_diagram.hpp"

namespace linkcalc {

/// Determinant by fraction-free elimination; entries stay in Z[t, 1/t].
LaurentPoly laurent_det(std::vector<std::vector<LaurentPoly>> m);

/// One-variable Alexander polynomial: Fox Jacobian of the Wirtinger
/// presentation with every meridian generator sent to t, first generator's
/// column deleted, gcd of the maximal minors. For an m-component link the
/// minor gcd carries a forced (t-1)^(m-1) factor, which is divided out.
/// Returned as a canonical associate; split and otherwise degenerate
/// diagrams give the zero polynomial.
LaurentPoly alexander_poly(const LinkDiagram& d);

}  // namespace linkcalc
