#pragma once

#include "qabtors/curve.hpp"
#include "qabtors/unipoly.hpp"

namespace qabtors {

// x-only division polynomial: psi_n itself for odd n, psi_n / psi_2 for
// even n.  Both are polynomials in x alone.
UniPoly division_polynomial(const RationalCurve& e, unsigned n);

// 4x^3 + b2 x^2 + 2 b4 x + b6 = psi_2^2; roots are the 2-torsion x-coords.
UniPoly two_torsion_rhs(const RationalCurve& e);

// Roots are exactly the x-coordinates of affine points of order dividing n.
UniPoly torsion_x_poly(const RationalCurve& e, unsigned n);

// Roots are exactly the x-coordinates of points of exact order n (n >= 2).
UniPoly primitive_division_poly(const RationalCurve& e, unsigned n);

}  // namespace qabtors
