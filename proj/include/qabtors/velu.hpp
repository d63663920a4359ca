#pragma once

#include "qabtors/curve.hpp"
#include "qabtors/unipoly.hpp"

namespace qabtors {

// Cyclic isogeny between short-model curves, with the rational map carried
// explicitly:  X = Xn / h^2  and  Y = y * Yn / h^3  for kernel poly h.
struct IsogenyData {
    RationalCurve domain;
    RationalCurve codomain;
    UniPoly kernel;  // monic; roots = x-coords of the kernel's finite points, one per +-pair
    unsigned degree = 0;
    UniPoly Xn, Yn;
};

// Checks  f * Yn^2 == Xn^3 + A' * Xn * h^4 + B' * h^6  where f is the
// domain's cubic.  Holding as a polynomial identity proves the map sends
// the domain curve onto the codomain curve.
bool isogeny_identity_holds(const IsogenyData& iso);

// Builds the isogeny with the given kernel polynomial on a short-model
// curve.  For a linear kernel vanishing on a 2-torsion x this is the
// 2-isogeny; otherwise the degree is 2*deg(kernel)+1.  Throws if the
// resulting map fails the curve identity (i.e. the roots of the kernel
// polynomial do not form a valid kernel).
IsogenyData velu_isogeny(const RationalCurve& shortE, const UniPoly& kernel);

}  // namespace qabtors
