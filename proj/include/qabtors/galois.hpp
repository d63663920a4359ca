#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qabtors/curve.hpp"
#include "qabtors/ratpoints.hpp"
#include "qabtors/unipoly.hpp"

namespace qabtors {

// raised when a field degree exceeds the working cap and no conclusive
// answer was reached; callers surface this as the "undecided" exit path
struct UndecidedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CubicClass {
    split,                      // three rational roots
    one_root,                   // Galois group Z/2
    irreducible_square_disc,    // Z/3
    irreducible_nonsquare_disc  // S3
};
CubicClass cubic_class(const UniPoly& f);  // f squarefree of degree 3
bool cubic_is_abelian(CubicClass c);
std::string to_string(CubicClass c);

// Galois group of an irreducible X^4 + bX^2 + d over Q
enum class QuarticClass { V, C4, D4 };
QuarticClass biquadratic_quartic_class(const Rational& b, const Rational& d);
std::string to_string(QuarticClass c);

struct AbelianityVerdict {
    enum class Decision { abelian, non_abelian, undecided } decision;
    long group_order = 0;  // field degree, set when abelian
    std::string reason;    // normality-prefilter-fail | non-split-in-root-field |
                           // noncommuting-automorphisms | degree-cap
    bool is_abelian() const { return decision == Decision::abelian; }
};

// Is Q[t]/(f) an abelian Galois extension of Q?  f must be irreducible.
// cap <= 0 selects the default working cap.
AbelianityVerdict is_abelian_field(const UniPoly& f, long cap = 0);

// Verdict for Q(x(P), y(P)) where x(P) runs over the roots of g, an
// irreducible factor of a division polynomial of e.  e must be in short
// form (a1 = a2 = a3 = 0).
AbelianityVerdict point_field_abelian(const RationalCurve& e, const UniPoly& g, long cap = 0);

struct AbelianPointSearch {
    bool exists = false;
    UniPoly witness;        // x-coordinate factor of the witnessing point
    long field_degree = 0;  // degree of its field of definition
};

// Does e have a point of exact order n defined over an abelian extension?
// n in {2,3,4,8}.  Throws UndecidedError when no factor is abelian but some
// could not be decided within the cap.
AbelianPointSearch exists_abelian_point_of_order(const RationalCurve& e, long n, long cap = 0);

// Is the full n-division field of e abelian over Q?  n in {2,3,4,5}.
bool full_level_abelian(const RationalCurve& e, long n, long cap = 0);

// The quartics whose root fields govern halving the given rational
// 2-torsion point on y^2 = x(x^2 + bx + d)
std::vector<UniPoly> halving_x_coordinates(const TwoTorsionModel& m, const CurvePoint& target);

// Fast square-condition filter for an order-4 point over an abelian
// extension. "no" and "yes_not_full" are conclusive about existence;
// yes_not_full does not decide whether the full 4-torsion field is
// abelian, callers settle that separately when it matters.
enum class Order4Quick { yes_not_full, needs_full_check, no };
Order4Quick order4_over_Qab_quick(const TwoTorsionModel& m);
std::string to_string(Order4Quick q);

}  // namespace qabtors
