#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qabtors/rational.hpp"
#include "qabtors/unipoly.hpp"

namespace qabtors {

// Elliptic curve over Q in long Weierstrass form
//   y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct RationalCurve {
    Rational a1, a2, a3, a4, a6;

    Rational b2() const;
    Rational b4() const;
    Rational b6() const;
    Rational b8() const;
    Rational c4() const;
    Rational c6() const;
    Rational disc() const;
    Rational j_invariant() const;

    // right-hand side of the short model is meaningful only when a1=a2=a3=0
    bool is_short() const { return a1 == 0 && a2 == 0 && a3 == 0; }

    std::string str() const;
    bool operator==(const RationalCurve&) const = default;
};

// Validates nonzero discriminant.
RationalCurve make_curve(const Rational& a1, const Rational& a2, const Rational& a3,
                         const Rational& a4, const Rational& a6);
RationalCurve make_short_curve(const Rational& A, const Rational& B);

// A curve with the requested j-invariant.
RationalCurve curve_from_j(const Rational& j);

// y^2 = x^3 - 27 c4 x - 54 c6, with the change of coordinates
//   X = 36 x + 3 b2,   W = 108 (2y + a1 x + a3).
RationalCurve short_model(const RationalCurve& e);

// Integral short model (A, B in Z) isomorphic over Q.
RationalCurve integral_short_model(const RationalCurve& e);

// Quadratic twist by d of the short model of e.
RationalCurve quadratic_twist(const RationalCurve& e, const Integer& d);

// Are the two curves isomorphic over Q?
bool is_isomorphic_q(const RationalCurve& a, const RationalCurve& b);

// lambda with x_to = lambda * x_from for two isomorphic short models;
// throws if no such rational scaling exists.
Rational short_model_scale(const RationalCurve& from, const RationalCurve& to);

struct CurvePoint {
    bool inf = true;
    Rational x, y;

    static CurvePoint infinity() { return CurvePoint{}; }
    static CurvePoint affine(const Rational& x, const Rational& y) {
        return CurvePoint{false, x, y};
    }
    bool operator==(const CurvePoint&) const = default;
};

bool is_on_curve(const RationalCurve& e, const CurvePoint& p);
CurvePoint point_neg(const RationalCurve& e, const CurvePoint& p);
CurvePoint point_add(const RationalCurve& e, const CurvePoint& p, const CurvePoint& q);
CurvePoint point_mul(const RationalCurve& e, long n, const CurvePoint& p);

// Order of p in E(Q), or 0 if it exceeds cap (hence infinite for cap >= 12).
long point_order(const RationalCurve& e, const CurvePoint& p, long cap = 16);

// #E(F_p) - p - 1 negated: the trace a_p, for odd primes of good reduction.
// Counts points on the reduced short model directly.
long trace_of_frobenius(const RationalCurve& e, uint64_t p);
bool has_good_reduction_short(const RationalCurve& e, uint64_t p);

}  // namespace qabtors
