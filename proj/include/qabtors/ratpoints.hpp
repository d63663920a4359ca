#pragma once
#include "qabtors/curve.hpp"
#include <string>
#include <vector>

namespace qabtors {

struct TorsionGroup {
    long a = 1, b = 1;  // Z/a x Z/b with a | b; trivial group is {1,1}
    long order() const { return a * b; }
    bool operator==(const TorsionGroup&) const = default;
};
std::string to_string(const TorsionGroup& t);

// Change of variables onto an integral model y^2 = x^3 + Ax + B:
//   X = s^2 (x + shift),  Y = s^3 (y + (a1 x + a3)/2)
struct IntegralModelMap {
    RationalCurve model;
    Rational s;
    Rational shift;
    Rational a1, a3;
    CurvePoint push(const CurvePoint& p) const;
    CurvePoint pull(const CurvePoint& p) const;
};
IntegralModelMap integral_model_map(const RationalCurve& e);

struct RationalTorsion {
    TorsionGroup group;
    std::vector<CurvePoint> points;  // affine torsion points on the input model
};
// Full rational torsion subgroup: bounded integral-point search on the
// integral model, every candidate certified by an order computation.
RationalTorsion rational_torsion(const RationalCurve& e);

// Model y^2 = x(x^2 + bx + d) with a chosen rational 2-torsion point at the
// origin; `root` is the x-coordinate that was translated away, on `shortm`.
struct TwoTorsionModel {
    Rational b, d;
    Rational root;
    RationalCurve shortm;
};
// One model per rational root of the 2-division cubic, roots ascending.
std::vector<TwoTorsionModel> two_torsion_models(const RationalCurve& e);
// First of the above; throws std::invalid_argument naming the cubic if the
// curve has no rational 2-torsion.
TwoTorsionModel two_torsion_model(const RationalCurve& e);

}  // namespace qabtors
