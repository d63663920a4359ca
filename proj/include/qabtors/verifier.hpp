#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "unipoly.hpp"

namespace qabtors {

// Hyperelliptic plane model Y^2 = rhs(h).  The coordinate is called h
// throughout because these curves parametrize families of elliptic curves;
// points correspond to parameter values.
struct PlaneCurveModel {
    std::string name;
    UniPoly rhs;
};

// A point on such a model: affine (h, y) or the point at infinity.
struct ModelPoint {
    Rational h;
    Rational y;
    bool infinity = false;

    static ModelPoint at_infinity() {
        ModelPoint p;
        p.infinity = true;
        return p;
    }
    static ModelPoint affine(const Rational& h, const Rational& y) {
        ModelPoint p;
        p.h = h;
        p.y = y;
        return p;
    }
    bool operator==(const ModelPoint& o) const {
        if (infinity != o.infinity) return false;
        if (infinity) return true;
        return h == o.h && y == o.y;
    }
    bool operator<(const ModelPoint& o) const {
        if (infinity != o.infinity) return infinity < o.infinity;
        if (infinity) return false;
        if (h != o.h) return h < o.h;
        return y < o.y;
    }
};

std::string to_string(const ModelPoint& p);

// Map between two hyperelliptic models, written projectively as
// (x : y : z) -> (A : y*B : C) and stored dehomogenized: A, B, C are
// polynomials in h.  Composing with the projection to the h-line gives
// h_target = A(h)/C(h), and the y-coordinate transforms by y*B(h)/C(h).
struct RationalMap {
    std::string name;
    PlaneCurveModel source;
    PlaneCurveModel target;
    UniPoly A;
    UniPoly B;
    UniPoly C;
};

// Checks that the map sends the source curve into the target curve:
// substituting (A/C, y*B/C) into Y^2 = g must reduce to zero modulo
// y^2 = f.  Clearing denominators, that is the polynomial identity
//   f * B^2 * C^k == sum_i g_i A^i C^(deg g - i)
// for a single shift k >= 0 (scanned over 0..10).
bool verify_map_identity(const RationalMap& m);

// Evaluates the map at a source point, resolving base points of the
// projective triple by passing to a local uniformizer (y at branch
// points, h - h0 elsewhere).  Only odd-degree source models are
// supported, so infinity is a single ramified point.
ModelPoint map_image(const RationalMap& m, const ModelPoint& p);

// All rational points of the source model mapping to the given target
// point.  Candidates come from the numerator A - h_t * C (plus the
// zeros of C and the point at infinity, which can map anywhere once
// base points are resolved); each is confirmed with map_image.
std::vector<ModelPoint> fiber_points(const RationalMap& m, const ModelPoint& target);

struct PointListReport {
    bool equation_ok = false;
    bool torsion_ok = false;
    bool search_ok = false;
    bool cusps_ok = false;
    std::string detail;

    bool all_ok() const { return equation_ok && torsion_ok && search_ok && cusps_ok; }
};

// Certifies that the listed points are exactly the rational points of an
// elliptic model y^2 = cubic: each listed point satisfies the equation,
// the rational torsion subgroup reproduces the list exactly, and a
// height-bounded sweep (x = p/e^2, |p| <= num_bound, 1 <= e <= den_bound)
// finds nothing further.  When cusp_h is nonempty, every affine h-value
// in the list must lie in it.  Rank zero is an input hypothesis recorded
// in the detail string, not something this check proves.
PointListReport certify_point_list(const PlaneCurveModel& model,
                                   const std::vector<ModelPoint>& expected,
                                   const std::vector<Rational>& cusp_h,
                                   long num_bound = 10000,
                                   long den_bound = 100);

// Parameter families are keyed by the cyclic part of the group they would
// produce: 13, 25, 10, 18, 12 have one-parameter j-maps; 15 and 21 are
// finite lists.
Rational j_formula(int family, const Rational& h);
UniPoly j_denominator(int family);
std::vector<Rational> excluded_h(int family);
std::vector<Rational> finite_j_list(int family);

// The two elliptic (or hyperelliptic) curves carrying the square
// conditions that would have to hold for the family to produce a larger
// abelian-extension torsion group, together with a re-derivation
// certificate: the condition functions, computed from the printed model
// y^2 = x(x^2 + b(h)x + d(h)), equal the curve right-hand sides times
// explicit rational-function squares.
struct ConditionCurves {
    PlaneCurveModel first;
    PlaneCurveModel second;
    bool certified = false;
    std::string certificate;
};
ConditionCurves square_condition_curves(int family);

// A 27-isogenous curve with j = 78608 would need a rational 3-isogeny;
// the kernel polynomial criterion shows there is none.  Control values:
// j = 0 has one (kernel x = 0) and j = -11^2 has none.
bool j78608_check();

struct EliminationReport {
    std::string id;
    std::string claim;
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> certificates;
};

// Runs every desk check backing the impossibility results and returns one
// report per eliminated group, each carrying its certificates.
std::vector<EliminationReport> elimination_reports(long num_bound = 10000,
                                                   long den_bound = 100);

}  // namespace qabtors
