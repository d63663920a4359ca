#include "qabtors/ratpoints.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qabtors/factor.hpp"
#include "qabtors/intfactor.hpp"

namespace qabtors {

std::string to_string(const TorsionGroup& t) {
    if (t.a == 1 && t.b == 1) return "trivial";
    if (t.a == 1) return "Z/" + std::to_string(t.b);
    return "Z/" + std::to_string(t.a) + " x Z/" + std::to_string(t.b);
}

CurvePoint IntegralModelMap::push(const CurvePoint& p) const {
    if (p.inf) return p;
    return CurvePoint::affine(s * s * (p.x + shift),
                              s * s * s * (p.y + (a1 * p.x + a3) / 2));
}

CurvePoint IntegralModelMap::pull(const CurvePoint& p) const {
    if (p.inf) return p;
    Rational x = p.x / (s * s) - shift;
    Rational y = p.y / (s * s * s) - (a1 * x + a3) / 2;
    return CurvePoint::affine(x, y);
}

IntegralModelMap integral_model_map(const RationalCurve& e) {
    RationalCurve sm = short_model(e);           // x_s = 36(x + b2/12), y_s = 216(y + ...)
    RationalCurve im = integral_short_model(e);  // x_i = u^2 x_s for an integer u
    IntegralModelMap m;
    m.model = im;
    // the x-scale between the two short models is u^2, so the combined
    // x-scale 36u^2 is the perfect square (6u)^2
    m.s = *sqrt_exact(Rational(Rational(36) * short_model_scale(sm, im)));
    m.shift = e.b2() / 12;
    m.a1 = e.a1;
    m.a3 = e.a3;
    return m;
}

RationalTorsion rational_torsion(const RationalCurve& e) {
    IntegralModelMap map = integral_model_map(e);
    const RationalCurve& m = map.model;
    Integer A = m.a4.get_num();
    Integer B = m.a6.get_num();

    std::set<std::pair<Rational, Rational>> seen;
    std::vector<CurvePoint> torsion_on_model;

    auto try_candidate = [&](const Rational& x, const Rational& y) {
        if (seen.count({x, y})) return;
        CurvePoint p = CurvePoint::affine(x, y);
        if (!is_on_curve(m, p)) return;
        long ord = point_order(m, p, 12);
        if (ord == 0) return;  // not torsion within the Mazur bound
        seen.insert({x, y});
        torsion_on_model.push_back(p);
    };

    // order-2 points: y = 0, x a rational root of the cubic
    UniPoly rhs({Rational(B), Rational(A), Rational(0), Rational(1)});
    for (const Rational& r : rational_roots(rhs)) try_candidate(r, Rational(0));

    // remaining candidates: integral points with y^2 dividing the discriminant
    Integer disc_ln = 4 * A * A * A + 27 * B * B;
    disc_ln *= 16;
    if (disc_ln < 0) disc_ln = -disc_ln;
    for (const Integer& y : square_divisors(disc_ln)) {
        UniPoly fy({Rational(B) - Rational(y * y), Rational(A), Rational(0), Rational(1)});
        for (const Rational& r : rational_roots(fy)) {
            try_candidate(r, Rational(y));
            try_candidate(r, Rational(-y));
        }
    }

    RationalTorsion out;
    long n = static_cast<long>(torsion_on_model.size()) + 1;
    long two_torsion = 0;
    for (const CurvePoint& p : torsion_on_model)
        if (p.y == 0) ++two_torsion;
    if (two_torsion == 3)
        out.group = TorsionGroup{2, n / 2};
    else
        out.group = TorsionGroup{1, n};

    std::sort(torsion_on_model.begin(), torsion_on_model.end(),
              [](const CurvePoint& a, const CurvePoint& b) {
                  if (a.x != b.x) return a.x < b.x;
                  return a.y < b.y;
              });
    for (const CurvePoint& p : torsion_on_model) out.points.push_back(map.pull(p));
    return out;
}

std::vector<TwoTorsionModel> two_torsion_models(const RationalCurve& e) {
    bool already_short = e.a1 == 0 && e.a2 == 0 && e.a3 == 0;
    RationalCurve sm = already_short ? e : short_model(e);
    UniPoly cubic({sm.a6, sm.a4, Rational(0), Rational(1)});
    std::vector<Rational> roots = rational_roots(cubic);
    std::sort(roots.begin(), roots.end());
    std::vector<TwoTorsionModel> out;
    for (const Rational& r : roots) {
        // x -> x + r turns y^2 = x^3 + Ax + B into y^2 = x(x^2 + 3r x + (3r^2 + A))
        TwoTorsionModel t;
        t.b = Rational(3) * r;
        t.d = Rational(3) * r * r + sm.a4;
        t.root = r;
        t.shortm = sm;
        out.push_back(t);
    }
    return out;
}

TwoTorsionModel two_torsion_model(const RationalCurve& e) {
    std::vector<TwoTorsionModel> all = two_torsion_models(e);
    if (all.empty()) {
        bool already_short = e.a1 == 0 && e.a2 == 0 && e.a3 == 0;
        RationalCurve sm = already_short ? e : short_model(e);
        UniPoly cubic({sm.a6, sm.a4, Rational(0), Rational(1)});
        throw std::invalid_argument("no rational 2-torsion: " + cubic.str() +
                                    " has no rational root");
    }
    return all.front();
}

}  // namespace qabtors
