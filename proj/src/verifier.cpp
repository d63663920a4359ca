#include "qabtors/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qabtors/curve.hpp"
#include "qabtors/divpoly.hpp"
#include "qabtors/factor.hpp"
#include "qabtors/galois.hpp"
#include "qabtors/ratpoints.hpp"

namespace qabtors {
namespace {

UniPoly poly(std::initializer_list<std::pair<int, long>> terms) {
    size_t deg = 0;
    for (auto& t : terms) deg = std::max(deg, static_cast<size_t>(t.first));
    std::vector<Rational> c(deg + 1, Rational(0));
    for (auto& t : terms) c[t.first] = c[t.first] + Rational(t.second);
    return UniPoly(c);
}

Rational rat_pow(const Rational& a, long k) {
    Rational r(1), base = a;
    for (long i = 0; i < k; ++i) r = r * base;
    return r;
}

// Rational function in h, kept reduced to limit coefficient growth.
struct RF {
    UniPoly n, d;

    RF() : n(), d(UniPoly::constant(Rational(1))) {}
    explicit RF(const Rational& a) : n(UniPoly::constant(a)), d(UniPoly::constant(Rational(1))) {}
    explicit RF(const UniPoly& p) : n(p), d(UniPoly::constant(Rational(1))) {}
    RF(const UniPoly& num, const UniPoly& den) : n(num), d(den) { reduce(); }

    void reduce() {
        if (d.is_zero()) throw std::invalid_argument("RF: zero denominator");
        if (n.is_zero()) {
            d = UniPoly::constant(Rational(1));
            return;
        }
        UniPoly g = poly_gcd(n, d);
        if (g.degree() > 0) {
            n = div_exact(n, g);
            d = div_exact(d, g);
        }
        Rational lead = d.leading();
        if (lead != Rational(1)) {
            n = n * (Rational(1) / lead);
            d = d * (Rational(1) / lead);
        }
    }

    bool is_zero() const { return n.is_zero(); }

    RF operator+(const RF& o) const { return RF(n * o.d + o.n * d, d * o.d); }
    RF operator-(const RF& o) const { return RF(n * o.d - o.n * d, d * o.d); }
    RF operator*(const RF& o) const { return RF(n * o.n, d * o.d); }
    RF operator/(const RF& o) const {
        if (o.n.is_zero()) throw std::invalid_argument("RF: division by zero");
        return RF(n * o.d, d * o.n);
    }
    bool operator==(const RF& o) const { return (n * o.d) == (o.n * d); }
};

// f in Q(h) is a square there iff num*den is a polynomial square.
bool rf_is_square(const RF& f) {
    if (f.is_zero()) return true;
    return sqrt_poly(f.n * f.d).has_value();
}

// Exact square root of a rational function: n/d = (s/d)^2 with s^2 = n*d.
std::optional<RF> rf_sqrt(const RF& f) {
    if (f.is_zero()) return RF{Rational(0)};
    auto s = sqrt_poly(f.n * f.d);
    if (!s) return std::nullopt;
    return RF(*s, f.d);
}

// f = target * (rational function)^2 ?
bool rf_square_times(const RF& f, const UniPoly& target) {
    return rf_is_square(f / RF(target));
}

// Discriminant of y^2 + xy = x^3 - 36/(j-1728) x - 1/(j-1728), the standard
// model with the given j-invariant, computed from the b-invariants.
RF model_disc_from_j(const RF& j) {
    RF k = j - RF(Rational(1728));
    RF a4 = RF(Rational(-36)) / k;
    RF a6 = RF(Rational(-1)) / k;
    RF b2{Rational(1)};
    RF b4 = RF(Rational(2)) * a4;
    RF b6 = RF(Rational(4)) * a6;
    RF b8 = (b2 * b6 - b4 * b4) / RF(Rational(4));
    return RF(Rational(0)) - b2 * b2 * b8 - RF(Rational(8)) * b4 * b4 * b4 -
           RF(Rational(27)) * b6 * b6 + RF(Rational(9)) * b2 * b4 * b6;
}

// All monic divisors of f, assembled from its complete factorization.
std::vector<UniPoly> all_monic_divisors(const UniPoly& f) {
    FactorList fl = factor_over_Q(f);
    std::vector<UniPoly> divs{UniPoly::constant(Rational(1))};
    for (auto& fp : fl.factors) {
        std::vector<UniPoly> next;
        UniPoly power = UniPoly::constant(Rational(1));
        for (unsigned e = 0; e <= fp.multiplicity; ++e) {
            for (auto& d0 : divs) next.push_back(d0 * power);
            power = power * fp.factor;
        }
        divs = std::move(next);
    }
    return divs;
}

struct FamilyData {
    UniPoly j_num;
    UniPoly j_den;
    std::vector<Rational> excluded;
};

const FamilyData& family_data(int family) {
    static const FamilyData f13 = {
        poly({{2, 1}, {1, 5}, {0, 13}}) * poly({{4, 1}, {3, 7}, {2, 20}, {1, 19}, {0, 1}}).pow(3),
        UniPoly::x(),
        {Rational(0)}};
    static const FamilyData f25 = {
        poly({{10, 1}, {8, 10}, {6, 35}, {5, -12}, {4, 50}, {3, -60}, {2, 25}, {1, -60}, {0, 16}})
            .pow(3),
        poly({{1, 1}, {0, -1}}) * poly({{4, 1}, {3, 1}, {2, 6}, {1, 6}, {0, 11}}),
        {Rational(1)}};
    // The 10-isogeny family as displayed carries denominator (h+1)^2(h-4)h,
    // which cannot be right: the pole orders of j at the cusps of this
    // degree-18 cover must be the cusp widths 10, 5, 2, 1, and that
    // denominator leaves a width-14 pole at infinity.  Raising h to the
    // fifth power is the unique redistribution that both restores the cusp
    // widths and makes every specialization admit a 2-isogeny; the repaired
    // map also hits the j-invariant of curve 66c1 (which has a rational
    // 10-isogeny) at h = -3/2.
    static const FamilyData f10 = {
        poly({{6, 1}, {5, -4}, {1, 16}, {0, 16}}).pow(3),
        poly({{1, 1}, {0, 1}}).pow(2) * poly({{1, 1}, {0, -4}}) * UniPoly::monomial(Rational(1), 5),
        {Rational(-1), Rational(0), Rational(4)}};
    static const FamilyData f18 = {
        poly({{3, 1}, {0, -2}}).pow(3) * poly({{9, 1}, {6, -6}, {3, -12}, {0, -8}}).pow(3),
        UniPoly::monomial(Rational(1), 9) * poly({{3, 1}, {0, -8}}) * poly({{3, 1}, {0, 1}}).pow(2),
        {Rational(-1), Rational(0), Rational(2)}};
    static const FamilyData f12 = {
        poly({{2, 1}, {0, -3}}).pow(3) * poly({{6, 1}, {4, -9}, {2, 3}, {0, -3}}).pow(3),
        UniPoly::monomial(Rational(1), 4) * poly({{2, 1}, {0, -9}}) * poly({{2, 1}, {0, -1}}).pow(3),
        {Rational(0), Rational(1), Rational(-1), Rational(3), Rational(-3)}};
    switch (family) {
        case 13: return f13;
        case 25: return f25;
        case 10: return f10;
        case 18: return f18;
        case 12: return f12;
    }
    throw std::invalid_argument("family_data: no one-parameter family with this key");
}

// The two-torsion model derived from the j-map itself: complete the square
// on y^2 + xy = x^3 - 36/(j-1728)x - 1/(j-1728) and find the rational root
// of the 2-division cubic in Q(h) by the rational root theorem, pinning the
// scalar with specializations and certifying the survivor by the exact root
// identity in Q(h).  Shifting the root to the origin gives
// y^2 = x(x^2 + bx + d); the square classes of d and (b^2-4d)d are
// unchanged by quadratic twisting, so this normalization is harmless.
void derived_family_model(int family, RF& b, RF& d) {
    const FamilyData& fd = family_data(family);
    const Rational quarter = Rational(1) / Rational(4);
    const Rational half = Rational(1) / Rational(2);

    // Clearing denominators in x^3 + x^2/4 - 36/(j-1728) x - 1/(j-1728) gives
    // F(x) = A x^3 + (A/4) x^2 - 36 D x - D with A = j_num - 1728 j_den, D = j_den.
    UniPoly A = fd.j_num - fd.j_den * Rational(1728);
    const UniPoly& D = fd.j_den;

    // Sample the rational two-torsion abscissa at parameter values where the
    // fiber is an honest curve and the cubic has a unique nonzero root.
    struct Sample {
        Rational c, r;
    };
    std::vector<Sample> pts;
    for (long ci = 1; ci <= 200 && pts.size() < 2; ++ci) {
        Rational c(ci);
        Rational av = A.eval(c), dv = D.eval(c);
        if (av == Rational(0) || dv == Rational(0)) continue;
        UniPoly cubic({Rational(0) - dv, dv * Rational(-36), av * quarter, av});
        auto roots = rational_roots(cubic);
        if (roots.size() != 1 || roots[0] == Rational(0)) continue;
        pts.push_back({c, roots[0]});
    }
    if (pts.size() < 2) throw std::runtime_error("derived_family_model: sampling failed");

    // A root of F in Q(h) has the shape lam * P/Q with P a monic divisor of D
    // and Q a monic divisor of A.  lam is pinned down by the first sample and
    // candidates are screened at the second before the one exact check.
    std::vector<UniPoly> ps = all_monic_divisors(D);
    std::vector<UniPoly> qs = all_monic_divisors(A);
    std::vector<std::pair<Rational, Rational>> pv, qv;
    pv.reserve(ps.size());
    qv.reserve(qs.size());
    for (auto& p : ps) pv.emplace_back(p.eval(pts[0].c), p.eval(pts[1].c));
    for (auto& q : qs) qv.emplace_back(q.eval(pts[0].c), q.eval(pts[1].c));

    for (size_t i = 0; i < ps.size(); ++i) {
        if (pv[i].first == Rational(0) || pv[i].second == Rational(0)) continue;
        for (size_t jx = 0; jx < qs.size(); ++jx) {
            if (qv[jx].first == Rational(0) || qv[jx].second == Rational(0)) continue;
            Rational lam = pts[0].r * qv[jx].first / pv[i].first;
            if (lam * pv[i].second / qv[jx].second != pts[1].r) continue;
            UniPoly LP = ps[i] * lam;
            const UniPoly& Q = qs[jx];
            UniPoly F = A * LP.pow(3) + A * LP.pow(2) * Q * quarter -
                        D * LP * Q.pow(2) * Rational(36) - D * Q.pow(3);
            if (!F.is_zero()) continue;
            RF root(LP, Q);
            RF c1 = RF(D * Rational(-36), A);
            b = RF(Rational(3)) * root + RF(quarter);
            d = RF(Rational(3)) * root * root + root * RF(half) + c1;
            return;
        }
    }
    throw std::runtime_error("derived_family_model: no rational 2-torsion root found");
}

// Two-torsion model y^2 = x(x^2 + b(h)x + d(h)) as displayed in the source
// propositions, kept for comparison against the derived model.
void printed_family_model(int family, RF& b, RF& d) {
    switch (family) {
        case 10:
            b = RF(poly({{12, -9}, {9, 72}, {3, -144}, {0, -144}}),
                   poly({{12, 1}, {9, -8}, {3, -8}, {0, -8}}));
            d = RF(poly({{27, 1296},
                         {24, -19440},
                         {21, 62208},
                         {18, 124416},
                         {15, -248832},
                         {12, -622080},
                         {6, 995328},
                         {3, 995328},
                         {0, 331776}}),
                   poly({{36, 1},
                         {33, -24},
                         {30, 192},
                         {27, -464},
                         {24, -720},
                         {21, 2304},
                         {18, 2112},
                         {15, 5760},
                         {12, 14400},
                         {9, 11776},
                         {6, 12288},
                         {3, 12288},
                         {0, 4096}}));
            return;
        case 18: {
            UniPoly p1 = poly({{3, 1}, {0, -2}});
            UniPoly p2 = poly({{9, 1}, {6, -6}, {3, -12}, {0, -8}});
            UniPoly q = poly({{12, 1}, {9, -8}, {3, -8}, {0, -8}});
            b = RF(p1 * p2, q);
            d = RF(poly({{1, 1}, {0, 1}}) * poly({{2, 1}, {1, -1}, {0, 1}}) * p1.pow(2) * p2.pow(2),
                   poly({{6, 1}, {3, -4}, {0, -8}}).pow(2) * q.pow(2));
            return;
        }
        case 12: {
            UniPoly p1 = poly({{2, 1}, {0, -3}});
            UniPoly p2 = poly({{6, 1}, {4, -9}, {2, 3}, {0, -3}});
            UniPoly q = poly({{8, 1}, {6, -12}, {4, 30}, {2, -36}, {0, 9}});
            b = RF(p1 * p2, q);
            d = RF(UniPoly::monomial(Rational(1), 2) * p1.pow(2) * p2.pow(2),
                   poly({{4, 1}, {2, -6}, {0, -3}}).pow(2) * q.pow(2));
            return;
        }
    }
    throw std::invalid_argument("printed_family_model: no printed model for this key");
}

std::string rat_str(const Rational& q) {
    return q.get_str();
}

// Local order and leading coefficient of a coordinate function in the
// uniformizer at a point of y^2 = f(h).
struct Loc {
    long ord;
    Rational lead;
};

constexpr long kOrdInf = 1L << 40;

Loc taylor_at(const UniPoly& p, const Rational& h0) {
    if (p.is_zero()) return {kOrdInf, Rational(0)};
    UniPoly t = p.shift(h0);
    long m = 0;
    while (t[m] == Rational(0)) ++m;
    return {m, t[m]};
}

}  // namespace

std::string to_string(const ModelPoint& p) {
    if (p.infinity) return "(0:1:0)";
    return "(" + rat_str(p.h) + ", " + rat_str(p.y) + ")";
}

bool verify_map_identity(const RationalMap& m) {
    const UniPoly& f = m.source.rhs;
    const UniPoly& g = m.target.rhs;
    long dg = g.degree();
    if (dg < 1) return false;
    std::vector<UniPoly> apow(dg + 1), cpow(dg + 1);
    apow[0] = UniPoly::constant(Rational(1));
    cpow[0] = UniPoly::constant(Rational(1));
    for (long i = 1; i <= dg; ++i) {
        apow[i] = apow[i - 1] * m.A;
        cpow[i] = cpow[i - 1] * m.C;
    }
    UniPoly rhs;
    for (long i = 0; i <= dg; ++i) {
        if (g[i] == Rational(0)) continue;
        rhs = rhs + apow[i] * cpow[dg - i] * g[i];
    }
    UniPoly lhs = f * m.B * m.B;
    for (int k = 0; k <= 10; ++k) {
        if (lhs == rhs) return true;
        lhs = lhs * m.C;
    }
    return false;
}

ModelPoint map_image(const RationalMap& m, const ModelPoint& p) {
    const UniPoly& f = m.source.rhs;
    long ds = f.degree();
    if (ds % 2 == 0) throw std::invalid_argument("map_image: even-degree source model");

    Loc a{}, yb{}, c{};
    if (!p.infinity) {
        Loc la = taylor_at(m.A, p.h);
        Loc lb = taylor_at(m.B, p.h);
        Loc lc = taylor_at(m.C, p.h);
        if (p.y != Rational(0)) {
            // Smooth non-branch point: h - h0 uniformizes both sheets.
            a = la;
            yb = {lb.ord, p.y * lb.lead};
            c = lc;
        } else {
            // Branch point: y uniformizes and h - h0 = y^2/f'(h0) + O(y^4).
            Rational fp = f.derivative().eval(p.h);
            if (fp == Rational(0)) throw std::invalid_argument("map_image: singular model");
            auto lift = [&](const Loc& l) -> Loc {
                if (l.ord >= kOrdInf) return l;
                return {2 * l.ord, l.lead / rat_pow(fp, l.ord)};
            };
            a = lift(la);
            c = lift(lc);
            Loc lbl = lift(lb);
            yb = {lbl.ord + 1, lbl.lead};
        }
    } else {
        // h = 1/u, and v = y*u^((ds+1)/2) satisfies v^2 = u*(lead(f) + O(u)),
        // so v uniformizes the single point over u = 0 and u = v^2/lead(f)+...
        Rational flead = f.leading();
        long dhat = (ds + 1) / 2;
        auto rev = [&](const UniPoly& q) -> Loc {
            if (q.is_zero()) return {kOrdInf, Rational(0)};
            long dq = q.degree();
            return {-2 * dq, q.leading() * rat_pow(flead, dq)};
        };
        a = rev(m.A);
        c = rev(m.C);
        Loc lb = rev(m.B);
        yb = {lb.ord - ds, lb.lead * rat_pow(flead, dhat)};
    }

    long mn = std::min({a.ord, yb.ord, c.ord});
    if (mn >= kOrdInf) throw std::invalid_argument("map_image: identically zero map");
    Rational X = (a.ord == mn) ? a.lead : Rational(0);
    Rational Y = (yb.ord == mn) ? yb.lead : Rational(0);
    Rational Z = (c.ord == mn) ? c.lead : Rational(0);
    if (Z != Rational(0)) return ModelPoint::affine(X / Z, Y / Z);
    return ModelPoint::at_infinity();
}

std::vector<ModelPoint> fiber_points(const RationalMap& m, const ModelPoint& target) {
    const UniPoly& f = m.source.rhs;
    std::set<Rational> hs;
    if (!target.infinity) {
        for (auto& r : rational_roots(m.A - m.C * target.h)) hs.insert(r);
    }
    // Zeros of C are base-point candidates; once resolved they can land on
    // any target point, infinity included.
    for (auto& r : rational_roots(m.C)) hs.insert(r);

    std::set<ModelPoint> out;
    for (auto& h0 : hs) {
        auto y = sqrt_exact(f.eval(h0));
        if (!y) continue;
        std::set<Rational> ys{*y, Rational(0) - *y};
        for (auto& y0 : ys) {
            ModelPoint s = ModelPoint::affine(h0, y0);
            if (map_image(m, s) == target) out.insert(s);
        }
    }
    ModelPoint inf = ModelPoint::at_infinity();
    if (map_image(m, inf) == target) out.insert(inf);
    return std::vector<ModelPoint>(out.begin(), out.end());
}

Rational j_formula(int family, const Rational& h) {
    const FamilyData& fd = family_data(family);
    for (auto& x : fd.excluded) {
        if (h == x) throw std::domain_error("j_formula: parameter value is a cusp or excluded");
    }
    return fd.j_num.eval(h) / fd.j_den.eval(h);
}

UniPoly j_denominator(int family) { return family_data(family).j_den; }

std::vector<Rational> excluded_h(int family) { return family_data(family).excluded; }

std::vector<Rational> finite_j_list(int family) {
    auto q = [](long num, long den) -> Rational { return Rational(num) / Rational(den); };
    switch (family) {
        case 15:
            // -5^2/2, -5^2 241^3/2^3, -5*29^3/2^5, 5*211^3/2^15
            return {q(-25, 2), q(-25, 1) * Rational(13997521) / Rational(8),
                    q(-5, 32) * Rational(24389), q(5, 32768) * Rational(9393931)};
        case 21:
            // -3^2 5^6/2^3, 3^3 5^3/2, -3^2 5^3 101^3/2^21, -3^3 5^3 383^3/2^7
            return {q(-140625, 8), q(3375, 2),
                    q(-1125, 2097152) * Rational(1030301),
                    q(-3375, 128) * Rational(56181887)};
    }
    throw std::invalid_argument("finite_j_list: not a finite family");
}

PointListReport certify_point_list(const PlaneCurveModel& model,
                                   const std::vector<ModelPoint>& expected,
                                   const std::vector<Rational>& cusp_h,
                                   long num_bound, long den_bound) {
    PointListReport rep;
    std::ostringstream detail;
    const UniPoly& rhs = model.rhs;

    rep.equation_ok = true;
    for (auto& p : expected) {
        if (p.infinity) continue;
        if (p.y * p.y != rhs.eval(p.h)) {
            rep.equation_ok = false;
            detail << "point " << to_string(p) << " is not on " << model.name << "; ";
        }
    }

    rep.cusps_ok = true;
    if (!cusp_h.empty()) {
        for (auto& p : expected) {
            if (p.infinity) continue;
            if (std::find(cusp_h.begin(), cusp_h.end(), p.h) == cusp_h.end()) {
                rep.cusps_ok = false;
                detail << "h = " << rat_str(p.h) << " is not an allowed cusp value; ";
            }
        }
    }

    if (rhs.degree() != 3 || rhs.leading() != Rational(1)) {
        // Higher-genus model: rational points are certified elsewhere via a
        // dominant map to a rank-zero elliptic quotient.
        rep.torsion_ok = true;
        rep.search_ok = true;
        detail << "non-elliptic model, equation and cusp checks only";
        rep.detail = detail.str();
        return rep;
    }

    RationalCurve e = make_curve(Rational(0), rhs[2], Rational(0), rhs[1], rhs[0]);
    RationalTorsion tors = rational_torsion(e);
    std::set<ModelPoint> want;
    bool want_inf = false;
    for (auto& p : expected) {
        if (p.infinity) {
            want_inf = true;
        } else {
            want.insert(p);
        }
    }
    std::set<ModelPoint> got;
    for (auto& p : tors.points) {
        if (!p.inf) got.insert(ModelPoint::affine(p.x, p.y));
    }
    rep.torsion_ok = want_inf && want == got;
    if (!rep.torsion_ok) {
        detail << "torsion subgroup " << to_string(tors.group) << " has " << got.size()
               << " affine points, expected " << want.size() << "; ";
    }

    // Sweep x = p/e^2 (y then must be w/e^3): torsion on an integral model is
    // integral, so this hunts for non-torsion points below the height bound.
    rep.search_ok = true;
    bool small = true;
    Integer c2n, c1n, c0n;
    {
        auto as_int = [&](const Rational& q, Integer& out) {
            if (q.get_den() != 1) return false;
            out = q.get_num();
            return mpz_sizeinbase(out.get_mpz_t(), 2) < 20;
        };
        small = as_int(rhs[2], c2n) && as_int(rhs[1], c1n) && as_int(rhs[0], c0n);
    }
    if (small) {
        long c2 = c2n.get_si(), c1 = c1n.get_si(), c0 = c0n.get_si();
        for (long den = 1; den <= den_bound; ++den) {
            __int128 e2 = static_cast<__int128>(den) * den;
            __int128 e4 = e2 * e2, e6 = e4 * e2;
            for (long p = -num_bound; p <= num_bound; ++p) {
                if (std::gcd(std::abs(p), den) != 1) continue;
                __int128 pp = p;
                __int128 N = pp * pp * pp + c2 * pp * pp * e2 + c1 * pp * e4 + c0 * e6;
                if (N < 0) continue;
                long double approx = sqrtl(static_cast<long double>(N));
                __int128 w = static_cast<__int128>(approx);
                while (w > 0 && w * w > N) --w;
                while ((w + 1) * (w + 1) <= N) ++w;
                if (w * w != N) continue;
                Rational x = Rational(p) / Rational(den * den);
                Rational y = Rational(static_cast<long>(w)) / (Rational(den) * den * den);
                for (int sgn = 0; sgn < (w == 0 ? 1 : 2); ++sgn, y = Rational(0) - y) {
                    if (!want.count(ModelPoint::affine(x, y))) {
                        rep.search_ok = false;
                        detail << "unexpected point (" << rat_str(x) << ", " << rat_str(y)
                               << ") on " << model.name << "; ";
                    }
                }
            }
        }
    } else {
        for (long den = 1; den <= den_bound; ++den) {
            for (long p = -num_bound; p <= num_bound; ++p) {
                if (std::gcd(std::abs(p), den) != 1) continue;
                Rational x = Rational(p) / Rational(den * den);
                auto y = sqrt_exact(rhs.eval(x));
                if (!y) continue;
                for (auto& yy : std::set<Rational>{*y, Rational(0) - *y}) {
                    if (!want.count(ModelPoint::affine(x, yy))) {
                        rep.search_ok = false;
                        detail << "unexpected point (" << rat_str(x) << ", " << rat_str(yy)
                               << ") on " << model.name << "; ";
                    }
                }
            }
        }
    }

    detail << "rank 0 assumed for " << model.name << "; sweep |p| <= " << num_bound
           << ", e <= " << den_bound;
    rep.detail = detail.str();
    return rep;
}

ConditionCurves square_condition_curves(int family) {
    ConditionCurves out;
    std::ostringstream cert;
    RF b, d;
    derived_family_model(family, b, d);
    cert << "two-torsion model re-derived from the j-map, root identity exact; ";

    // The displayed model should agree with the derived one up to a
    // quadratic twist (b scales by t, d by t^2 for some t in Q(h)^x).
    // Mismatches are transcription slips in the source text and are
    // recorded without failing the curve certificates, which only use
    // twist-invariant square classes.
    {
        RF bp, dp;
        printed_family_model(family, bp, dp);
        bool exact = bp == b && dp == d;
        bool twist = exact || dp * b * b == d * bp * bp;
        cert << "displayed b,d "
             << (exact ? "match exactly"
                       : twist ? "match up to twist" : "DIFFER (source transcription)")
             << "; ";
    }

    switch (family) {
        case 10: {
            out.first = {"y^2 = h^3 + h^2 + 4h + 4", poly({{3, 1}, {2, 1}, {1, 4}, {0, 4}})};
            out.second = {"y^2 = h^3 - 3h^2 - 4h", poly({{3, 1}, {2, -3}, {1, -4}})};
            bool c1 = rf_square_times(d, out.first.rhs);
            bool c2 = rf_square_times((b * b - RF(Rational(4)) * d) * d, out.second.rhs);
            cert << "d(h) = rhs_1 * square: " << (c1 ? "yes" : "NO")
                 << "; (b^2-4d)d = rhs_2 * square: " << (c2 ? "yes" : "NO");
            out.certified = c1 && c2;
            break;
        }
        case 18: {
            out.first = {"y^2 = h^3 + 1", poly({{3, 1}, {0, 1}})};
            out.second = {"y^2 = h^7 - 7h^4 - 8h", poly({{7, 1}, {4, -7}, {1, -8}})};
            bool c1 = rf_square_times(d, out.first.rhs);
            bool c2 = rf_square_times((b * b - RF(Rational(4)) * d) * d, out.second.rhs);
            cert << "d(h) = rhs_1 * square: " << (c1 ? "yes" : "NO")
                 << "; (b^2-4d)d = rhs_2 * square: " << (c2 ? "yes" : "NO");
            out.certified = c1 && c2;
            break;
        }
        case 12: {
            out.first = {"y^2 = h^3 - 2h^2 - 3h", poly({{3, 1}, {2, -2}, {1, -3}})};
            out.second = {"y^2 = h^3 + 2h^2 - 3h", poly({{3, 1}, {2, 2}, {1, -3}})};
            // Here d is a perfect square, delta = sqrt(d), and the two
            // conditions are (b + 2delta)delta and (b - 2delta)delta; the
            // labeling of the pair depends on the branch of the root.
            auto delta = rf_sqrt(d);
            bool has_root = delta.has_value();
            cert << "d(h) is a perfect square: " << (has_root ? "yes" : "NO") << "; ";
            bool c1 = false, c2 = false;
            if (has_root) {
                RF plus = (b + RF(Rational(2)) * *delta) * *delta;
                RF minus = (b - RF(Rational(2)) * *delta) * *delta;
                c1 = rf_square_times(plus, out.first.rhs) &&
                     rf_square_times(minus, out.second.rhs);
                c2 = rf_square_times(plus, out.second.rhs) &&
                     rf_square_times(minus, out.first.rhs);
                cert << "(b +- 2 sqrt(d)) sqrt(d) = {rhs_1, rhs_2} * squares: "
                     << ((c1 || c2) ? "yes" : "NO");
                bool prod = rf_square_times((b * b - RF(Rational(4)) * d) * d,
                                            out.first.rhs * out.second.rhs);
                cert << "; product cross-check: " << (prod ? "yes" : "NO");
                c1 = (c1 || c2) && prod;
            }
            out.certified = has_root && c1;
            break;
        }
        default:
            throw std::invalid_argument("square_condition_curves: no condition pair for this key");
    }
    out.certificate = cert.str();
    return out;
}

namespace {

// Does some curve with this j-invariant admit a rational 3-isogeny?  The
// 3-division polynomial has a rational root iff a kernel x-coordinate is
// rational, and that property only depends on j (twisting scales x by a
// square and rescales the polynomial).
bool has_rational_3_kernel(const Rational& j) {
    RationalCurve e = curve_from_j(j);
    UniPoly psi3 = primitive_division_poly(e, 3);
    return !rational_roots(psi3).empty();
}

}  // namespace

bool j78608_check() {
    return !has_rational_3_kernel(Rational(78608));
}

namespace {

using Cert = std::vector<std::pair<std::string, std::string>>;

ModelPoint pt(long h, long y) { return ModelPoint::affine(Rational(h), Rational(y)); }

std::string point_set_str(const std::vector<ModelPoint>& pts) {
    std::string s = "{";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ", ";
        s += to_string(pts[i]);
    }
    return s + "}";
}

void add_point_list_cert(EliminationReport& rep, const std::string& key,
                         const PointListReport& plr) {
    rep.pass = rep.pass && plr.all_ok();
    rep.certificates.emplace_back(
        key, std::string(plr.all_ok() ? "certified" : "FAILED") + " (" + plr.detail + ")");
}

// Five perturbations of a verified map; every one must break the identity.
bool negative_controls_fail(const RationalMap& m) {
    UniPoly one = UniPoly::constant(Rational(1));
    RationalMap v = m;
    v.A = m.A + one;
    if (verify_map_identity(v)) return false;
    v = m;
    v.A = m.A + UniPoly::x();
    if (verify_map_identity(v)) return false;
    v = m;
    v.B = m.B + one;
    if (verify_map_identity(v)) return false;
    v = m;
    v.C = m.C + one;
    if (verify_map_identity(v)) return false;
    v = m;
    v.C = m.C + UniPoly::monomial(Rational(1), m.C.degree());
    if (verify_map_identity(v)) return false;
    return true;
}

EliminationReport report_2x28() {
    EliminationReport rep{"no-2x28", "no curve reaches Z/2 x Z/28 over the maximal abelian extension",
                          true, {}};
    // The two j-invariants with a rational 14-isogeny.
    std::vector<std::pair<std::string, Rational>> js = {
        {"j = -3^3 5^3", Rational(-3375)}, {"j = 3^3 5^3 17^3", Rational(16581375)}};
    for (auto& [name, j] : js) {
        RationalCurve e = curve_from_j(j);
        auto s = exists_abelian_point_of_order(e, 4);
        rep.pass = rep.pass && !s.exists;
        rep.certificates.emplace_back(
            name + ": no point of order 4 over an abelian extension",
            s.exists ? "FAILED: found a point" : "confirmed");
    }
    return rep;
}

EliminationReport report_2x30() {
    EliminationReport rep{"no-2x30", "no curve reaches Z/2 x Z/30 over the maximal abelian extension",
                          true, {}};
    // The four j-invariants with a rational 15-isogeny.
    std::vector<Rational> js = finite_j_list(15);
    for (auto& j : js) {
        RationalCurve e = curve_from_j(j);
        auto s = exists_abelian_point_of_order(e, 2);
        rep.pass = rep.pass && !s.exists;
        rep.certificates.emplace_back(
            "j = " + rat_str(j) + ": no point of order 2 over an abelian extension",
            s.exists ? "FAILED: found a point" : "confirmed");
    }
    return rep;
}

EliminationReport report_2x26(long nb, long db) {
    EliminationReport rep{"no-2x26", "no curve reaches Z/2 x Z/26 over the maximal abelian extension",
                          true, {}};
    const FamilyData& fd = family_data(13);
    RF j(fd.j_num, fd.j_den);

    bool spot = j_formula(13, Rational(1)) == Rational(19) * Rational(110592);
    rep.pass = rep.pass && spot;
    rep.certificates.emplace_back("j-map at h = 1 equals 19 * 48^3", spot ? "confirmed" : "FAILED");

    // A 13-isogenous curve with abelian 2-torsion field forces the model
    // discriminant to be a square, i.e. a rational point on the genus-1 curve.
    PlaneCurveModel c{"y^2 = h^3 + 6h^2 + 13h", poly({{3, 1}, {2, 6}, {1, 13}})};
    bool disc_ok = rf_square_times(model_disc_from_j(j), c.rhs);
    rep.pass = rep.pass && disc_ok;
    rep.certificates.emplace_back("disc of the j-map model = curve rhs * square",
                                  disc_ok ? "confirmed" : "FAILED");

    auto plr = certify_point_list(c, {pt(0, 0), ModelPoint::at_infinity()}, {Rational(0)}, nb, db);
    add_point_list_cert(rep, "rational points of y^2 = h^3 + 6h^2 + 13h are {(0,0), inf}", plr);
    return rep;
}

EliminationReport report_2x50(long nb, long db) {
    EliminationReport rep{"no-2x50", "no curve reaches Z/2 x Z/50 over the maximal abelian extension",
                          true, {}};
    const FamilyData& fd = family_data(25);
    RF j(fd.j_num, fd.j_den);

    PlaneCurveModel source{"y^2 = h^7 + 9h^5 + 25h^3 - 11h^2 + 20h - 44",
                           poly({{7, 1}, {5, 9}, {3, 25}, {2, -11}, {1, 20}, {0, -44}})};
    bool disc_ok = rf_square_times(model_disc_from_j(j), source.rhs);
    rep.pass = rep.pass && disc_ok;
    rep.certificates.emplace_back("disc of the j-map model = curve rhs * square",
                                  disc_ok ? "confirmed" : "FAILED");

    PlaneCurveModel target{"y^2 = x^3 + x^2 - x", poly({{3, 1}, {2, 1}, {1, -1}})};
    RationalMap m{"degree-3 quotient map",
                  source,
                  target,
                  poly({{3, 1}, {2, -1}, {1, 4}, {0, -4}}),
                  UniPoly::constant(Rational(1)),
                  poly({{2, 1}, {1, -2}, {0, 1}})};
    bool id_ok = verify_map_identity(m);
    rep.pass = rep.pass && id_ok;
    rep.certificates.emplace_back("map identity onto y^2 = x^3 + x^2 - x",
                                  id_ok ? "confirmed" : "FAILED");
    bool ctrl = negative_controls_fail(m);
    rep.pass = rep.pass && ctrl;
    rep.certificates.emplace_back("five perturbed maps all fail the identity",
                                  ctrl ? "confirmed" : "FAILED");

    std::vector<ModelPoint> tq = {ModelPoint::at_infinity(), pt(0, 0), pt(-1, -1),
                                  pt(1, -1),                 pt(-1, 1), pt(1, 1)};
    auto plr = certify_point_list(target, tq, {}, nb, db);
    add_point_list_cert(rep, "rational points of the quotient (6 points, Z/6)", plr);

    std::set<ModelPoint> uni;
    for (auto& q : tq) {
        for (auto& s : fiber_points(m, q)) uni.insert(s);
    }
    std::vector<ModelPoint> expect = {pt(1, 0), ModelPoint::at_infinity()};
    bool fib_ok = uni == std::set<ModelPoint>(expect.begin(), expect.end());
    rep.pass = rep.pass && fib_ok;
    rep.certificates.emplace_back(
        "fibers over the six points union to {(1,0), inf}",
        fib_ok ? "confirmed" : "FAILED: got " +
                                   point_set_str(std::vector<ModelPoint>(uni.begin(), uni.end())));

    bool cusp_ok = j_denominator(25).eval(Rational(1)) == Rational(0);
    rep.pass = rep.pass && cusp_ok;
    rep.certificates.emplace_back("h = 1 is a zero of the j-map denominator",
                                  cusp_ok ? "confirmed" : "FAILED");
    return rep;
}

EliminationReport report_2x20(long nb, long db) {
    EliminationReport rep{"no-2x20", "no curve reaches Z/2 x Z/20 over the maximal abelian extension",
                          true, {}};
    ConditionCurves cc = square_condition_curves(10);
    rep.pass = rep.pass && cc.certified;
    rep.certificates.emplace_back("square-condition curves re-derived", cc.certificate);

    std::vector<Rational> cusps = {Rational(0), Rational(-1), Rational(4)};
    auto plr1 = certify_point_list(
        cc.first,
        {ModelPoint::at_infinity(), pt(0, -2), pt(0, 2), pt(4, -10), pt(4, 10), pt(-1, 0)}, cusps,
        nb, db);
    add_point_list_cert(rep, "first condition curve has 6 rational points, all at cusps", plr1);
    auto plr2 = certify_point_list(cc.second,
                                   {pt(0, 0), ModelPoint::at_infinity(), pt(-1, 0), pt(4, 0)},
                                   cusps, nb, db);
    add_point_list_cert(rep, "second condition curve has 4 rational points, all at cusps", plr2);
    return rep;
}

EliminationReport report_2x36(long nb, long db) {
    EliminationReport rep{"no-2x36", "no curve reaches Z/2 x Z/36 over the maximal abelian extension",
                          true, {}};
    ConditionCurves cc = square_condition_curves(18);
    rep.pass = rep.pass && cc.certified;
    rep.certificates.emplace_back("square-condition curves re-derived", cc.certificate);

    std::vector<Rational> cusps = {Rational(-1), Rational(0), Rational(2)};
    auto plr1 = certify_point_list(
        cc.first, {ModelPoint::at_infinity(), pt(0, 1), pt(0, -1), pt(2, 3), pt(2, -3), pt(-1, 0)},
        cusps, nb, db);
    add_point_list_cert(rep, "first condition curve has 6 rational points, all at cusps", plr1);

    // The second condition curve has genus 3; its points come from a degree-4
    // quotient map to a rank-zero elliptic curve, found via an extra
    // automorphism of the model.
    RationalMap aut{"automorphism of the genus-3 model",
                    cc.second,
                    cc.second,
                    poly({{4, 2}, {3, -10}, {2, 12}, {1, 8}, {0, -16}}),
                    UniPoly::constant(Rational(36)),
                    poly({{4, 1}, {3, -8}, {2, 24}, {1, -32}, {0, 16}})};
    bool aut_ok = verify_map_identity(aut);
    rep.pass = rep.pass && aut_ok;
    rep.certificates.emplace_back("model automorphism identity", aut_ok ? "confirmed" : "FAILED");
    bool aut_ctrl = negative_controls_fail(aut);
    rep.pass = rep.pass && aut_ctrl;
    rep.certificates.emplace_back("five perturbed automorphisms all fail",
                                  aut_ctrl ? "confirmed" : "FAILED");

    PlaneCurveModel target{"y^2 = x^3 - x^2 + x", poly({{3, 1}, {2, -1}, {1, 1}})};
    RationalMap quo{"degree-4 quotient map",
                    cc.second,
                    target,
                    poly({{3, 1}, {2, -1}, {1, -2}}),
                    UniPoly::constant(Rational(1)),
                    poly({{4, 1}, {3, 2}, {2, 1}})};
    bool quo_ok = verify_map_identity(quo);
    rep.pass = rep.pass && quo_ok;
    rep.certificates.emplace_back("quotient map identity onto y^2 = x^3 - x^2 + x",
                                  quo_ok ? "confirmed" : "FAILED");
    bool quo_ctrl = negative_controls_fail(quo);
    rep.pass = rep.pass && quo_ctrl;
    rep.certificates.emplace_back("five perturbed quotient maps all fail",
                                  quo_ctrl ? "confirmed" : "FAILED");

    std::vector<ModelPoint> tq = {ModelPoint::at_infinity(), pt(0, 0), pt(1, 1), pt(1, -1)};
    auto plr2 = certify_point_list(target, tq, {}, nb, db);
    add_point_list_cert(rep, "rational points of the quotient (4 points, Z/4)", plr2);

    std::set<ModelPoint> uni;
    for (auto& q : tq) {
        for (auto& s : fiber_points(quo, q)) uni.insert(s);
    }
    std::vector<ModelPoint> expect = {pt(-1, 0), pt(0, 0), pt(2, 0), ModelPoint::at_infinity()};
    bool fib_ok = uni == std::set<ModelPoint>(expect.begin(), expect.end());
    rep.pass = rep.pass && fib_ok;
    rep.certificates.emplace_back(
        "fibers union to {(-1,0), (0,0), (2,0), inf}",
        fib_ok ? "confirmed" : "FAILED: got " +
                                   point_set_str(std::vector<ModelPoint>(uni.begin(), uni.end())));

    bool cusp_ok = true;
    for (auto& p : expect) {
        if (!p.infinity) cusp_ok = cusp_ok && j_denominator(18).eval(p.h) == Rational(0);
    }
    rep.pass = rep.pass && cusp_ok;
    rep.certificates.emplace_back("every affine point of the genus-3 curve is a cusp value",
                                  cusp_ok ? "confirmed" : "FAILED");
    return rep;
}

EliminationReport report_2x24(long nb, long db) {
    EliminationReport rep{"no-2x24", "no curve reaches Z/2 x Z/24 over the maximal abelian extension",
                          true, {}};
    ConditionCurves cc = square_condition_curves(12);
    rep.pass = rep.pass && cc.certified;
    rep.certificates.emplace_back("square-condition curves re-derived", cc.certificate);

    std::vector<Rational> cusps = excluded_h(12);
    auto plr1 = certify_point_list(cc.first,
                                   {pt(0, 0), ModelPoint::at_infinity(), pt(3, 0), pt(-1, 0)},
                                   cusps, nb, db);
    add_point_list_cert(rep, "first condition curve has 4 rational points, all at cusps", plr1);
    auto plr2 = certify_point_list(
        cc.second,
        {pt(0, 0), ModelPoint::at_infinity(), pt(-1, -2), pt(3, -6), pt(1, 0), pt(3, 6), pt(-1, 2),
         pt(-3, 0)},
        cusps, nb, db);
    add_point_list_cert(rep, "second condition curve has 8 rational points, all at cusps", plr2);
    return rep;
}

EliminationReport report_6x12() {
    EliminationReport rep{"no-6x12", "no curve reaches Z/6 x Z/12 over the maximal abelian extension",
                          true, {}};
    bool main_ok = j78608_check();
    rep.pass = rep.pass && main_ok;
    rep.certificates.emplace_back("j = 78608 admits no rational 3-isogeny kernel",
                                  main_ok ? "confirmed" : "FAILED");
    bool ctrl0 = has_rational_3_kernel(Rational(0));
    rep.pass = rep.pass && ctrl0;
    rep.certificates.emplace_back("control: j = 0 does admit one", ctrl0 ? "confirmed" : "FAILED");
    bool ctrl121 = !has_rational_3_kernel(Rational(-121));
    rep.pass = rep.pass && ctrl121;
    rep.certificates.emplace_back("control: j = -11^2 does not",
                                  ctrl121 ? "confirmed" : "FAILED");
    return rep;
}

}  // namespace

std::vector<EliminationReport> elimination_reports(long num_bound, long den_bound) {
    std::vector<EliminationReport> reps;
    reps.push_back(report_2x28());
    reps.push_back(report_2x30());
    reps.push_back(report_2x26(num_bound, den_bound));
    reps.push_back(report_2x50(num_bound, den_bound));
    reps.push_back(report_2x20(num_bound, den_bound));
    reps.push_back(report_2x36(num_bound, den_bound));
    reps.push_back(report_2x24(num_bound, den_bound));
    reps.push_back(report_6x12());
    return reps;
}

}  // namespace qabtors
