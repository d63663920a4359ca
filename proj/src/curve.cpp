#include "qabtors/curve.hpp"

#include <sstream>
#include <stdexcept>

#include "qabtors/intfactor.hpp"

namespace qabtors {

Rational RationalCurve::b2() const { return a1 * a1 + 4 * a2; }
Rational RationalCurve::b4() const { return 2 * a4 + a1 * a3; }
Rational RationalCurve::b6() const { return a3 * a3 + 4 * a6; }
Rational RationalCurve::b8() const {
    return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
}
Rational RationalCurve::c4() const {
    Rational b2v = b2();
    return b2v * b2v - 24 * b4();
}
Rational RationalCurve::c6() const {
    Rational b2v = b2();
    return -b2v * b2v * b2v + 36 * b2v * b4() - 216 * b6();
}
Rational RationalCurve::disc() const {
    Rational b2v = b2(), b4v = b4(), b6v = b6(), b8v = b8();
    return -b2v * b2v * b8v - 8 * b4v * b4v * b4v - 27 * b6v * b6v + 9 * b2v * b4v * b6v;
}
Rational RationalCurve::j_invariant() const {
    Rational c = c4();
    return c * c * c / disc();
}

std::string RationalCurve::str() const {
    std::ostringstream os;
    os << "[" << to_string(a1) << "," << to_string(a2) << "," << to_string(a3) << ","
       << to_string(a4) << "," << to_string(a6) << "]";
    return os.str();
}

RationalCurve make_curve(const Rational& a1, const Rational& a2, const Rational& a3,
                         const Rational& a4, const Rational& a6) {
    RationalCurve e{a1, a2, a3, a4, a6};
    if (e.disc() == 0) throw std::invalid_argument("singular curve: " + e.str());
    return e;
}

RationalCurve make_short_curve(const Rational& A, const Rational& B) {
    return make_curve(Rational(0), Rational(0), Rational(0), A, B);
}

RationalCurve curve_from_j(const Rational& j) {
    if (j == 0) return make_curve(Rational(0), Rational(0), Rational(1), Rational(0), Rational(0));
    if (j == 1728) return make_short_curve(Rational(1), Rational(0));
    Rational k = j - 1728;
    return make_curve(Rational(1), Rational(0), Rational(0), -36 / k, -1 / k);
}

RationalCurve short_model(const RationalCurve& e) {
    return make_short_curve(-27 * e.c4(), -54 * e.c6());
}

RationalCurve integral_short_model(const RationalCurve& e) {
    RationalCurve s = short_model(e);
    Integer u = lcm(s.a4.get_den(), s.a6.get_den());
    Rational u2 = Rational(u) * u;
    return make_short_curve(s.a4 * u2 * u2, s.a6 * u2 * u2 * u2);
}

RationalCurve quadratic_twist(const RationalCurve& e, const Integer& d) {
    if (d == 0) throw std::invalid_argument("twist by zero");
    RationalCurve s = short_model(e);
    Rational d2 = Rational(d) * d;
    return make_short_curve(s.a4 * d2, s.a6 * d2 * d);
}

namespace {

// r == u^n for some rational u?
bool is_rational_nth_power(const Rational& r, unsigned long n) {
    if (r == 0) return true;
    if (n % 2 == 0 && r < 0) return false;
    Integer num = r.get_num(), den = r.get_den();
    if (num < 0) num = -num;  // n odd here
    return is_nth_power(num, n) && is_nth_power(den, n);
}

}  // namespace

bool is_isomorphic_q(const RationalCurve& a, const RationalCurve& b) {
    Rational c4a = a.c4(), c6a = a.c6();
    Rational c4b = b.c4(), c6b = b.c6();
    if ((c4a == 0) != (c4b == 0)) return false;
    if ((c6a == 0) != (c6b == 0)) return false;
    if (c4a == 0) return is_rational_nth_power(c6b / c6a, 6);   // j = 0
    if (c6a == 0) return is_rational_nth_power(c4b / c4a, 4);   // j = 1728
    Rational s = (c6b * c4a) / (c6a * c4b);  // candidate u^2
    if (!is_square(s)) return false;
    return s * s == c4b / c4a && s * s * s == c6b / c6a;
}

Rational short_model_scale(const RationalCurve& from, const RationalCurve& to) {
    if (!from.is_short() || !to.is_short())
        throw std::invalid_argument("short_model_scale needs short models");
    const Rational &Ac = from.a4, &Bc = from.a6;
    const Rational &Am = to.a4, &Bm = to.a6;
    Rational lam;
    if (Ac != 0 && Bc != 0 && Am != 0 && Bm != 0) {
        lam = (Bm * Ac) / (Bc * Am);
    } else if (Ac == 0 && Am == 0 && Bc != 0) {
        auto r = nth_root_exact(Bm / Bc, 3);
        if (!r) throw std::invalid_argument("models not related by rational scaling");
        lam = *r;
    } else if (Bc == 0 && Bm == 0 && Ac != 0) {
        auto r = sqrt_exact(Am / Ac);
        if (!r) throw std::invalid_argument("models not related by rational scaling");
        lam = *r;
    } else {
        throw std::invalid_argument("models not related by rational scaling");
    }
    if (lam * lam * Ac != Am || lam * lam * lam * Bc != Bm)
        throw std::invalid_argument("models not related by rational scaling");
    return lam;
}

bool is_on_curve(const RationalCurve& e, const CurvePoint& p) {
    if (p.inf) return true;
    Rational lhs = p.y * p.y + e.a1 * p.x * p.y + e.a3 * p.y;
    Rational rhs = p.x * p.x * p.x + e.a2 * p.x * p.x + e.a4 * p.x + e.a6;
    return lhs == rhs;
}

CurvePoint point_neg(const RationalCurve& e, const CurvePoint& p) {
    if (p.inf) return p;
    return CurvePoint::affine(p.x, -p.y - e.a1 * p.x - e.a3);
}

CurvePoint point_add(const RationalCurve& e, const CurvePoint& p, const CurvePoint& q) {
    if (p.inf) return q;
    if (q.inf) return p;
    if (p.x == q.x && q.y == -p.y - e.a1 * p.x - e.a3) return CurvePoint::infinity();
    Rational lam, nu;
    if (p.x == q.x) {
        Rational den = 2 * p.y + e.a1 * p.x + e.a3;
        lam = (3 * p.x * p.x + 2 * e.a2 * p.x + e.a4 - e.a1 * p.y) / den;
        nu = (-(p.x * p.x * p.x) + e.a4 * p.x + 2 * e.a6 - e.a3 * p.y) / den;
    } else {
        lam = (q.y - p.y) / (q.x - p.x);
        nu = (p.y * q.x - q.y * p.x) / (q.x - p.x);
    }
    Rational x3 = lam * lam + e.a1 * lam - e.a2 - p.x - q.x;
    Rational y3 = -(lam + e.a1) * x3 - nu - e.a3;
    return CurvePoint::affine(x3, y3);
}

CurvePoint point_mul(const RationalCurve& e, long n, const CurvePoint& p) {
    if (n < 0) return point_mul(e, -n, point_neg(e, p));
    CurvePoint acc = CurvePoint::infinity(), base = p;
    while (n > 0) {
        if (n & 1) acc = point_add(e, acc, base);
        n >>= 1;
        if (n > 0) base = point_add(e, base, base);
    }
    return acc;
}

long point_order(const RationalCurve& e, const CurvePoint& p, long cap) {
    CurvePoint acc = p;
    for (long n = 1; n <= cap; ++n) {
        if (acc.inf) return n;
        acc = point_add(e, acc, p);
    }
    return 0;
}

bool has_good_reduction_short(const RationalCurve& e, uint64_t p) {
    RationalCurve s = integral_short_model(e);
    Integer d = Integer(-16) * (4 * s.a4.get_num() * s.a4.get_num() * s.a4.get_num() +
                                27 * s.a6.get_num() * s.a6.get_num());
    return !mpz_divisible_ui_p(d.get_mpz_t(), p);
}

long trace_of_frobenius(const RationalCurve& e, uint64_t p) {
    if (p < 5) throw std::invalid_argument("trace needs p >= 5");
    RationalCurve s = integral_short_model(e);
    Integer pz(static_cast<unsigned long>(p)), Am, Bm;
    mpz_mod(Am.get_mpz_t(), s.a4.get_num().get_mpz_t(), pz.get_mpz_t());
    mpz_mod(Bm.get_mpz_t(), s.a6.get_num().get_mpz_t(), pz.get_mpz_t());
    uint64_t A = mpz_get_ui(Am.get_mpz_t());
    uint64_t B = mpz_get_ui(Bm.get_mpz_t());
    // chi(z) table via squares
    std::vector<int8_t> chi(p, -1);
    chi[0] = 0;
    for (uint64_t z = 1; z <= (p - 1) / 2; ++z) chi[(z * z) % p] = 1;
    long count = 0;  // affine points
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t rhs = ((((x * x) % p) * x) % p + (A * x) % p + B) % p;
        count += 1 + chi[rhs];
    }
    return static_cast<long>(p) + 1 - (count + 1);
}

}  // namespace qabtors
