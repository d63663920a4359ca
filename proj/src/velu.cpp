#include "qabtors/velu.hpp"

#include <stdexcept>

namespace qabtors {

namespace {

// elementary symmetric functions e1, e2, e3 of the roots of monic h
void symmetric_functions(const UniPoly& h, Rational& s1, Rational& s2, Rational& s3) {
    long d = h.degree();
    s1 = s2 = s3 = 0;
    if (d >= 1) s1 = -h[d - 1];
    if (d >= 2) s2 = h[d - 2];
    if (d >= 3) s3 = -h[d - 3];
}

}  // namespace

bool isogeny_identity_holds(const IsogenyData& iso) {
    const RationalCurve& e = iso.domain;
    if (!e.is_short() || !iso.codomain.is_short()) return false;
    UniPoly f({e.a6, e.a4, Rational(0), Rational(1)});
    const UniPoly& h = iso.kernel;
    UniPoly h2 = h * h;
    UniPoly h4 = h2 * h2;
    UniPoly lhs = f * iso.Yn * iso.Yn;
    UniPoly rhs = iso.Xn * iso.Xn * iso.Xn + iso.codomain.a4 * iso.Xn * h4 +
                  iso.codomain.a6 * h4 * h2;
    return lhs == rhs;
}

IsogenyData velu_isogeny(const RationalCurve& shortE, const UniPoly& kernel) {
    if (!shortE.is_short()) throw std::invalid_argument("velu needs a short model");
    if (kernel.degree() < 1) throw std::invalid_argument("trivial kernel");
    UniPoly h = kernel.monic();
    const Rational& A = shortE.a4;
    const Rational& B = shortE.a6;
    UniPoly f({B, A, Rational(0), Rational(1)});

    IsogenyData iso;
    iso.domain = shortE;
    iso.kernel = h;

    bool two_torsion_kernel = h.degree() == 1 && f.eval(-h[0]) == 0;
    if (two_torsion_kernel) {
        Rational x0 = -h[0];
        Rational t = 3 * x0 * x0 + A;
        iso.degree = 2;
        iso.codomain = make_short_curve(A - 5 * t, B - 7 * x0 * t);
        // X = x + t/(x - x0); times h^2/h^2 to fit the Xn/h^2 convention
        iso.Xn = (UniPoly::x() * h + UniPoly::constant(t)) * h;
    } else {
        long d = h.degree();
        iso.degree = static_cast<unsigned>(2 * d + 1);
        Rational s1, s2, s3;
        symmetric_functions(h, s1, s2, s3);
        Rational dd(d);
        Rational t = 6 * (s1 * s1 - 2 * s2) + 2 * dd * A;
        Rational w = 10 * (s1 * s1 * s1 - 3 * s1 * s2 + 3 * s3) + 6 * A * s1 + 4 * dd * B;
        iso.codomain = make_short_curve(A - 5 * t, B - 7 * w);

        // X = x + T/h + (U h' - U' h)/h^2 with T = (t(x) h') mod h,
        // U = (u(x) h') mod h, t(x) = 2(3x^2 + A), u(x) = 4 f(x)
        UniPoly tpoly({2 * A, Rational(0), Rational(6)});
        UniPoly upoly = f * Rational(4);
        UniPoly hp = h.derivative();
        UniPoly T = divrem(tpoly * hp, h).rem;
        UniPoly U = divrem(upoly * hp, h).rem;
        iso.Xn = UniPoly::x() * h * h + T * h + (U * hp - U.derivative() * h);
    }
    iso.Yn = iso.Xn.derivative() * h - 2 * h.derivative() * iso.Xn;
    if (!isogeny_identity_holds(iso))
        throw std::invalid_argument("kernel polynomial does not define an isogeny");
    return iso;
}

}  // namespace qabtors
