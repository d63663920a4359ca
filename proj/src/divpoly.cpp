#include "qabtors/divpoly.hpp"

#include <stdexcept>
#include <vector>

namespace qabtors {

namespace {

struct Seeds {
    UniPoly F;  // psi_2^2
    std::vector<UniPoly> psi;  // x-only table, index = n
};

Seeds seed_table(const RationalCurve& e, unsigned n) {
    Rational b2 = e.b2(), b4 = e.b4(), b6 = e.b6(), b8 = e.b8();
    Seeds s;
    s.F = UniPoly({b6, 2 * b4, b2, Rational(4)});
    s.psi.resize(std::max(5u, n + 1));
    s.psi[0] = UniPoly();
    s.psi[1] = UniPoly::constant(Rational(1));
    s.psi[2] = UniPoly::constant(Rational(1));
    s.psi[3] = UniPoly({b8, 3 * b6, 3 * b4, b2, Rational(3)});
    s.psi[4] = UniPoly({b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2,
                        Rational(2)});
    return s;
}

}  // namespace

UniPoly division_polynomial(const RationalCurve& e, unsigned n) {
    if (n == 0) return UniPoly();
    Seeds s = seed_table(e, n);
    UniPoly F2 = s.F * s.F;
    for (unsigned k = 5; k <= n; ++k) {
        unsigned m = k / 2;
        UniPoly& out = s.psi[k];
        if (k % 2 == 1) {
            // k = 2m+1
            UniPoly lhs = s.psi[m + 2] * s.psi[m] * s.psi[m] * s.psi[m];
            UniPoly rhs = s.psi[m - 1] * s.psi[m + 1] * s.psi[m + 1] * s.psi[m + 1];
            out = (m % 2 == 0) ? lhs * F2 - rhs : lhs - rhs * F2;
        } else {
            // k = 2m
            UniPoly inner = s.psi[m + 2] * s.psi[m - 1] * s.psi[m - 1] -
                            s.psi[m - 2] * s.psi[m + 1] * s.psi[m + 1];
            out = s.psi[m] * inner;
        }
    }
    return s.psi[n];
}

UniPoly two_torsion_rhs(const RationalCurve& e) {
    return UniPoly({e.b6(), 2 * e.b4(), e.b2(), Rational(4)});
}

UniPoly torsion_x_poly(const RationalCurve& e, unsigned n) {
    if (n == 0) throw std::invalid_argument("torsion_x_poly: n >= 1");
    UniPoly psi = division_polynomial(e, n);
    if (n % 2 == 0) psi = psi * two_torsion_rhs(e);
    return psi;
}

UniPoly primitive_division_poly(const RationalCurve& e, unsigned n) {
    if (n < 2) throw std::invalid_argument("primitive_division_poly: n >= 2");
    UniPoly acc = torsion_x_poly(e, n);
    for (unsigned d = 2; d < n; ++d) {
        if (n % d != 0) continue;
        acc = div_exact(acc, primitive_division_poly(e, d));
    }
    return acc;
}

}  // namespace qabtors
