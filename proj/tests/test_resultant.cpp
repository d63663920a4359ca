#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qabtors/unipoly.hpp"

using namespace qabtors;

namespace {

std::mt19937_64 rng(171717);

UniPoly random_poly(long deg, long coeff_bound) {
    std::uniform_int_distribution<long> cc(-coeff_bound, coeff_bound);
    std::vector<Rational> c(deg + 1);
    for (auto& x : c) x = cc(rng);
    if (c.back() == 0) c.back() = 1;
    return UniPoly(c);
}

}  // namespace

TEST_CASE("resultant of linear factors") {
    // res(f, g) = lc(f)^deg(g) * prod g(alpha) over roots alpha of f
    CHECK(resultant(UniPoly{-2, 1}, UniPoly{-5, 1}) == -3);
    CHECK(resultant(UniPoly{-5, 1}, UniPoly{-2, 1}) == 3);
}

TEST_CASE("resultant against a linear evaluates the other argument") {
    for (int i = 0; i < 50; i++) {
        UniPoly f = random_poly(1 + i % 5, 20);
        Rational a = make_rational(i - 25, 4);
        Rational expect = f.eval(a);
        if (f.degree() % 2 == 1) expect = -expect;
        CHECK(resultant(f, UniPoly{-a, 1}) == expect);
    }
}

TEST_CASE("resultant vanishes exactly on common factors") {
    for (int i = 0; i < 60; i++) {
        UniPoly common{make_rational(i - 30, 2), 1};
        UniPoly f = random_poly(3, 10);
        UniPoly g = random_poly(2, 10);
        CHECK(resultant(f * common, g * common) == 0);
        if (poly_gcd(f, g).degree() == 0) {
            CHECK(resultant(f, g) != 0);
        }
    }
}

TEST_CASE("resultant is multiplicative in each argument") {
    for (int i = 0; i < 40; i++) {
        UniPoly f = random_poly(3, 8), g = random_poly(2, 8), h = random_poly(2, 8);
        CHECK(resultant(f, g * h) == Rational(resultant(f, g) * resultant(f, h)));
        CHECK(resultant(g * h, f) == Rational(resultant(g, f) * resultant(h, f)));
    }
}

TEST_CASE("swap symmetry") {
    for (int i = 0; i < 40; i++) {
        long df = 1 + i % 4, dg = 1 + (i / 4) % 4;
        UniPoly f = random_poly(df, 9), g = random_poly(dg, 9);
        Rational lhs = resultant(f, g);
        Rational rhs = resultant(g, f);
        if ((df * dg) % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("quadratic discriminant") {
    for (int b = -6; b <= 6; b++) {
        for (int c = -6; c <= 6; c++) {
            CHECK(discriminant(UniPoly{Rational(c), Rational(b), 1}) == Rational(b * b - 4 * c));
        }
    }
    CHECK(discriminant(UniPoly{1, 4, 3}) == 4);  // non-monic: 3x^2+4x+1
}

TEST_CASE("depressed cubic discriminant") {
    for (int p = -8; p <= 8; p++) {
        for (int q = -8; q <= 8; q++) {
            Rational want = Rational(-4) * p * p * p - Rational(27) * q * q;
            CHECK(discriminant(UniPoly{Rational(q), Rational(p), 0, 1}) == want);
        }
    }
    CHECK(discriminant(UniPoly{5, -2, 0, 1}) == -643);
}

TEST_CASE("discriminant of a product with shared root vanishes") {
    for (int i = 0; i < 30; i++) {
        UniPoly f = random_poly(2, 10);
        UniPoly l{make_rational(i - 15, 3), 1};
        CHECK(discriminant(f * l * l) == 0);
    }
}

TEST_CASE("discriminant positive iff real quadratic splits") {
    // squared root differences: (x-a)(x-b) has disc (a-b)^2
    for (int a = -5; a <= 5; a++) {
        for (int b = -5; b <= 5; b++) {
            UniPoly f = UniPoly{Rational(-a), 1} * UniPoly{Rational(-b), 1};
            CHECK(discriminant(f) == Rational((a - b) * (a - b)));
        }
    }
}
