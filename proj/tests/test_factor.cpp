#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "qabtors/factor.hpp"

using namespace qabtors;

namespace {

std::mt19937_64 rng(20260401);

UniPoly random_poly(long deg, long coeff_bound, bool exact_degree = false) {
    std::uniform_int_distribution<long> dd(0, deg);
    std::uniform_int_distribution<long> cc(-coeff_bound, coeff_bound);
    long d = exact_degree ? deg : dd(rng);
    std::vector<Rational> c(d + 1);
    for (auto& x : c) x = cc(rng);
    if (c.back() == 0) c.back() = 1;
    return UniPoly(c);
}

}  // namespace

TEST_CASE("factor round trip on 1000 random polynomials") {
    std::uniform_int_distribution<long> pick_deg(1, 8);
    for (int i = 0; i < 1000; i++) {
        UniPoly f = random_poly(pick_deg(rng), 12, true);
        FactorList fl = factor_over_Q(f);
        CHECK(fl.expand() == f);
        for (const auto& fp : fl.factors) {
            CHECK(fp.factor.leading() == 1);
            CHECK(fp.factor.degree() >= 1);
            CHECK(fp.multiplicity >= 1);
            // irreducible pieces never split again
            CHECK(factor_over_Q(fp.factor).factors.size() == 1);
        }
        // deterministic ordering: (degree, coefficients) nondecreasing
        for (size_t k = 1; k < fl.factors.size(); k++) {
            CHECK(fl.factors[k - 1].factor.degree() <= fl.factors[k].factor.degree());
        }
    }
}

TEST_CASE("factor round trip on structured products") {
    std::uniform_int_distribution<long> cc(-9, 9);
    for (int i = 0; i < 150; i++) {
        // force repeated and rational-root structure
        UniPoly f{cc(rng), 1};
        UniPoly g{cc(rng), cc(rng), 1};
        if (g.degree() < 2) continue;
        UniPoly prod = f * f * g;
        FactorList fl = factor_over_Q(prod);
        CHECK(fl.expand() == prod);
        unsigned total = 0;
        for (const auto& fp : fl.factors) total += fp.multiplicity * (unsigned)fp.factor.degree();
        CHECK(total == (unsigned)prod.degree());
    }
}

TEST_CASE("known factorizations") {
    // x^4 - 1 = (x-1)(x+1)(x^2+1)
    FactorList fl = factor_over_Q(UniPoly{-1, 0, 0, 0, 1});
    REQUIRE(fl.factors.size() == 3);
    CHECK(fl.factors[0].factor == UniPoly{-1, 1});
    CHECK(fl.factors[1].factor == UniPoly{1, 1});
    CHECK(fl.factors[2].factor == UniPoly{1, 0, 1});

    // x^4 - 2 irreducible
    CHECK(factor_over_Q(UniPoly{-2, 0, 0, 0, 1}).factors.size() == 1);

    // x^4 + 4 = (x^2-2x+2)(x^2+2x+2), the classic Sophie Germain split
    FactorList sg = factor_over_Q(UniPoly{4, 0, 0, 0, 1});
    REQUIRE(sg.factors.size() == 2);
    CHECK(sg.factors[0].factor * sg.factors[1].factor == UniPoly{4, 0, 0, 0, 1});

    // x^6 + x^3 + 1 is the 9th cyclotomic polynomial, irreducible
    CHECK(factor_over_Q(UniPoly{1, 0, 0, 1, 0, 0, 1}).factors.size() == 1);

    // swinnerton-dyer style: minimal polynomial of sqrt2 + sqrt3 is
    // x^4 - 10x^2 + 1, irreducible but reducible mod every prime
    CHECK(factor_over_Q(UniPoly{1, 0, -10, 0, 1}).factors.size() == 1);

    CHECK_THROWS(factor_over_Q(UniPoly()));
}

TEST_CASE("rational_roots matches planted linear factors") {
    std::uniform_int_distribution<long> num(-10, 10), den(1, 6);
    for (int i = 0; i < 120; i++) {
        std::set<Rational> want;
        UniPoly f{1};
        for (int k = 0; k < 3; k++) {
            Rational r = make_rational(num(rng), den(rng));
            want.insert(r);
            f = f * UniPoly{-r, 1};
        }
        // multiply by an irreducible quadratic so extra roots cannot appear
        f = f * UniPoly{1, 0, 1};
        auto roots = rational_roots(f);
        CHECK(std::set<Rational>(roots.begin(), roots.end()) == want);
        // sorted ascending, no duplicates
        for (size_t k = 1; k < roots.size(); k++) CHECK(roots[k - 1] < roots[k]);
    }
    CHECK(rational_roots(UniPoly{1, 0, 1}).empty());
}

TEST_CASE("irreducible_factors drops multiplicities") {
    UniPoly f = UniPoly{1, 1} * UniPoly{1, 1} * UniPoly{-3, 1};
    auto irr = irreducible_factors(f);
    REQUIRE(irr.size() == 2);
    CHECK(irr[0] == UniPoly{-3, 1});
    CHECK(irr[1] == UniPoly{1, 1});
}

TEST_CASE("monic_divisors_of_degree") {
    UniPoly f = UniPoly{-1, 1} * UniPoly{1, 1} * UniPoly{1, 0, 1};  // squarefree, degrees 1+1+2
    auto d1 = monic_divisors_of_degree(f, 1);
    CHECK(d1.size() == 2);
    auto d2 = monic_divisors_of_degree(f, 2);
    // (x-1)(x+1) and x^2+1
    CHECK(d2.size() == 2);
    for (const auto& d : d2) CHECK(divides(d, f));
    auto d4 = monic_divisors_of_degree(f, 4);
    REQUIRE(d4.size() == 1);
    CHECK(d4[0] == f.monic());
    CHECK(monic_divisors_of_degree(f, 0) == std::vector<UniPoly>{UniPoly{1}});
}

TEST_CASE("squarefree decomposition") {
    for (int i = 0; i < 60; i++) {
        UniPoly a = random_poly(2, 8, true);
        UniPoly b = random_poly(1, 8, true);
        if (poly_gcd(a, b).degree() > 0) continue;
        UniPoly f = a * b.pow(3);
        Rational unit;
        auto parts = squarefree_decomposition(f, unit);
        UniPoly rebuilt{unit};
        for (const auto& p : parts) {
            CHECK(is_squarefree(p.part));
            rebuilt = rebuilt * p.part.pow(p.multiplicity);
        }
        CHECK(rebuilt == f);
        // pairwise coprime
        for (size_t x = 0; x < parts.size(); x++)
            for (size_t y = x + 1; y < parts.size(); y++)
                CHECK(poly_gcd(parts[x].part, parts[y].part).degree() == 0);
    }
}
