#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <fstream>

#include "json.hpp"
#include "qabtors/isogeny.hpp"
#include "qabtors/torsion_qab.hpp"

using namespace qabtors;

TEST_CASE("velu maps satisfy the curve identity") {
    RationalCurve e = make_short_curve(-1, 0);
    for (unsigned ell : kVeluPrimes) {
        for (const auto& iso : prime_isogenies(e, ell)) {
            CHECK(iso.degree == ell);
            CHECK(isogeny_identity_holds(iso));
            CHECK(iso.domain == e);
            CHECK(iso.codomain.disc() != 0);
        }
    }
}

TEST_CASE("full two torsion gives three 2-isogenies") {
    RationalCurve e = make_short_curve(-1, 0);
    auto isos = prime_isogenies(e, 2);
    REQUIRE(isos.size() == 3);
    std::vector<Rational> kernel_roots;
    for (const auto& iso : isos) {
        REQUIRE(iso.kernel.degree() == 1);
        kernel_roots.push_back(-iso.kernel[0]);
    }
    std::sort(kernel_roots.begin(), kernel_roots.end());
    CHECK(kernel_roots == std::vector<Rational>{-1, 0, 1});
}

TEST_CASE("five isogeny from a CM free j") {
    RationalCurve e = integral_short_model(curve_from_j(make_rational(-4096, 11)));
    auto isos = prime_isogenies(e, 5);
    REQUIRE(isos.size() == 1);
    CHECK(isos[0].kernel.degree() == 2);
    CHECK(isogeny_identity_holds(isos[0]));
    CHECK(prime_isogenies(e, 7).empty());
}

TEST_CASE("a curve with no rational isogenies") {
    RationalCurve e = integral_short_model(curve_from_j(parse_rational("2^12*3^3/37")));
    for (unsigned ell : kVeluPrimes) {
        CHECK(prime_isogenies(e, ell).empty());
    }
    auto g = isogeny_class(e);
    CHECK(g.curves.size() == 1);
    CHECK(g.edges.empty());
    CHECK(cyclic_isogeny_degrees(g) == std::vector<unsigned>{1});
}

TEST_CASE("frobenius filter") {
    RationalCurve e = make_curve(0, -1, 1, -10, -20);
    CHECK(frobenius_filter_passes(e, 5));
    CHECK_FALSE(frobenius_filter_passes(e, 7));
    CHECK_FALSE(frobenius_filter_passes(e, 13));
    RationalCurve s = integral_short_model(curve_from_j(-121));
    CHECK(frobenius_filter_passes(s, 11));
}

TEST_CASE("dual isogenies pair up") {
    RationalCurve e = make_short_curve(-1, 0);
    for (const auto& phi : prime_isogenies(e, 2)) {
        RationalCurve cod = integral_short_model(phi.codomain);
        int duals = 0;
        for (const auto& psi : prime_isogenies(cod, 2)) {
            if (is_dual_pair(phi, psi)) duals++;
        }
        CHECK(duals == 1);
    }
}

TEST_CASE("sporadic pair table matches the shipped data file") {
    std::ifstream in(std::string(QABTORS_DATA_DIR) + "/sporadic_isogeny.json");
    REQUIRE(in.good());
    nlohmann::json doc = nlohmann::json::parse(in);
    REQUIRE(doc.at("version").get<int>() == 1);
    const auto& rows = doc.at("pairs");
    const auto& table = sporadic_j_pairs();
    REQUIRE(rows.size() == table.size());
    for (size_t i = 0; i < table.size(); i++) {
        CHECK(rows[i].at("ell").get<unsigned>() == table[i].ell);
        CHECK(parse_rational(rows[i].at("j_a").get<std::string>()) == table[i].j_a);
        CHECK(parse_rational(rows[i].at("j_b").get<std::string>()) == table[i].j_b);
    }
    // every listed degree is sporadic, every sporadic degree is listed
    std::vector<unsigned> seen;
    for (const auto& r : table) seen.push_back(r.ell);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    std::vector<unsigned> want(std::begin(kSporadicPrimes), std::end(kSporadicPrimes));
    std::sort(want.begin(), want.end());
    CHECK(seen == want);
}

TEST_CASE("isogeny class of j = -121") {
    auto g = isogeny_class(curve_from_j(-121));
    REQUIRE(g.curves.size() == 2);
    REQUIRE(g.edges.size() == 2);
    for (const auto& edge : g.edges) {
        CHECK(edge.degree == 11);
        CHECK(edge.sporadic);
    }
    CHECK(cyclic_isogeny_degrees(g) == std::vector<unsigned>{1, 11});
}

TEST_CASE("isogeny class of a conductor 11 curve") {
    auto g1 = isogeny_class(make_curve(0, -1, 1, -10, -20));
    CHECK(g1.curves.size() == 3);
    CHECK(cyclic_isogeny_degrees(g1) == std::vector<unsigned>{1, 5, 5});

    auto g3 = isogeny_class(make_curve(0, -1, 1, 0, 0));
    CHECK(g3.curves.size() == 3);
    CHECK(cyclic_isogeny_degrees(g3) == std::vector<unsigned>{1, 5, 25});
}

TEST_CASE("isogeny class of a 27 chain") {
    auto g = isogeny_class(make_curve(0, 0, 1, 0, -7));
    CHECK(g.curves.size() == 4);
    CHECK(cyclic_isogeny_degrees(g) == std::vector<unsigned>{1, 3, 3, 9});
    // duals: every edge has a reverse edge of the same degree
    for (const auto& edge : g.edges) {
        bool reversed = false;
        for (const auto& other : g.edges) {
            if (other.from == edge.to && other.to == edge.from && other.degree == edge.degree)
                reversed = true;
        }
        CHECK(reversed);
    }
}

TEST_CASE("degree multiset screen accepts real classes") {
    kenku_check({1});
    kenku_check({1, 11});
    kenku_check({1, 163});
    kenku_check({1, 5, 5});
    kenku_check({1, 5, 25});
    kenku_check({1, 3, 3, 9});
    kenku_check({1, 2, 2, 2, 4, 4, 4, 8});
    CHECK(true);
}

TEST_CASE("degree multiset screen rejects impossible ones") {
    CHECK_THROWS_AS(kenku_check({1, 23}), InvariantBreach);
    CHECK_THROWS_AS(kenku_check({1, 7, 7}), InvariantBreach);
    CHECK_THROWS_AS(kenku_check({1, 5, 5, 5}), InvariantBreach);
    CHECK_THROWS_AS(kenku_check({1, 163, 163}), InvariantBreach);
    CHECK_THROWS_AS(kenku_check({1, 2, 3}), InvariantBreach);  // count 3 vs product 4
    CHECK_THROWS_AS(kenku_check({2, 4}), InvariantBreach);     // trivial subgroup missing
    CHECK_THROWS_AS(kenku_check({1, 2, 2, 2, 2, 4, 4, 4, 8}), InvariantBreach);  // size 9
}
