#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "qabtors/torsion_qab.hpp"

using namespace qabtors;

TEST_CASE("the group table has 35 entries") {
    const auto& gs = allowed_groups();
    CHECK(gs.size() == 35);
    std::set<std::pair<long, long>> seen;
    int cyclic = 0;
    for (const auto& g : gs) {
        CHECK(g.b % g.a == 0);
        CHECK(seen.insert({g.a, g.b}).second);
        if (g.a == 1) cyclic++;
        CHECK(classification_gate(g));
    }
    CHECK(cyclic == 17);

    std::set<std::pair<long, long>> expect;
    for (long n : {1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 25, 27, 37, 43, 67, 163})
        expect.insert({1, n});
    for (long n = 1; n <= 9; n++) expect.insert({2, 2 * n});
    expect.insert({3, 3});
    expect.insert({3, 9});
    for (long n = 1; n <= 4; n++) expect.insert({4, 4 * n});
    expect.insert({5, 5});
    expect.insert({6, 6});
    expect.insert({8, 8});
    CHECK(seen == expect);
}

TEST_CASE("groups outside the table are rejected") {
    for (auto [a, b] : {std::pair<long, long>{1, 2}, {1, 4}, {1, 23}, {1, 29}, {2, 20},
                        {2, 36}, {2, 24}, {2, 26}, {2, 28}, {2, 30}, {2, 50}, {3, 6},
                        {3, 27}, {4, 20}, {5, 10}, {5, 25}, {6, 12}, {7, 7}, {8, 16},
                        {16, 16}, {1, 11 * 3}}) {
        CHECK_FALSE(classification_gate(TorsionGroup{a, b}));
    }
    // 33 = 3 * 11 is in the cyclic list? no: only 1,3,...: 33 absent
    CHECK_FALSE(classification_gate(TorsionGroup{1, 33}));
    CHECK(classification_gate(TorsionGroup{1, 15}));
    CHECK(classification_gate(TorsionGroup{1, 21}));
}

TEST_CASE("bounds accept realizable pairs") {
    bounds_check(TorsionGroup{1, 1}, {1});
    bounds_check(TorsionGroup{2, 2}, {1, 2});
    bounds_check(TorsionGroup{5, 5}, {1, 5, 5});
    bounds_check(TorsionGroup{1, 163}, {1, 163});
    bounds_check(TorsionGroup{8, 8}, {1, 2, 2, 2, 4, 4, 4, 4});
    bounds_check(TorsionGroup{2, 16}, {1, 2, 4, 4, 8, 8, 16, 16});
    bounds_check(TorsionGroup{4, 4}, {1, 2, 2, 2});
    bounds_check(TorsionGroup{3, 9}, {1, 3, 3, 9});
    CHECK(true);
}

TEST_CASE("bounds reject the impossible") {
    CHECK_THROWS_AS(bounds_check(TorsionGroup{2, 164}, {1, 2}), InvariantBreach);
    CHECK_THROWS_AS(bounds_check(TorsionGroup{16, 16}, {1}), InvariantBreach);
    CHECK_THROWS_AS(bounds_check(TorsionGroup{1, 49}, {1, 7}), InvariantBreach);
    CHECK_THROWS_AS(bounds_check(TorsionGroup{1, 23}, {1}), InvariantBreach);
    CHECK_THROWS_AS(bounds_check(TorsionGroup{4, 4}, {1}), InvariantBreach);
    CHECK_THROWS_AS(bounds_check(TorsionGroup{2, 16}, {1, 2, 4, 8}), InvariantBreach);
    CHECK_THROWS_AS(bounds_check(TorsionGroup{1, 125}, {1, 5}), InvariantBreach);
}

TEST_CASE("representative curves hit their groups") {
    auto r1 = torsion_over_Qab(make_curve(0, -1, 1, -10, -20));
    CHECK(r1.group == TorsionGroup{5, 5});
    CHECK(r1.isogeny_degrees == std::vector<long>{1, 5, 5});
    CHECK(!r1.trace.empty());

    auto r2 = torsion_over_Qab(make_curve(0, 0, 1, 0, -7));
    CHECK(r2.group == TorsionGroup{3, 9});
    CHECK(r2.isogeny_degrees == std::vector<long>{1, 3, 3, 9});

    auto r3 = torsion_over_Qab(curve_from_j(0));
    CHECK(r3.group == TorsionGroup{3, 9});

    auto r4 = torsion_over_Qab(make_curve(1, 0, 1, 4, -6));
    CHECK(r4.group == TorsionGroup{6, 6});

    auto r5 = torsion_over_Qab(curve_from_j(parse_rational("-2^18*3^3*5^3*23^3*29^3")));
    CHECK(r5.group == TorsionGroup{1, 163});
    CHECK(r5.isogeny_degrees == std::vector<long>{1, 163});

    auto r6 = torsion_over_Qab(make_curve(0, 0, 1, -1, 0));
    CHECK(r6.group == TorsionGroup{1, 1});
}

TEST_CASE("every step of the trace is replayable text") {
    auto r = torsion_over_Qab(make_curve(0, -1, 1, -10, -20));
    for (const auto& step : r.trace) {
        CHECK_FALSE(step.condition.empty());
        CHECK_FALSE(step.evidence.empty());
    }
    // the last step states the conclusion
    CHECK(r.trace.back().condition == "conclude");
}

TEST_CASE("the computation is deterministic") {
    for (int round = 0; round < 2; round++) {
        auto a = torsion_over_Qab(curve_from_j(parse_rational("-11^2")));
        auto b = torsion_over_Qab(curve_from_j(parse_rational("-11^2")));
        CHECK(a.group == b.group);
        CHECK(a.isogeny_degrees == b.isogeny_degrees);
        REQUIRE(a.trace.size() == b.trace.size());
        for (size_t i = 0; i < a.trace.size(); i++) {
            CHECK(a.trace[i].condition == b.trace[i].condition);
            CHECK(a.trace[i].evidence == b.trace[i].evidence);
        }
    }
}

TEST_CASE("twist invariance away from special j") {
    CHECK(twist_invariance_check(curve_from_j(parse_rational("2^12*3^3/37")), 5));
    CHECK(twist_invariance_check(make_curve(0, -1, 1, -10, -20), -1));
    CHECK(twist_invariance_check(curve_from_j(parse_rational("2^13/11")), 3));
}

TEST_CASE("results land inside the gate with bounds") {
    for (const Rational& j : {Rational(1), Rational(-100), make_rational(17, 3)}) {
        auto r = torsion_over_Qab(curve_from_j(j));
        CHECK(classification_gate(r.group));
        kenku_check(r.isogeny_degrees);
        bounds_check(r.group, r.isogeny_degrees);
    }
}
