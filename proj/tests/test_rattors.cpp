#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "qabtors/ratpoints.hpp"

using namespace qabtors;

namespace {

std::mt19937_64 rng(808080);

RationalCurve random_curve() {
    std::uniform_int_distribution<long> cc(-10, 10);
    for (;;) {
        try {
            return make_curve(cc(rng), cc(rng), cc(rng), cc(rng), cc(rng));
        } catch (const std::invalid_argument&) {
        }
    }
}

// Certify a reported torsion subgroup against the group law alone: right
// count, closure, and the order-m point counts of Z/a x Z/b.
void certify(const RationalCurve& e, const RationalTorsion& t) {
    long a = t.group.a, b = t.group.b;
    REQUIRE(a >= 1);
    REQUIRE(b % a == 0);
    REQUIRE((long)t.points.size() == a * b - 1);
    std::vector<CurvePoint> all = {CurvePoint::infinity()};
    for (const auto& p : t.points) {
        REQUIRE(is_on_curve(e, p));
        all.push_back(p);
    }
    for (const auto& p : all) {
        for (const auto& q : all) {
            CurvePoint s = point_add(e, p, q);
            CHECK(std::count(all.begin(), all.end(), s) == 1);
        }
    }
    for (long m = 1; m <= 12; m++) {
        long want = std::gcd(m, a) * std::gcd(m, b);
        long got = 0;
        for (const auto& p : all) {
            if (point_mul(e, m, p).inf) got++;
        }
        CHECK(got == want);
    }
}

bool group_is(const RationalTorsion& t, long a, long b) {
    return t.group.a == a && t.group.b == b;
}

}  // namespace

TEST_CASE("torsion of classical small curves") {
    auto t1 = rational_torsion(make_short_curve(0, 1));  // y^2 = x^3 + 1
    CHECK(group_is(t1, 1, 6));
    certify(make_short_curve(0, 1), t1);

    auto t2 = rational_torsion(make_short_curve(-1, 0));  // y^2 = x^3 - x
    CHECK(group_is(t2, 2, 2));
    certify(make_short_curve(-1, 0), t2);

    CHECK(group_is(rational_torsion(make_short_curve(0, 4)), 1, 3));
    CHECK(group_is(rational_torsion(make_short_curve(4, 0)), 1, 4));
    CHECK(group_is(rational_torsion(make_curve(0, 0, 1, -1, 0)), 1, 1));  // rank one, no torsion
}

TEST_CASE("torsion of named conductor curves") {
    RationalCurve e11a1 = make_curve(0, -1, 1, -10, -20);
    auto t = rational_torsion(e11a1);
    CHECK(group_is(t, 1, 5));
    certify(e11a1, t);

    RationalCurve e11a3 = make_curve(0, -1, 1, 0, 0);
    CHECK(group_is(rational_torsion(e11a3), 1, 5));

    RationalCurve e14a1 = make_curve(1, 0, 1, 4, -6);
    auto t14 = rational_torsion(e14a1);
    CHECK(group_is(t14, 1, 6));
    certify(e14a1, t14);

    RationalCurve e26b1 = make_curve(1, -1, 1, -3, 3);
    auto t26 = rational_torsion(e26b1);
    CHECK(group_is(t26, 1, 7));
    certify(e26b1, t26);
}

TEST_CASE("a noncyclic example with an order four point") {
    // y^2 = x(x+1)(x+4): (2,6) doubles to (0,0)
    RationalCurve e = make_curve(0, 5, 0, 4, 0);
    auto t = rational_torsion(e);
    CHECK(t.group.a == 2);
    CHECK(t.group.b % 4 == 0);
    certify(e, t);
    CurvePoint p = CurvePoint::affine(2, 6);
    REQUIRE(is_on_curve(e, p));
    CHECK(point_order(e, p) == 4);
}

TEST_CASE("random curves certify and stay inside the rational gate") {
    // the fifteen groups that occur over Q
    auto allowed = [](long a, long b) {
        if (a == 1) return b >= 1 && b <= 12 && b != 11;
        if (a == 2) return b == 2 || b == 4 || b == 6 || b == 8;
        return false;
    };
    for (int i = 0; i < 25; i++) {
        RationalCurve e = random_curve();
        auto t = rational_torsion(e);
        CHECK(allowed(t.group.a, t.group.b));
        certify(e, t);
    }
}

TEST_CASE("integral model map round trips") {
    RationalCurve e = make_curve(1, 0, 1, 4, -6);
    auto m = integral_model_map(e);
    CHECK(m.model.is_short());
    CHECK(is_integer(m.model.a4));
    CHECK(is_integer(m.model.a6));
    auto t = rational_torsion(e);
    for (const auto& p : t.points) {
        CurvePoint q = m.push(p);
        CHECK(is_on_curve(m.model, q));
        CHECK(m.pull(q) == p);
        CHECK(point_order(m.model, q) == point_order(e, p));
    }
}

TEST_CASE("two torsion models") {
    RationalCurve e = make_short_curve(-1, 0);  // roots -1, 0, 1
    auto models = two_torsion_models(e);
    REQUIRE(models.size() == 3);
    CHECK(models[0].root < models[1].root);
    CHECK(models[1].root < models[2].root);
    for (const auto& m : models) {
        // y^2 = x(x^2 + bx + d) must be a genuine curve with (0,0) on it,
        // isomorphic to the input
        RationalCurve c = make_curve(0, m.b, 0, m.d, 0);
        CHECK(is_on_curve(c, CurvePoint::affine(0, 0)));
        CHECK(c.j_invariant() == e.j_invariant());
        CHECK(is_isomorphic_q(c, e));
        CHECK(m.shortm.is_short());
    }
    // no rational two torsion at all
    CHECK(two_torsion_models(make_curve(0, -1, 1, -10, -20)).empty());
    CHECK_THROWS_AS(two_torsion_model(make_curve(0, -1, 1, -10, -20)), std::invalid_argument);
}

TEST_CASE("torsion respects quadratic twisting structure") {
    // full two torsion is twist stable for these split cubics
    RationalCurve e = make_short_curve(-1, 0);
    for (long d : {-1L, 2L, 3L}) {
        auto t = rational_torsion(quadratic_twist(e, d));
        CHECK(t.group.a == 2);
    }
}
