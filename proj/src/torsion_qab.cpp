#include "qabtors/torsion_qab.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "qabtors/divpoly.hpp"
#include "qabtors/galois.hpp"
#include "qabtors/isogeny.hpp"

namespace qabtors {

namespace {

std::string degrees_str(const std::vector<long>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

bool is_power_of(long n, long p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

std::vector<long> two_power_part(const std::vector<long>& degrees) {
    std::vector<long> out;
    for (long d : degrees)
        if ((d & (d - 1)) == 0) out.push_back(d);
    return out;
}

bool has(const std::vector<long>& v, long x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

// Degrees of cyclic isogenies that exist over Q at all.
const std::set<long>& degree_whitelist() {
    static const std::set<long> k = {1, 2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13,
                                     14, 15, 16, 17, 18, 19, 21, 25, 27, 37, 43, 67, 163};
    return k;
}

long prime_power_count(const std::vector<long>& degrees, long p) {
    long c = 0;
    for (long d : degrees)
        if (is_power_of(d, p)) ++c;
    return c;
}

struct TwoPart {
    long a = 1, b = 1;
};

TwoPart two_primary(const TorsionGroup& t) {
    auto part = [](long n) {
        long m = 1;
        while (n % 2 == 0) {
            m *= 2;
            n /= 2;
        }
        return m;
    };
    return {part(t.a), part(t.b)};
}

long p_part(long n, long p) {
    long m = 1;
    while (n % p == 0) {
        m *= p;
        n /= p;
    }
    return m;
}

}  // namespace

const std::vector<TorsionGroup>& allowed_groups() {
    static const std::vector<TorsionGroup> groups = [] {
        std::vector<TorsionGroup> g;
        for (long n : {1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 25, 27, 37, 43, 67, 163})
            g.push_back({1, n});
        for (long n = 1; n <= 9; ++n) g.push_back({2, 2 * n});
        for (long n : {1, 3}) g.push_back({3, 3 * n});
        for (long n = 1; n <= 4; ++n) g.push_back({4, 4 * n});
        g.push_back({5, 5});
        g.push_back({6, 6});
        g.push_back({8, 8});
        return g;
    }();
    return groups;
}

bool classification_gate(const TorsionGroup& t) {
    const auto& g = allowed_groups();
    return std::find(g.begin(), g.end(), t) != g.end();
}

void kenku_check(const std::vector<long>& degrees) {
    if (degrees.empty() || degrees.front() != 1)
        throw InvariantBreach("cyclic subgroup degrees must start with 1");
    if (!std::is_sorted(degrees.begin(), degrees.end()))
        throw InvariantBreach("cyclic subgroup degrees must be sorted");
    for (long d : degrees)
        if (!degree_whitelist().count(d))
            throw InvariantBreach("impossible cyclic isogeny degree " + std::to_string(d));
    if (degrees.size() > 8)
        throw InvariantBreach("more than 8 cyclic subgroups: " + degrees_str(degrees));

    static const std::map<long, long> caps = {{2, 8},  {3, 4},  {5, 3},  {7, 2},
                                              {11, 2}, {13, 2}, {17, 2}, {19, 2},
                                              {37, 2}, {43, 2}, {67, 2}, {163, 2}};
    long product = 1;
    for (auto [p, cap] : caps) {
        long c = prime_power_count(degrees, p);
        if (c > cap)
            throw InvariantBreach("too many " + std::to_string(p) +
                                  "-power subgroups in " + degrees_str(degrees));
        product *= c;
    }
    if (product != static_cast<long>(degrees.size()))
        throw InvariantBreach("subgroup counts are not multiplicative: " + degrees_str(degrees));

    std::map<long, long> mult;
    for (long d : degrees) ++mult[d];
    for (auto [d, m] : mult) {
        long expect = 1;
        for (auto [p, cap] : caps) {
            (void)cap;
            long q = p_part(d, p);
            if (q > 1) {
                auto it = mult.find(q);
                expect *= (it == mult.end()) ? 0 : it->second;
            }
        }
        if (d > 1 && m != expect)
            throw InvariantBreach("multiplicity of degree " + std::to_string(d) +
                                  " inconsistent in " + degrees_str(degrees));
    }
}

void bounds_check(const TorsionGroup& t, const std::vector<long>& degrees) {
    if (t.a * t.b > 163)
        throw InvariantBreach("torsion order " + std::to_string(t.a * t.b) + " exceeds 163");

    TwoPart t2 = two_primary(t);
    bool two_ok = (4 % t2.a == 0 && 16 % t2.b == 0) || (8 % t2.a == 0 && 8 % t2.b == 0);
    if (!two_ok) throw InvariantBreach("2-primary part outside Z/4 x Z/16 and Z/8 x Z/8");
    if (!(3 % p_part(t.a, 3) == 0 && 27 % p_part(t.b, 3) == 0))
        throw InvariantBreach("3-primary part outside Z/3 x Z/27");
    if (!(5 % p_part(t.a, 5) == 0 && 25 % p_part(t.b, 5) == 0))
        throw InvariantBreach("5-primary part outside Z/5 x Z/25");
    for (long p : {7L, 11L, 13L, 17L, 19L, 37L, 43L, 67L, 163L})
        if (!(p_part(t.a, p) == 1 && p % p_part(t.b, p) == 0))
            throw InvariantBreach("p-primary part too large at p = " + std::to_string(p));
    for (long p = 23; p <= 163; p += 2) {
        bool prime = true;
        for (long q = 3; q * q <= p; q += 2)
            if (p % q == 0) prime = false;
        if (!prime || p == 37 || p == 43 || p == 67 || p == 163) continue;
        if (p_part(t.b, p) != 1 || p_part(t.a, p) != 1)
            throw InvariantBreach("torsion at impossible prime " + std::to_string(p));
    }

    // 2-power degree multiset against the 2-primary group.
    static const std::map<std::pair<long, long>, std::vector<std::vector<long>>> table = {
        {{1, 1}, {{1}}},
        {{2, 2}, {{1}, {1, 2}}},
        {{2, 4}, {{1, 2}, {1, 2, 4, 4}}},
        {{2, 8}, {{1, 2, 4, 4}, {1, 2, 4, 4, 8, 8}}},
        {{2, 16}, {{1, 2, 4, 4, 8, 8, 16, 16}}},
        {{4, 4}, {{1, 2, 2, 2}, {1, 2, 4, 4}}},
        {{4, 8}, {{1, 2, 2, 2, 4, 4}, {1, 2, 4, 4, 8, 8, 8, 8}}},
        {{4, 16}, {{1, 2, 2, 2, 4, 4, 8, 8}}},
        {{8, 8}, {{1, 2, 2, 2, 4, 4, 4, 4}}},
    };
    std::vector<long> i2 = two_power_part(degrees);
    auto it = table.find({t2.a, t2.b});
    if (it == table.end())
        throw InvariantBreach("2-primary part Z/" + std::to_string(t2.a) + " x Z/" +
                              std::to_string(t2.b) + " has no compatibility row");
    const auto& options = it->second;
    if (std::find(options.begin(), options.end(), i2) == options.end())
        throw InvariantBreach("2-power isogeny degrees " + degrees_str(i2) +
                              " incompatible with 2-primary part Z/" + std::to_string(t2.a) +
                              " x Z/" + std::to_string(t2.b));
}

QabTorsionResult torsion_over_Qab(const RationalCurve& e, long degree_cap) {
    RationalCurve es = integral_short_model(e);
    QabTorsionResult r;

    IsogenyClassGraph graph = isogeny_class(es);
    for (unsigned d : cyclic_isogeny_degrees(graph)) r.isogeny_degrees.push_back(d);
    const std::vector<long>& I = r.isogeny_degrees;
    kenku_check(I);
    std::vector<long> I2 = two_power_part(I);
    long N = I.back();

    r.trace.push_back({"enumerate the cyclic subgroups defined over Q",
                       "degrees " + degrees_str(I) + ", largest N = " + std::to_string(N)});

    auto finish = [&](long a, long b, const std::string& condition, const std::string& evidence) {
        r.trace.push_back({condition, evidence});
        r.group = TorsionGroup{a, b};
        r.trace.push_back({"conclude", "torsion over the maximal abelian extension is " +
                                           to_string(r.group)});
        if (!classification_gate(r.group))
            throw InvariantBreach("computed group " + to_string(r.group) +
                                  " is outside the classification");
        bounds_check(r.group, I);
        return r;
    };

    static const std::set<long> big_cyclic = {11, 13, 15, 17, 19, 21, 25, 27, 37, 43, 67, 163};
    if (big_cyclic.count(N))
        return finish(1, N, "largest cyclic degree N is 11, 13, 15, 17, 19, 21, 25, 27, 37, 43, 67 or 163",
                      "N = " + std::to_string(N));

    if (N == 10 || N == 14 || N == 16 || N == 18)
        return finish(2, N, "largest cyclic degree N is 10, 14, 16 or 18",
                      "N = " + std::to_string(N));

    struct ExactRow {
        std::vector<long> degrees;
        long a, b;
    };
    static const std::vector<ExactRow> exact = {
        {{1, 5, 5}, 5, 5},
        {{1, 3, 3, 9}, 3, 9},
        {{1, 3, 3}, 3, 3},
        {{1, 2, 3, 3, 6, 6}, 6, 6},
        {{1, 2, 2, 2, 4, 4, 4, 4}, 8, 8},
        {{1, 2, 2, 2, 4, 4, 8, 8}, 4, 16},
        {{1, 2, 4, 4, 8, 8, 8, 8}, 4, 8},
        {{1, 2, 2, 2, 4, 4}, 4, 8},
        {{1, 2, 4, 4, 8, 8, 16, 16}, 2, 16},
        {{1, 2, 4, 4, 8, 8}, 2, 8},
        {{1, 2, 2, 2, 3, 6, 6, 6}, 4, 12},
    };
    for (const ExactRow& row : exact)
        if (I == row.degrees)
            return finish(row.a, row.b,
                          "the degree multiset " + degrees_str(row.degrees) +
                              " pins the group down by itself",
                          "degrees " + degrees_str(I));

    if (I2 == std::vector<long>{1, 2, 2, 2}) {
        long odd = has(I, 3) ? 3 : 1;
        return finish(4, 4 * odd,
                      "all three 2-torsion points generate rational 2-isogenies",
                      "2-power degrees [1,2,2,2], odd degrees " +
                          std::string(odd == 3 ? "include 3" : "are trivial"));
    }

    if (N % 2 == 1 && N <= 9) {
        UniPoly cubic{es.a6, es.a4, Rational(0), Rational(1)};
        CubicClass c = cubic_class(cubic);
        bool ab = cubic_is_abelian(c);
        std::string ev = "largest degree N = " + std::to_string(N) +
                         ", 2-division field " + (ab ? "abelian" : "not abelian") + " (cubic is " +
                         to_string(c) + ")";
        if (ab)
            return finish(2, 2 * N,
                          "no even cyclic degree and the 2-division field is abelian",
                          ev);
        return finish(1, N,
                      "no even cyclic degree and the 2-division field is not abelian", ev);
    }

    if (I2 == std::vector<long>{1, 2, 4, 4}) {
        bool eight = exists_abelian_point_of_order(es, 8, degree_cap).exists;
        bool full4 = full_level_abelian(es, 4, degree_cap);
        if (eight && full4)
            throw InvariantBreach(
                "an abelian point of order 8 and abelian full 4-torsion cannot coexist "
                "with 2-power degrees [1,2,4,4]");
        if (eight) {
            if (has(I, 3))
                throw InvariantBreach(
                    "an abelian point of order 8 cannot coexist with a rational 3-isogeny");
            return finish(2, 8,
                          "2-power degrees [1,2,4,4] and a point of order 8 lives in an "
                          "abelian extension",
                          "order-8 search succeeded, full 4-torsion not abelian");
        }
        long odd = has(I, 3) ? 3 : 1;
        if (full4)
            return finish(4, 4 * odd,
                          "2-power degrees [1,2,4,4], no abelian point of order 8, full "
                          "4-torsion abelian",
                          std::string("order-8 search failed, 4-division field abelian") +
                              (odd == 3 ? ", odd degrees include 3" : ""));
        return finish(2, 4 * odd,
                      "2-power degrees [1,2,4,4], no abelian point of order 8, full "
                      "4-torsion not abelian",
                      std::string("order-8 search failed, 4-division field not abelian") +
                          (odd == 3 ? ", odd degrees include 3" : ""));
    }

    if (I2 == std::vector<long>{1, 2}) {
        TwoTorsionModel m = two_torsion_model(es);
        Order4Quick quick = order4_over_Qab_quick(m);
        bool four;
        std::string how;
        if (quick == Order4Quick::no) {
            four = false;
            how = "square screen conclusive (b = " + m.b.get_str() + ", d = " + m.d.get_str() + ")";
        } else if (quick == Order4Quick::yes_not_full) {
            four = true;
            how = "square screen conclusive (b = " + m.b.get_str() + ", d = " + m.d.get_str() + ")";
        } else {
            four = exists_abelian_point_of_order(es, 4, degree_cap).exists;
            how = std::string("square screen inconclusive, order-4 search ") +
                  (four ? "succeeded" : "failed");
        }
        long odd = has(I, 3) ? 3 : (has(I, 5) ? 5 : 1);
        if (four) {
            if (odd == 5)
                throw InvariantBreach(
                    "an abelian point of order 4 cannot coexist with a rational 5-isogeny "
                    "when the only even degree is 2");
            return finish(2, 4 * odd,
                          "one rational 2-isogeny and a point of order 4 lives in an "
                          "abelian extension",
                          how + (odd == 3 ? ", odd degrees include 3" : ""));
        }
        std::string oddev = odd == 3 ? ", odd degrees include 3"
                            : odd == 5 ? ", odd degrees include 5"
                                       : "";
        return finish(2, 2 * odd,
                      "one rational 2-isogeny and no point of order 4 in any abelian "
                      "extension",
                      how + oddev);
    }

    throw InvariantBreach("no branch matches cyclic subgroup degrees " + degrees_str(I));
}

bool twist_invariance_check(const RationalCurve& e, long d, long degree_cap) {
    RationalCurve es = integral_short_model(e);
    QabTorsionResult base = torsion_over_Qab(es, degree_cap);
    QabTorsionResult twisted = torsion_over_Qab(quadratic_twist(es, Integer(d)), degree_cap);
    return base.group == twisted.group;
}

}  // namespace qabtors
