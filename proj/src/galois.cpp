#include "qabtors/galois.hpp"

#include <algorithm>

#include "qabtors/bipoly.hpp"
#include "qabtors/divpoly.hpp"
#include "qabtors/factor.hpp"
#include "qabtors/numfield.hpp"
#include "qabtors/polyzp.hpp"

namespace qabtors {

namespace {

constexpr long kDefaultCapOrder4 = 12;
constexpr long kDefaultCapOrder8 = 24;

bool is_irreducible(const UniPoly& f) {
    if (f.degree() < 1) return false;
    return irreducible_factors(f).size() == 1;
}

// A normal extension splits with equal factor degrees at every unramified
// prime.  Probe ~20 good primes; any unequal pattern is conclusive.
bool normality_prefilter(const UniPoly& f) {
    IntPrimitive ip = integer_primitive(f);
    long tested = 0;
    for (uint64_t p = 3; tested < 20 && p < 20000; p += 2) {
        bool composite = false;
        for (uint64_t q = 3; q * q <= p; q += 2)
            if (p % q == 0) {
                composite = true;
                break;
            }
        if (composite) continue;
        PolyZp fp = PolyZp::from_integers(ip.coeffs, p);
        if (fp.degree() != f.degree()) continue;  // p divides the leading coefficient
        if (gcd(fp, fp.derivative()).degree() != 0) continue;  // ramified-ish, skip
        std::vector<long> degs = factor_degrees_modp(fp);
        ++tested;
        for (long d : degs)
            if (d != degs.front()) return false;
    }
    return true;
}

}  // namespace

std::string to_string(CubicClass c) {
    switch (c) {
        case CubicClass::split: return "split";
        case CubicClass::one_root: return "one-root";
        case CubicClass::irreducible_square_disc: return "irreducible-square-disc";
        case CubicClass::irreducible_nonsquare_disc: return "irreducible-nonsquare-disc";
    }
    return "?";
}

std::string to_string(QuarticClass c) {
    switch (c) {
        case QuarticClass::V: return "V";
        case QuarticClass::C4: return "C4";
        case QuarticClass::D4: return "D4";
    }
    return "?";
}

std::string to_string(Order4Quick q) {
    switch (q) {
        case Order4Quick::yes_not_full: return "yes-not-full";
        case Order4Quick::needs_full_check: return "needs-full-check";
        case Order4Quick::no: return "no";
    }
    return "?";
}

bool cubic_is_abelian(CubicClass c) { return c != CubicClass::irreducible_nonsquare_disc; }

CubicClass cubic_class(const UniPoly& f) {
    if (f.degree() != 3) throw std::invalid_argument("cubic_class needs degree 3");
    if (!is_squarefree(f)) throw std::invalid_argument("cubic_class needs a squarefree cubic");
    size_t nroots = rational_roots(f).size();
    if (nroots == 3) return CubicClass::split;
    if (nroots == 1) return CubicClass::one_root;
    return is_square(discriminant(f)) ? CubicClass::irreducible_square_disc
                                      : CubicClass::irreducible_nonsquare_disc;
}

QuarticClass biquadratic_quartic_class(const Rational& b, const Rational& d) {
    UniPoly f({d, Rational(0), b, Rational(0), Rational(1)});
    if (!is_irreducible(f))
        throw std::invalid_argument("biquadratic quartic is reducible: " + f.str());
    if (is_square(d)) return QuarticClass::V;
    if (is_square((b * b - 4 * d) * d)) return QuarticClass::C4;
    return QuarticClass::D4;
}

AbelianityVerdict is_abelian_field(const UniPoly& f, long cap) {
    if (cap <= 0) cap = kDefaultCapOrder8;
    if (f.degree() < 1) throw std::invalid_argument("is_abelian_field needs degree >= 1");
    if (f.degree() == 1) return {AbelianityVerdict::Decision::abelian, 1, ""};
    if (!is_irreducible(f))
        throw std::invalid_argument("is_abelian_field needs an irreducible polynomial");
    if (f.degree() == 2) return {AbelianityVerdict::Decision::abelian, 2, ""};

    // cheap conclusive rejection comes before the cap so oversized
    // non-normal fields never reach the expensive path
    if (!normality_prefilter(f))
        return {AbelianityVerdict::Decision::non_abelian, 0, "normality-prefilter-fail"};
    if (f.degree() > cap) return {AbelianityVerdict::Decision::undecided, 0, "degree-cap"};

    auto roots = roots_in_root_field(f.monic());
    if (!roots)
        return {AbelianityVerdict::Decision::non_abelian, 0, "non-split-in-root-field"};

    NumberField K(f.monic());
    for (size_t i = 0; i < roots->size(); ++i)
        for (size_t j = i + 1; j < roots->size(); ++j)
            if (!(nf_eval_poly(K, (*roots)[j], (*roots)[i]) ==
                  nf_eval_poly(K, (*roots)[i], (*roots)[j])))
                return {AbelianityVerdict::Decision::non_abelian, 0,
                        "noncommuting-automorphisms"};
    return {AbelianityVerdict::Decision::abelian, f.degree(), ""};
}

AbelianityVerdict point_field_abelian(const RationalCurve& e, const UniPoly& g, long cap) {
    if (cap <= 0) cap = kDefaultCapOrder8;
    if (e.a1 != 0 || e.a2 != 0 || e.a3 != 0)
        throw std::invalid_argument("point_field_abelian needs a short-form curve");
    UniPoly gm = g.monic();
    UniPoly rhs({e.a6, e.a4, Rational(0), Rational(1)});

    if (gm.degree() == 1) {
        Rational x0 = -gm[0];
        Rational v = rhs.eval(x0);
        long order = (v == 0 || is_square(v)) ? 1 : 2;
        return {AbelianityVerdict::Decision::abelian, order, ""};
    }
    // 2-torsion factors: y = 0, so the point field is the x-field itself
    if (divides(gm, rhs)) return is_abelian_field(gm, cap);

    // Q(x) embeds in Q(x, y); a failed normality probe on g already rules
    // the larger field out
    if (!normality_prefilter(gm))
        return {AbelianityVerdict::Decision::non_abelian, 0, "normality-prefilter-fail"};

    // minimal polynomial of x + c*y via resultant; smallest c with a
    // squarefree full-degree result gives a primitive element
    long d = gm.degree();
    UniPoly minpoly;
    bool found = false;
    for (long c = 0; c <= 64 && !found; ++c) {
        BiPoly b;
        // (T - t)^2 - c^2 * rhs(t), coefficients in t by powers of T
        b.c.push_back(UniPoly({Rational(0), Rational(0), Rational(1)}) -
                      Rational(c * c) * rhs);
        b.c.push_back(UniPoly({Rational(0), Rational(-2)}));
        b.c.push_back(UniPoly::constant(Rational(1)));
        b.trim();
        UniPoly r = eliminate_t(gm, b);
        if (r.degree() == 2 * d && is_squarefree(r)) {
            minpoly = r;
            found = true;
        }
    }
    if (!found) throw std::runtime_error("no squarefree primitive-element resultant found");

    std::vector<UniPoly> parts = irreducible_factors(minpoly);
    for (const UniPoly& p : parts)
        if (p.degree() != parts.front().degree())
            throw std::runtime_error("conjugate field factors of unequal degree");
    return is_abelian_field(parts.front(), cap);
}

namespace {

std::vector<UniPoly> sorted_factors(const UniPoly& f) {
    std::vector<UniPoly> parts = irreducible_factors(f);
    std::sort(parts.begin(), parts.end(), [](const UniPoly& a, const UniPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    return parts;
}

}  // namespace

AbelianPointSearch exists_abelian_point_of_order(const RationalCurve& e, long n, long cap) {
    if (n != 2 && n != 3 && n != 4 && n != 8)
        throw std::invalid_argument("order search supports n in {2,3,4,8}");
    if (cap <= 0) cap = (n == 8) ? kDefaultCapOrder8 : kDefaultCapOrder4;
    RationalCurve es = integral_short_model(e);

    bool undecided = false;
    for (const UniPoly& g : sorted_factors(primitive_division_poly(es, static_cast<unsigned>(n)))) {
        if (g.degree() > cap) {
            undecided = true;
            continue;
        }
        AbelianityVerdict v = point_field_abelian(es, g, cap);
        if (v.decision == AbelianityVerdict::Decision::abelian)
            return {true, g, v.group_order};
        if (v.decision == AbelianityVerdict::Decision::undecided) undecided = true;
    }
    if (undecided)
        throw UndecidedError("order-" + std::to_string(n) +
                             " search exceeded the degree cap with no abelian witness");
    return {false, UniPoly(), 0};
}

bool full_level_abelian(const RationalCurve& e, long n, long cap) {
    if (n < 2 || n > 5) throw std::invalid_argument("full-level check supports n in {2,3,4,5}");
    if (cap <= 0) cap = kDefaultCapOrder8;
    RationalCurve es = integral_short_model(e);
    for (long m = 2; m <= n; ++m) {
        if (n % m != 0) continue;
        for (const UniPoly& g :
             sorted_factors(primitive_division_poly(es, static_cast<unsigned>(m)))) {
            if (g.degree() > cap)
                throw UndecidedError("level-" + std::to_string(n) +
                                     " factor exceeds the degree cap");
            AbelianityVerdict v = point_field_abelian(es, g, cap);
            if (v.decision == AbelianityVerdict::Decision::undecided)
                throw UndecidedError("level-" + std::to_string(n) + " factor undecided at cap");
            if (v.decision == AbelianityVerdict::Decision::non_abelian) return false;
        }
    }
    return true;
}

std::vector<UniPoly> halving_x_coordinates(const TwoTorsionModel& m, const CurvePoint& target) {
    if (target.inf || target.y != 0)
        throw std::invalid_argument("halving target must be an affine point of order 2");
    const Rational& b = m.b;
    const Rational& d = m.d;
    if (target.x == 0)
        return {UniPoly({d, Rational(0), -b, Rational(0), Rational(1)})};
    if (target.x * target.x + b * target.x + d == 0)
        return {UniPoly({d, Rational(0), b, Rational(0), Rational(1)}),
                UniPoly({-(b * b - 4 * d), Rational(0), Rational(0), Rational(0), Rational(1)})};
    throw std::invalid_argument("halving target is not a 2-torsion point of the model");
}

Order4Quick order4_over_Qab_quick(const TwoTorsionModel& m) {
    const Rational& b = m.b;
    const Rational& d = m.d;
    bool s1 = d != 0 && is_square(d);
    Rational q = (b * b - 4 * d) * d;
    bool s2 = q != 0 && is_square(q);
    // Either square condition puts an explicit halving of (0,0) inside an
    // abelian field: for square d the halves have rational x = +-sqrt(d), and
    // otherwise the y-coordinate quartic Z^4 - 2bd Z^2 + d^2(b^2-4d) has
    // square resolvent data, so it is V- or C4-split (or drops degree).
    if (s1 || s2) return Order4Quick::yes_not_full;
    // A conclusive "no" needs both X^4 +- bX^2 + d irreducible: reducibility
    // of either one collapses a halving tower into quadratic steps that this
    // screen cannot rule out (full rational 2-torsion is the typical cause).
    bool irr_minus =
        is_irreducible(UniPoly({d, Rational(0), -b, Rational(0), Rational(1)}));
    bool irr_plus = is_irreducible(UniPoly({d, Rational(0), b, Rational(0), Rational(1)}));
    return (irr_minus && irr_plus) ? Order4Quick::no : Order4Quick::needs_full_check;
}

}  // namespace qabtors
