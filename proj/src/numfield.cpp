#include "qabtors/numfield.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qabtors/bipoly.hpp"
#include "qabtors/factor.hpp"

namespace qabtors {

NumberField::NumberField(UniPoly m) : modulus(m.monic()) {
    if (modulus.degree() < 1) throw std::invalid_argument("field modulus must be nonconstant");
}

NFElem nf_reduce(const NumberField& K, const UniPoly& a) {
    if (a.degree() < K.degree()) return a;
    return divrem(a, K.modulus).rem;
}

NFElem nf_mul(const NumberField& K, const NFElem& a, const NFElem& b) {
    return nf_reduce(K, a * b);
}

namespace {

// extended Euclid in Q[x]: g = gcd, u*a + v*b = g, g monic (or zero)
struct XGcd {
    UniPoly g, u, v;
};

XGcd poly_xgcd(UniPoly a, UniPoly b) {
    UniPoly u0 = UniPoly::constant(Rational(1)), v0;
    UniPoly u1, v1 = UniPoly::constant(Rational(1));
    while (!b.is_zero()) {
        DivRem qr = divrem(a, b);
        UniPoly u2 = u0 - qr.quot * u1;
        UniPoly v2 = v0 - qr.quot * v1;
        a = b;
        b = qr.rem;
        u0 = u1;
        v0 = v1;
        u1 = u2;
        v1 = v2;
    }
    if (!a.is_zero()) {
        Rational inv_lead = Rational(1) / a.leading();
        return {a * inv_lead, u0 * inv_lead, v0 * inv_lead};
    }
    return {a, u0, v0};
}

}  // namespace

NFElem nf_inv(const NumberField& K, const NFElem& a) {
    NFElem ar = nf_reduce(K, a);
    if (ar.is_zero()) throw std::invalid_argument("inverse of zero field element");
    XGcd e = poly_xgcd(ar, K.modulus);
    if (e.g.degree() != 0)
        throw std::invalid_argument("element not invertible: modulus not irreducible?");
    return nf_reduce(K, e.u);
}

NFElem nf_eval_poly(const NumberField& K, const UniPoly& f, const NFElem& a) {
    NFElem acc;
    for (long k = f.degree(); k >= 0; --k) {
        acc = nf_mul(K, acc, a);
        acc = acc + UniPoly::constant(f[static_cast<size_t>(k)]);
    }
    return acc;
}

namespace {

// polynomials in y with coefficients in K, used only for the gcd step of
// the root extraction below
using PolyNF = std::vector<NFElem>;

void pnf_trim(PolyNF& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

long pnf_degree(const PolyNF& f) { return static_cast<long>(f.size()) - 1; }

PolyNF pnf_rem(const NumberField& K, PolyNF a, const PolyNF& b) {
    NFElem lead_inv = nf_inv(K, b.back());
    long db = pnf_degree(b);
    while (pnf_degree(a) >= db) {
        long shift = pnf_degree(a) - db;
        NFElem q = nf_mul(K, a.back(), lead_inv);
        for (long i = 0; i <= db; ++i)
            a[static_cast<size_t>(i + shift)] =
                nf_reduce(K, a[static_cast<size_t>(i + shift)] -
                                 nf_mul(K, q, b[static_cast<size_t>(i)]));
        pnf_trim(a);
        if (a.empty()) break;
    }
    return a;
}

PolyNF pnf_gcd(const NumberField& K, PolyNF a, PolyNF b) {
    pnf_trim(a);
    pnf_trim(b);
    while (!b.empty()) {
        PolyNF r = pnf_rem(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        NFElem inv = nf_inv(K, a.back());
        for (NFElem& c : a) c = nf_mul(K, c, inv);
    }
    return a;
}

// f(y + s*t) over K, for f with rational coefficients
PolyNF pnf_compose_shift(const NumberField& K, const UniPoly& f, long s) {
    NFElem st({Rational(0), Rational(s)});  // s*t
    PolyNF acc;
    for (long k = f.degree(); k >= 0; --k) {
        // acc <- acc * (y + st)
        PolyNF next(acc.size() + 1);
        for (size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] = next[j + 1] + acc[j];
            next[j] = nf_reduce(K, next[j] + nf_mul(K, acc[j], st));
        }
        next[0] = next[0] + UniPoly::constant(f[static_cast<size_t>(k)]);
        acc = std::move(next);
        pnf_trim(acc);
    }
    return acc;
}

}  // namespace

std::optional<std::vector<NFElem>> roots_in_root_field(const UniPoly& m_in) {
    UniPoly m = m_in.monic();
    long n = m.degree();
    if (n < 1) throw std::invalid_argument("constant polynomial has no root field");
    if (n == 1) return std::vector<NFElem>{UniPoly::constant(-m[0])};

    // norm polynomial: resultant_t(m(t), m(y - s*t)) has the n^2 values
    // r_i + s*r_j as roots; pick the smallest shift making them distinct
    long s = 0;
    UniPoly norm;
    BiPoly y_minus_st(
        {UniPoly({Rational(0), Rational(0)}), UniPoly::constant(Rational(1))});
    for (s = 1; s <= 64; ++s) {
        y_minus_st.c[0] = UniPoly({Rational(0), Rational(-s)});
        BiPoly b{{UniPoly::constant(Rational(1))}};
        BiPoly acc;
        for (long k = n; k >= 0; --k) {
            acc = bipoly_mul(acc, y_minus_st);
            acc = bipoly_add(acc, BiPoly{{UniPoly::constant(m[static_cast<size_t>(k)])}});
        }
        norm = eliminate_t(m, acc);
        if (is_squarefree(norm)) break;
    }
    if (s > 64) throw std::runtime_error("no squarefree shift found for root extraction");

    std::vector<UniPoly> parts = irreducible_factors(norm);
    for (const UniPoly& p : parts)
        if (p.degree() != n) return std::nullopt;  // some root lives outside the field

    NumberField K(m);
    PolyNF m_over_k;
    for (const Rational& c : m.coeffs()) m_over_k.push_back(UniPoly::constant(c));

    std::vector<NFElem> roots;
    std::set<std::vector<Rational>> seen;
    for (const UniPoly& p : parts) {
        PolyNF shifted = pnf_compose_shift(K, p, s);
        PolyNF g = pnf_gcd(K, m_over_k, shifted);
        if (pnf_degree(g) != 1)
            throw std::runtime_error("root extraction gcd is not linear");
        NFElem r = nf_reduce(K, -g[0]);  // g = y - r after monic normalization
        if (!nf_eval_poly(K, m, r).is_zero())
            throw std::runtime_error("extracted value is not a root");
        if (!seen.insert(r.coeffs()).second)
            throw std::runtime_error("duplicate root extracted");
        roots.push_back(r);
    }
    if (static_cast<long>(roots.size()) != n)
        throw std::runtime_error("root count does not match degree");
    return roots;
}

}  // namespace qabtors
