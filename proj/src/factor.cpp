#include "qabtors/factor.hpp"

#include <algorithm>
#include <functional>

#include "qabtors/polyzp.hpp"

namespace qabtors {

namespace {

using ZVec = std::vector<Integer>;

void ztrim(ZVec& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

long zdeg(const ZVec& f) { return static_cast<long>(f.size()) - 1; }

Integer mod_reduce(const Integer& a, const Integer& M) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), M.get_mpz_t());
    return r;
}

ZVec reduce_mod(ZVec f, const Integer& M) {
    for (auto& c : f) c = mod_reduce(c, M);
    ztrim(f);
    return f;
}

ZVec mul_mod(const ZVec& a, const ZVec& b, const Integer& M) {
    if (a.empty() || b.empty()) return {};
    ZVec r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return reduce_mod(std::move(r), M);
}

ZVec add_mod(const ZVec& a, const ZVec& b, const Integer& M) {
    ZVec r(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return reduce_mod(std::move(r), M);
}

ZVec sub_mod(const ZVec& a, const ZVec& b, const Integer& M) {
    ZVec r(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return reduce_mod(std::move(r), M);
}

// divisor must be monic
void divrem_monic_mod(const ZVec& a, const ZVec& b, const Integer& M, ZVec& q, ZVec& r) {
    r = a;
    q.clear();
    long db = zdeg(b);
    if (zdeg(r) >= db) q.assign(zdeg(r) - db + 1, Integer(0));
    while (zdeg(r) >= db) {
        long k = zdeg(r) - db;
        Integer c = r.back();
        q[k] = c;
        for (long i = 0; i <= db; ++i) r[k + i] -= c * b[i];
        ztrim(r);
    }
    q = reduce_mod(std::move(q), M);
    r = reduce_mod(std::move(r), M);
}

ZVec balanced(ZVec f, const Integer& M) {
    Integer half = M / 2;
    for (auto& c : f) {
        c = mod_reduce(c, M);
        if (c > half) c -= M;
    }
    ztrim(f);
    return f;
}

ZVec from_polyzp(const PolyZp& f) {
    ZVec r(f.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = Integer(static_cast<unsigned long>(f.coeffs()[i]));
    return r;
}

// extended euclid over Z/p for the initial Bezout pair
void bezout_modp(const PolyZp& g, const PolyZp& h, PolyZp& s, PolyZp& t) {
    uint64_t p = g.modulus();
    PolyZp r0 = g, r1 = h;
    PolyZp s0 = PolyZp::constant(p, 1), s1 = PolyZp(p);
    PolyZp t0 = PolyZp(p), t1 = PolyZp::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        PolyZp s2 = s0 - q * s1;
        PolyZp t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    // r0 = gcd (a unit for coprime inputs); normalize to 1
    if (r0.degree() != 0) throw std::logic_error("hensel: factors not coprime mod p");
    uint64_t inv = mod_inverse(r0.leading(), p);
    s = s0.mul_scalar(inv);
    t = t0.mul_scalar(inv);
}

// Quadratic Hensel: from F = g*h (mod p^(2^j)) to target modulus P = p^(2^J).
// F, g, h monic.  Maintains s*g + t*h = 1.
void hensel_pair(const ZVec& F, ZVec& g, ZVec& h, ZVec& s, ZVec& t,
                 const Integer& p, const Integer& P) {
    Integer m = p;
    while (m < P) {
        Integer m2 = m * m;
        if (m2 > P) m2 = P;  // P is a power p^(2^J), so m2 divides into it
        // e = F - g*h
        ZVec e = sub_mod(reduce_mod(F, m2), mul_mod(g, h, m2), m2);
        ZVec q, r;
        divrem_monic_mod(mul_mod(s, e, m2), h, m2, q, r);
        g = add_mod(g, add_mod(mul_mod(t, e, m2), mul_mod(q, g, m2), m2), m2);
        h = add_mod(h, r, m2);
        // refresh Bezout: b = s*g + t*h - 1
        ZVec b = add_mod(mul_mod(s, g, m2), mul_mod(t, h, m2), m2);
        if (b.empty()) b = ZVec{Integer(0)};
        b[0] -= 1;
        b = reduce_mod(std::move(b), m2);
        ZVec c, d;
        divrem_monic_mod(mul_mod(s, b, m2), h, m2, c, d);
        s = sub_mod(s, d, m2);
        t = sub_mod(t, add_mod(mul_mod(t, b, m2), mul_mod(c, g, m2), m2), m2);
        m = m2;
    }
}

// Recursive split lift: F monic mod P, F = prod(parts) mod p.
void lift_tree(const ZVec& F, const std::vector<PolyZp>& parts, size_t lo, size_t hi,
               const Integer& p, const Integer& P, std::vector<ZVec>& out) {
    if (hi - lo == 1) {
        out.push_back(reduce_mod(F, P));
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    uint64_t sp = parts[lo].modulus();
    PolyZp gp = PolyZp::constant(sp, 1), hp = PolyZp::constant(sp, 1);
    for (size_t i = lo; i < mid; ++i) gp = gp * parts[i];
    for (size_t i = mid; i < hi; ++i) hp = hp * parts[i];
    PolyZp s0, t0;
    bezout_modp(gp, hp, s0, t0);
    ZVec g = from_polyzp(gp), h = from_polyzp(hp);
    ZVec s = from_polyzp(s0), t = from_polyzp(t0);
    hensel_pair(F, g, h, s, t, p, P);
    lift_tree(g, parts, lo, mid, p, P, out);
    lift_tree(h, parts, mid, hi, p, P, out);
}

struct LiftedFactorization {
    Integer P;           // modulus
    std::vector<ZVec> factors;  // monic mod P, product = monic(f) mod P
};

Integer norm2_ceil(const ZVec& f) {
    Integer s = 0;
    for (const auto& c : f) s += c * c;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    return r + 1;
}

const uint64_t kPrimePool[] = {
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
    179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257,
    263, 269, 271, 277, 281, 283, 293, 307, 311, 313, 317, 331, 337, 347, 349,
    353, 359, 367, 373, 379, 383, 389, 397, 401, 409, 419, 421, 431, 433, 439,
    443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521, 523, 541,
    547, 557, 563, 569, 571, 577, 587, 593, 599, 601, 607, 613, 617, 619, 631,
    641, 643, 647, 653, 659, 661, 673, 677, 683, 691, 701, 709, 719, 727, 733};

/// DDF shape only: returns the number of irreducible factors mod p, or -1 if
// p is unusable (divides lc or f not squarefree mod p).
long modular_factor_count(const ZVec& f, uint64_t p) {
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) return -1;
    PolyZp fp = PolyZp::from_integers(f, p);
    if (fp.degree() != zdeg(f)) return -1;
    PolyZp fpm = fp.monic();
    if (gcd(fpm, fpm.derivative()).degree() != 0) return -1;
    long count = 0;
    PolyZp h = PolyZp::x(p);
    PolyZp rest = fpm;
    long d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (2 * d > rest.degree()) {
            ++count;
            break;
        }
        h = powmod(h, Integer(static_cast<unsigned long>(p)), rest);
        PolyZp g = gcd(h - PolyZp::x(p), rest);
        if (g.degree() > 0) {
            count += g.degree() / d;
            rest = divrem(rest, g).quot;
            if (rest.degree() > 0) h = divrem(h, rest).rem;
        }
    }
    return count;
}

LiftedFactorization lift_squarefree(const ZVec& f) {
    // choose the usable prime with the fewest modular factors
    uint64_t best_p = 0;
    long best_count = -1;
    int tried = 0;
    for (uint64_t p : kPrimePool) {
        long c = modular_factor_count(f, p);
        if (c < 0) continue;
        if (best_count < 0 || c < best_count) {
            best_count = c;
            best_p = p;
        }
        if (++tried >= 7 || best_count == 1) break;
    }
    if (best_p == 0) throw std::logic_error("no usable factorization prime found");

    PolyZp fp = PolyZp::from_integers(f, best_p).monic();
    std::vector<PolyZp> parts = factor_squarefree_modp(fp, /*seed=*/best_p);

    LiftedFactorization out;
    // coefficient bound for lc * (factor of f): |lc| * 2^n * ||f||_2
    // (P must clear it even for one modular factor, so divisor extraction
    // can read candidate coefficients off balanced residues)
    Integer bound = abs(f.back()) * norm2_ceil(f);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), zdeg(f) + 1);  // includes the *2 slack
    Integer P(static_cast<unsigned long>(best_p));
    while (P <= bound) P = P * P;

    // monic image of f mod P
    Integer lc = f.back();
    Integer lc_inv;
    if (mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), P.get_mpz_t()) == 0)
        throw std::logic_error("leading coefficient not invertible");
    ZVec F = f;
    for (auto& c : F) c = mod_reduce(c * lc_inv, P);

    out.P = P;
    lift_tree(F, parts, 0, parts.size(), Integer(static_cast<unsigned long>(best_p)), P, out.factors);
    return out;
}

UniPoly unipoly_from_z(const ZVec& z) { return from_integer_coeffs(z); }

// primitive part with positive leading coefficient
ZVec zprimitive(ZVec f) {
    if (f.empty()) return f;
    Integer g = 0;
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (f.back() < 0) g = -g;
    for (auto& c : f) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        c = q;
    }
    return f;
}

bool zdivides(const ZVec& d, const ZVec& a) {
    // exact division test over Z
    ZVec r = a;
    long dd = zdeg(d);
    const Integer& lead = d.back();
    while (zdeg(r) >= dd) {
        Integer q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), lead.get_mpz_t());
        if (rem != 0) return false;
        long k = zdeg(r) - dd;
        for (long i = 0; i <= dd; ++i) r[k + i] -= q * d[i];
        ztrim(r);
    }
    return r.empty();
}

ZVec zdiv_exact_poly(const ZVec& a, const ZVec& d) {
    ZVec r = a, q;
    long dd = zdeg(d);
    q.assign(zdeg(a) - dd + 1, Integer(0));
    const Integer& lead = d.back();
    while (zdeg(r) >= dd) {
        Integer qq;
        mpz_divexact(qq.get_mpz_t(), r.back().get_mpz_t(), lead.get_mpz_t());
        long k = zdeg(r) - dd;
        q[k] = qq;
        for (long i = 0; i <= dd; ++i) r[k + i] -= qq * d[i];
        ztrim(r);
    }
    if (!r.empty()) throw std::logic_error("inexact integer poly division");
    return q;
}

// Zassenhaus recombination.  If degree_filter >= 0, collects every monic
// rational divisor of that exact degree instead of factoring completely.
std::vector<UniPoly> recombine(ZVec f, LiftedFactorization lifted, long degree_filter) {
    std::vector<UniPoly> out;
    std::vector<ZVec>& mods = lifted.factors;
    const Integer& P = lifted.P;
    long budget = 5'000'000;

    auto consume_budget = [&budget]() {
        if (--budget < 0) throw BudgetExceeded("factor recombination budget exceeded");
    };

    if (degree_filter >= 0) {
        if (degree_filter == 0) return {UniPoly::constant(Rational(1))};
        // DFS over subsets with degree sum = degree_filter
        std::vector<size_t> chosen;
        std::vector<UniPoly> found;
        auto total_deg = [&](size_t from) {
            long s = 0;
            for (size_t i = from; i < mods.size(); ++i) s += zdeg(mods[i]);
            return s;
        };
        std::function<void(size_t, long)> dfs = [&](size_t idx, long need) {
            if (need == 0) {
                consume_budget();
                ZVec cand{f.back()};
                for (size_t i : chosen) cand = mul_mod(cand, mods[i], P);
                cand = balanced(std::move(cand), P);
                cand = zprimitive(std::move(cand));
                if (zdivides(cand, f)) found.push_back(unipoly_from_z(cand).monic());
                return;
            }
            if (idx >= mods.size() || need < 0) return;
            if (total_deg(idx) < need) return;
            consume_budget();
            chosen.push_back(idx);
            dfs(idx + 1, need - zdeg(mods[idx]));
            chosen.pop_back();
            dfs(idx + 1, need);
        };
        dfs(0, degree_filter);
        std::sort(found.begin(), found.end(), [](const UniPoly& a, const UniPoly& b) {
            return a.coeffs() < b.coeffs();
        });
        found.erase(std::unique(found.begin(), found.end()), found.end());
        return found;
    }

    // full factorization: subsets by increasing cardinality
    std::vector<size_t> live(mods.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = i;

    size_t card = 1;
    while (live.size() > 0 && 2 * card <= live.size()) {
        std::vector<size_t> comb(card);
        for (size_t i = 0; i < card; ++i) comb[i] = i;
        bool restart = false;
        while (true) {
            consume_budget();
            // trailing-coefficient pretest
            bool plausible = true;
            if (!f.empty() && f[0] != 0) {
                Integer t0 = f.back();
                for (size_t i = 0; i < card; ++i) {
                    const ZVec& m = mods[live[comb[i]]];
                    t0 = mod_reduce(t0 * (m.empty() ? Integer(0) : m[0]), P);
                }
                Integer half = P / 2;
                if (t0 > half) t0 -= P;
                Integer corner = f.back() * f[0];
                if (t0 == 0 || !mpz_divisible_p(corner.get_mpz_t(), t0.get_mpz_t()))
                    plausible = false;
            }
            if (plausible) {
                ZVec cand{f.back()};
                for (size_t i = 0; i < card; ++i) cand = mul_mod(cand, mods[live[comb[i]]], P);
                cand = balanced(std::move(cand), P);
                cand = zprimitive(std::move(cand));
                if (zdeg(cand) >= 1 && zdivides(cand, f)) {
                    out.push_back(unipoly_from_z(cand).monic());
                    f = zdiv_exact_poly(f, cand);
                    std::vector<size_t> next_live;
                    for (size_t i = 0, k = 0; i < live.size(); ++i) {
                        if (k < card && comb[k] == i) { ++k; continue; }
                        next_live.push_back(live[i]);
                    }
                    live = std::move(next_live);
                    restart = true;
                    break;
                }
            }
            // next combination
            long i = static_cast<long>(card) - 1;
            while (i >= 0 && comb[i] == live.size() - card + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (size_t j = i + 1; j < card; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!restart) ++card;
        if (zdeg(f) == 0) break;
    }
    if (zdeg(f) >= 1) out.push_back(unipoly_from_z(f).monic());
    return out;
}

std::vector<UniPoly> factor_squarefree_q(const UniPoly& f) {
    if (f.degree() == 1) return {f.monic()};
    ZVec z = [&] {
        auto ip = integer_primitive(f);
        return ZVec(ip.coeffs.begin(), ip.coeffs.end());
    }();
    // pull out x^1 (squarefree input has it at most once)
    std::vector<UniPoly> out;
    if (!z.empty() && z[0] == 0) {
        out.push_back(UniPoly::x());
        z.erase(z.begin());
    }
    if (zdeg(z) == 1) {
        out.push_back(unipoly_from_z(z).monic());
        return out;
    }
    if (zdeg(z) >= 2) {
        auto lifted = lift_squarefree(z);
        auto rest = recombine(std::move(z), std::move(lifted), -1);
        out.insert(out.end(), rest.begin(), rest.end());
    }
    return out;
}

}  // namespace

UniPoly FactorList::expand() const {
    UniPoly acc = UniPoly::constant(unit);
    for (const auto& fp : factors) acc = acc * fp.factor.pow(fp.multiplicity);
    return acc;
}

std::vector<SquarefreePart> squarefree_decomposition(const UniPoly& f, Rational& unit) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    unit = f.leading();
    std::vector<SquarefreePart> out;
    if (f.degree() == 0) return out;
    UniPoly fm = f.monic();
    UniPoly g = poly_gcd(fm, fm.derivative());
    UniPoly c = div_exact(fm, g);
    UniPoly d = div_exact(fm.derivative(), g) - c.derivative();
    unsigned i = 1;
    while (c.degree() > 0) {
        UniPoly p = poly_gcd(c, d);
        if (p.degree() > 0) out.push_back({p, i});
        c = div_exact(c, p);
        d = div_exact(d, p) - c.derivative();
        ++i;
    }
    return out;
}

FactorList factor_over_Q(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    FactorList out;
    if (f.degree() == 0) {
        out.unit = f.leading();
        return out;
    }
    Rational unit;
    auto parts = squarefree_decomposition(f, unit);
    out.unit = unit;
    for (const auto& sp : parts) {
        for (const auto& irr : factor_squarefree_q(sp.part))
            out.factors.push_back({irr, sp.multiplicity});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FactorPower& a, const FactorPower& b) {
                  if (a.factor.degree() != b.factor.degree())
                      return a.factor.degree() < b.factor.degree();
                  return a.factor.coeffs() < b.factor.coeffs();
              });
    return out;
}

std::vector<UniPoly> irreducible_factors(const UniPoly& f) {
    auto fl = factor_over_Q(f);
    std::vector<UniPoly> out;
    for (auto& fp : fl.factors) out.push_back(fp.factor);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Rational> rational_roots(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    std::vector<Rational> roots;
    Rational unit;
    for (const auto& sp : squarefree_decomposition(f, unit)) {
        UniPoly g = sp.part;
        if (g.degree() < 1) continue;
        ZVec z = [&] {
            auto ip = integer_primitive(g);
            return ZVec(ip.coeffs.begin(), ip.coeffs.end());
        }();
        if (!z.empty() && z[0] == 0) {
            roots.push_back(Rational(0));
            z.erase(z.begin());
        }
        if (zdeg(z) == 1) {
            roots.push_back(make_rational(-z[0], z[1]));
            continue;
        }
        if (zdeg(z) < 1) continue;
        auto lifted = lift_squarefree(z);
        for (const auto& lin : recombine(z, std::move(lifted), 1))
            roots.push_back(-lin[0]);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<UniPoly> monic_divisors_of_degree(const UniPoly& f, long d) {
    if (!is_squarefree(f)) throw std::invalid_argument("divisor search needs squarefree input");
    if (d < 0 || d > f.degree()) return {};
    if (d == 0) return {UniPoly::constant(Rational(1))};
    if (d == f.degree()) return {f.monic()};
    ZVec z = [&] {
        auto ip = integer_primitive(f);
        return ZVec(ip.coeffs.begin(), ip.coeffs.end());
    }();
    bool has_zero_root = !z.empty() && z[0] == 0;
    if (has_zero_root) z.erase(z.begin());

    bool zlifted = false;
    LiftedFactorization lifted;
    auto divisors_of_z = [&](long k) -> std::vector<UniPoly> {
        if (k < 0 || k > zdeg(z)) return {};
        if (k == 0) return {UniPoly::constant(Rational(1))};
        if (k == zdeg(z)) return {unipoly_from_z(z).monic()};
        if (!zlifted) {
            lifted = lift_squarefree(z);
            zlifted = true;
        }
        return recombine(z, lifted, k);
    };

    std::vector<UniPoly> out = divisors_of_z(d);
    if (has_zero_root)
        for (auto& g : divisors_of_z(d - 1)) out.push_back((g * UniPoly::x()).monic());
    std::sort(out.begin(), out.end(), [](const UniPoly& a, const UniPoly& b) {
        return a.coeffs() < b.coeffs();
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace qabtors
