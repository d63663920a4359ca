#include "qabtors/isogeny.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qabtors/divpoly.hpp"
#include "qabtors/factor.hpp"

namespace qabtors {

namespace {

struct SporadicPair {
    unsigned ell;
    const char* j_a;
    const char* j_b;  // equal to j_a when the isogeny links two twists of one j
};

// Rational points on the genus >= 2 modular curves: each entry is the
// unordered pair of j-invariants linked by an ell-isogeny.
const SporadicPair kSporadicTable[] = {
    {11, "-11*131^3", "-11^2"},
    {11, "-2^15", "-2^15"},
    {17, "-17^2*101^3/2", "-17*373^3/2^17"},
    {19, "-2^15*3^3", "-2^15*3^3"},
    {37, "-7*11^3", "-7*137^3*2083^3"},
    {43, "-2^18*3^3*5^3", "-2^18*3^3*5^3"},
    {67, "-2^15*3^3*5^3*11^3", "-2^15*3^3*5^3*11^3"},
    {163, "-2^18*3^3*5^3*23^3*29^3", "-2^18*3^3*5^3*23^3*29^3"},
};

bool quadratic_has_root_mod(long a, long p_mod, unsigned ell) {
    for (unsigned r = 0; r < ell; ++r) {
        long v = (static_cast<long>(r) * r - a * r + p_mod) % static_cast<long>(ell);
        if (v < 0) v += ell;
        if (v == 0) return true;
    }
    return false;
}

}  // namespace

const std::vector<SporadicJEntry>& sporadic_j_pairs() {
    static const std::vector<SporadicJEntry> table = [] {
        std::vector<SporadicJEntry> v;
        for (const SporadicPair& sp : kSporadicTable)
            v.push_back({sp.ell, parse_rational(sp.j_a), parse_rational(sp.j_b)});
        return v;
    }();
    return table;
}

bool frobenius_filter_passes(const RationalCurve& e, unsigned ell) {
    unsigned tested = 0;
    for (uint64_t p = 5; p < 300 && tested < 12; p += 2) {
        if (!mpz_probab_prime_p(Integer(static_cast<unsigned long>(p)).get_mpz_t(), 30)) continue;
        if (p == ell) continue;
        if (!has_good_reduction_short(e, p)) continue;
        long ap = trace_of_frobenius(e, p);
        ++tested;
        if (!quadratic_has_root_mod(ap % static_cast<long>(ell),
                                    static_cast<long>(p % ell), ell))
            return false;
    }
    return true;
}

std::vector<IsogenyData> prime_isogenies(const RationalCurve& shortE, unsigned ell) {
    if (!shortE.is_short()) throw std::invalid_argument("prime_isogenies needs a short model");
    std::vector<IsogenyData> out;
    if (ell == 2) {
        UniPoly f({shortE.a6, shortE.a4, Rational(0), Rational(1)});
        for (const Rational& r : rational_roots(f)) {
            UniPoly h = UniPoly::x() - UniPoly::constant(r);
            out.push_back(velu_isogeny(shortE, h));
        }
        return out;
    }
    bool known = false;
    for (unsigned v : kVeluPrimes) known = known || v == ell;
    if (!known) throw std::invalid_argument("unsupported isogeny degree");
    if (!frobenius_filter_passes(shortE, ell)) return out;
    UniPoly prim = primitive_division_poly(shortE, ell);
    for (const UniPoly& h : monic_divisors_of_degree(prim, (ell - 1) / 2)) {
        try {
            out.push_back(velu_isogeny(shortE, h));
        } catch (const std::invalid_argument&) {
            // divisor whose roots are not a Galois-stable kernel
        }
    }
    return out;
}

bool is_dual_pair(const IsogenyData& phi, const IsogenyData& psi) {
    if (phi.degree != psi.degree) return false;
    // pull psi's kernel into the coordinates phi.Xn maps into
    Rational lam = short_model_scale(phi.codomain, psi.domain);
    UniPoly hpsi = psi.kernel.scale_arg(lam).monic();
    // clear denominators of hpsi evaluated at X = phi.Xn / h^2
    const UniPoly& h = phi.kernel;
    UniPoly h2 = h * h;
    UniPoly acc;  // sum c_k Xn^k (h^2)^(d-k)
    long d = hpsi.degree();
    UniPoly xnpow = UniPoly::constant(Rational(1));
    std::vector<UniPoly> xnpows;
    for (long k = 0; k <= d; ++k) {
        xnpows.push_back(xnpow);
        xnpow = xnpow * phi.Xn;
    }
    UniPoly h2pow = UniPoly::constant(Rational(1));
    for (long k = d; k >= 0; --k) {
        acc = acc + xnpows[k] * h2pow * hpsi[k];
        h2pow = h2pow * h2;
    }
    // the composite kills E[l] iff X(phi(P)) hits psi-kernel x-coords for the
    // points of E[l] outside ker phi; phi's own kernel never vanishes in Xn
    // (for odd l the numerator has no h factor), so test only the cofactor
    UniPoly prim = primitive_division_poly(phi.domain, phi.degree);
    UniPoly cof = div_exact(prim, phi.kernel).monic();
    return divides(cof, acc);
}

IsogenyClassGraph isogeny_class(const RationalCurve& e) {
    IsogenyClassGraph g;
    g.curves.push_back(integral_short_model(e));
    g.out_edges.emplace_back();
    Rational base_j = e.j_invariant();

    // sporadic partner bookkeeping: vertex -> (ell -> vertex it must link to)
    std::map<size_t, std::map<unsigned, size_t>> forced_sporadic;

    auto find_or_add = [&](const RationalCurve& cand) -> size_t {
        for (size_t i = 0; i < g.curves.size(); ++i)
            if (is_isomorphic_q(g.curves[i], cand)) return i;
        g.curves.push_back(cand);
        g.out_edges.emplace_back();
        if (g.curves.size() > 32) throw std::runtime_error("isogeny class too large");
        return g.curves.size() - 1;
    };

    for (size_t v = 0; v < g.curves.size(); ++v) {
        const RationalCurve cur = g.curves[v];
        for (unsigned ell : kVeluPrimes) {
            for (IsogenyData& iso : prime_isogenies(cur, ell)) {
                size_t w = find_or_add(integral_short_model(iso.codomain));
                IsogenyEdge edge;
                edge.from = v;
                edge.to = w;
                edge.degree = ell;
                edge.kernel = iso.kernel;
                edge.Xn = iso.Xn;
                edge.codomain_raw = iso.codomain;
                g.edges.push_back(std::move(edge));
                g.out_edges[v].push_back(g.edges.size() - 1);
            }
        }
        // at most one sporadic edge per degree can exist at a vertex
        Rational jv = g.curves[v].j_invariant();
        for (const SporadicPair& sp : kSporadicTable) {
            Rational ja = parse_rational(sp.j_a), jb = parse_rational(sp.j_b);
            size_t w;
            if (forced_sporadic.count(v) && forced_sporadic[v].count(sp.ell)) {
                w = forced_sporadic[v][sp.ell];  // reverse of an existing edge
                if (!(jv == ja || jv == jb)) continue;
            } else if (jv == ja || jv == jb) {
                Rational jw = (jv == ja) ? jb : ja;
                // partner vertex is always fresh: twins share a j-invariant
                // with their partner, so matching by isomorphism would fuse them
                g.curves.push_back(integral_short_model(curve_from_j(jw)));
                g.out_edges.emplace_back();
                w = g.curves.size() - 1;
                forced_sporadic[w][sp.ell] = v;
            } else {
                continue;
            }
            IsogenyEdge edge;
            edge.from = v;
            edge.to = w;
            edge.degree = sp.ell;
            edge.sporadic = true;
            g.edges.push_back(std::move(edge));
            g.out_edges[v].push_back(g.edges.size() - 1);
        }
    }
    return g;
}

namespace {

struct WalkState {
    const IsogenyClassGraph* g;
    std::vector<unsigned>* out;
    // memo for dual tests keyed by (edge, edge)
    std::map<std::pair<size_t, size_t>, bool> dual_memo;

    bool edges_are_dual(size_t e1, size_t e2) {
        auto key = std::make_pair(e1, e2);
        auto it = dual_memo.find(key);
        if (it != dual_memo.end()) return it->second;
        const IsogenyEdge& a = g->edges[e1];
        const IsogenyEdge& b = g->edges[e2];
        bool dual;
        if (a.sporadic || b.sporadic) {
            // one sporadic-degree isogeny per curve: the return edge is the dual
            dual = true;
        } else {
            IsogenyData phi, psi;
            phi.domain = g->curves[a.from];
            phi.codomain = a.codomain_raw;
            phi.degree = a.degree;
            phi.kernel = a.kernel;
            phi.Xn = a.Xn;
            psi.domain = g->curves[b.from];
            psi.degree = b.degree;
            psi.kernel = b.kernel;
            dual = is_dual_pair(phi, psi);
        }
        dual_memo[key] = dual;
        return dual;
    }

    void dfs(size_t v, long last_edge, unsigned product) {
        out->push_back(product);
        for (size_t eid : g->out_edges[v]) {
            const IsogenyEdge& edge = g->edges[eid];
            unsigned last_deg = last_edge < 0 ? 0 : g->edges[last_edge].degree;
            if (edge.degree < last_deg) continue;  // canonical: degrees ascending
            if (last_edge >= 0 && edge.degree == last_deg &&
                edges_are_dual(static_cast<size_t>(last_edge), eid))
                continue;
            unsigned long next = static_cast<unsigned long>(product) * edge.degree;
            if (next > 163) continue;  // larger cyclic degrees do not exist over Q
            dfs(edge.to, static_cast<long>(eid), static_cast<unsigned>(next));
        }
    }
};

}  // namespace

std::vector<unsigned> cyclic_isogeny_degrees(const IsogenyClassGraph& g) {
    std::vector<unsigned> out;
    WalkState st;
    st.g = &g;
    st.out = &out;
    st.dfs(0, -1, 1);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qabtors
