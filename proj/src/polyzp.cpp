#include "qabtors/polyzp.hpp"

#include <algorithm>
#include <stdexcept>

namespace qabtors {

namespace {

inline uint64_t addm(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    if (s >= p) s -= p;
    return s;
}
inline uint64_t subm(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
inline uint64_t mulm(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

uint64_t powm(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

// xorshift; deterministic EDF splitting shots
struct Rng {
    uint64_t s;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

}  // namespace

uint64_t mod_inverse(uint64_t a, uint64_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero mod p");
    return powm(a % p, p - 2, p);
}

PolyZp PolyZp::from_integers(const std::vector<Integer>& coeffs, uint64_t p) {
    std::vector<uint64_t> c(coeffs.size());
    Integer t;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        mpz_mod_ui(t.get_mpz_t(), coeffs[i].get_mpz_t(), p);
        c[i] = t.get_ui();
    }
    return PolyZp(p, std::move(c));
}

PolyZp PolyZp::x(uint64_t p) { return PolyZp(p, {0, 1}); }
PolyZp PolyZp::constant(uint64_t p, uint64_t a) { return PolyZp(p, {a % p}); }

PolyZp PolyZp::operator+(const PolyZp& o) const {
    std::vector<uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = addm(r[i], o.c_[i], p_);
    return PolyZp(p_, std::move(r));
}

PolyZp PolyZp::operator-(const PolyZp& o) const {
    std::vector<uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = subm(r[i], o.c_[i], p_);
    return PolyZp(p_, std::move(r));
}

PolyZp PolyZp::operator*(const PolyZp& o) const {
    if (is_zero() || o.is_zero()) return PolyZp(p_);
    std::vector<uint64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (!o.c_[j]) continue;
            r[i + j] = addm(r[i + j], mulm(c_[i], o.c_[j], p_), p_);
        }
    }
    return PolyZp(p_, std::move(r));
}

PolyZp PolyZp::mul_scalar(uint64_t a) const {
    a %= p_;
    std::vector<uint64_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = mulm(c_[i], a, p_);
    return PolyZp(p_, std::move(r));
}

PolyZp PolyZp::monic() const {
    if (is_zero()) return *this;
    return mul_scalar(mod_inverse(leading(), p_));
}

PolyZp PolyZp::derivative() const {
    if (c_.size() <= 1) return PolyZp(p_);
    std::vector<uint64_t> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = mulm(c_[i], i % p_, p_);
    return PolyZp(p_, std::move(r));
}

DivRemZp divrem(const PolyZp& a, const PolyZp& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero mod p");
    uint64_t p = a.modulus() ? a.modulus() : b.modulus();
    std::vector<uint64_t> rem(a.coeffs());
    long db = b.degree();
    long da = a.degree();
    if (da < db) return {PolyZp(p), a};
    std::vector<uint64_t> q(da - db + 1, 0);
    uint64_t inv = mod_inverse(b.leading(), p);
    for (long i = da; i >= db; --i) {
        uint64_t c = rem[i];
        if (!c) continue;
        uint64_t coef = mulm(c, inv, p);
        q[i - db] = coef;
        for (long j = 0; j <= db; ++j)
            rem[i - db + j] = subm(rem[i - db + j], mulm(coef, b[j], p), p);
    }
    return {PolyZp(p, std::move(q)), PolyZp(p, std::move(rem))};
}

PolyZp gcd(PolyZp a, PolyZp b) {
    while (!b.is_zero()) {
        PolyZp r = divrem(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyZp powmod(const PolyZp& base, const Integer& e, const PolyZp& mod) {
    uint64_t p = mod.modulus();
    PolyZp acc = PolyZp::constant(p, 1);
    PolyZp b = divrem(base, mod).rem;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = divrem(acc * acc, mod).rem;
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = divrem(acc * b, mod).rem;
    }
    return acc;
}

namespace {

// Equal-degree splitting (Cantor–Zassenhaus) of a monic squarefree f whose
// irreducible factors all have degree d.
void edf(const PolyZp& f, long d, Rng& rng, std::vector<PolyZp>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    uint64_t p = f.modulus();
    Integer pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
    Integer e = (pd - 1) / 2;
    while (true) {
        std::vector<uint64_t> rc(f.degree());
        for (auto& c : rc) c = rng.next() % p;
        PolyZp r(p, std::move(rc));
        if (r.is_zero()) continue;
        PolyZp g = gcd(r, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, rng, out);
            edf(divrem(f, g).quot, d, rng, out);
            return;
        }
        PolyZp h = powmod(r, e, f);
        h = h - PolyZp::constant(p, 1);
        g = gcd(h, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, rng, out);
            edf(divrem(f, g).quot, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<PolyZp> factor_squarefree_modp(const PolyZp& f_in, uint64_t seed) {
    PolyZp f = f_in.monic();
    uint64_t p = f.modulus();
    if (p == 2) throw std::invalid_argument("p = 2 unsupported");
    std::vector<PolyZp> out;
    Rng rng{seed * 0x9e3779b97f4a7c15ull + 0xdeadbeef};
    // distinct-degree decomposition
    PolyZp h = PolyZp::x(p);
    PolyZp rest = f;
    long d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (2 * d > rest.degree()) {
            out.push_back(rest.monic());
            break;
        }
        h = powmod(h, Integer(static_cast<unsigned long>(p)), rest);
        PolyZp g = gcd(h - PolyZp::x(p), rest);
        if (g.degree() > 0) {
            edf(g, d, rng, out);
            rest = divrem(rest, g).quot;
            h = divrem(h, rest).rem;
        }
    }
    std::sort(out.begin(), out.end(), [](const PolyZp& a, const PolyZp& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    return out;
}

std::vector<long> factor_degrees_modp(const PolyZp& f, uint64_t seed) {
    auto fs = factor_squarefree_modp(f, seed);
    std::vector<long> d(fs.size());
    for (size_t i = 0; i < fs.size(); ++i) d[i] = fs[i].degree();
    return d;
}

}  // namespace qabtors
