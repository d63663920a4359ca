#include "qabtors/unipoly.hpp"

#include <sstream>

namespace qabtors {

namespace {
const Rational kZero(0);
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& a) {
    UniPoly p;
    if (a != 0) p.c_ = {a};
    return p;
}

UniPoly UniPoly::x() { return UniPoly({Rational(0), Rational(1)}); }

UniPoly UniPoly::monomial(const Rational& a, size_t k) {
    UniPoly p;
    if (a != 0) {
        p.c_.assign(k + 1, Rational(0));
        p.c_[k] = a;
    }
    return p;
}

const Rational& UniPoly::operator[](size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const Rational& UniPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rational& a) const {
    if (a == 0) return UniPoly();
    UniPoly r = *this;
    for (auto& x : r.c_) x *= a;
    return r;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading();
    return *this * inv;
}

UniPoly UniPoly::shift(const Rational& a) const {
    UniPoly acc;
    UniPoly lin({a, Rational(1)});
    for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + UniPoly::constant(c_[i]);
    return acc;
}

UniPoly UniPoly::scale_arg(const Rational& a) const {
    UniPoly r = *this;
    Rational p(1);
    for (size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] *= p;
        p *= a;
    }
    r.trim();
    return r;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + UniPoly::constant(c_[i]);
    return acc;
}

UniPoly UniPoly::pow(unsigned k) const {
    UniPoly acc = UniPoly::constant(Rational(1));
    UniPoly base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1 && i > 0);
        if (!unit) os << to_string(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

DivRem divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    UniPoly rem = a;
    std::vector<Rational> q;
    long db = b.degree();
    if (rem.degree() >= db) q.assign(rem.degree() - db + 1, Rational(0));
    Rational inv = 1 / b.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
        long k = rem.degree() - db;
        Rational coef = rem.leading() * inv;
        q[k] = coef;
        rem = rem - UniPoly::monomial(coef, k) * b;
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly div_exact(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

bool divides(const UniPoly& b, const UniPoly& a) {
    if (b.is_zero()) return a.is_zero();
    return divrem(a, b).rem.is_zero();
}

IntPrimitive integer_primitive(const UniPoly& f) {
    IntPrimitive out;
    if (f.is_zero()) {
        out.unit = 0;
        return out;
    }
    Integer den = 1;
    for (const auto& a : f.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.get_den().get_mpz_t());
    std::vector<Integer> z(f.coeffs().size());
    Integer content = 0;
    for (size_t i = 0; i < z.size(); ++i) {
        Rational scaled = f[i] * Rational(den);
        z[i] = scaled.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
    }
    if (z.back() < 0) content = -content;
    for (auto& a : z) a /= content;
    out.unit = make_rational(content, den);
    out.coeffs = std::move(z);
    return out;
}

UniPoly from_integer_coeffs(const std::vector<Integer>& coeffs) {
    std::vector<Rational> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = Rational(coeffs[i]);
    return UniPoly(std::move(c));
}

namespace {

using ZPoly = std::vector<Integer>;  // lowest first, no trailing zeros

long zdeg(const ZPoly& f) { return static_cast<long>(f.size()) - 1; }

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Integer zcontent(const ZPoly& f) {
    Integer g = 0;
    for (const auto& a : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    return g;
}

ZPoly zdiv_scalar(ZPoly f, const Integer& a) {
    for (auto& x : f) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), a.get_mpz_t());
        x = q;
    }
    return f;
}

// Exact pseudo-remainder: lc(g)^(deg f - deg g + 1) * f  mod  g.
// The trailing power is padded so the identity holds even when leading
// terms cancel early.
ZPoly zprem(ZPoly f, const ZPoly& g) {
    long dg = zdeg(g);
    const Integer& lg = g.back();
    long e = zdeg(f) - dg + 1;
    while (!f.empty() && zdeg(f) >= dg) {
        long k = zdeg(f) - dg;
        Integer lf = f.back();
        for (auto& x : f) x *= lg;
        for (long i = 0; i <= dg; ++i) f[k + i] -= lf * g[i];
        ztrim(f);
        --e;
    }
    if (e > 0 && !f.empty()) {
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), lg.get_mpz_t(), e);
        for (auto& x : f) x *= p;
    }
    return f;
}

// Subresultant PRS (Brown/Traub); returns the last nonzero element of the
// remainder sequence.  Only used for gcds, so scale factors are irrelevant.
ZPoly prs_last(ZPoly a, ZPoly b) {
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    Integer g = 1, h = 1;
    while (true) {
        long d = zdeg(a) - zdeg(b);
        ZPoly r = zprem(a, b);
        if (r.empty()) return b;
        if (zdeg(b) == 0) return b;
        Integer hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), d);
        r = zdiv_scalar(std::move(r), g * hd);
        a = std::move(b);
        b = std::move(r);
        g = a.back();
        if (d > 0) {
            Integer gd, hd1;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), d);
            mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), d - 1);
            Integer q;
            mpz_divexact(q.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
            h = q;
        }
    }
}

// Resultant over Z via the classical remainder recursion
//   res(a,b) = (-1)^(da*db) * lc(b)^(da-dr) * res(b, a mod b),
// using pseudo-remainders with the scale divided back out exactly.
Integer zresultant(ZPoly a, ZPoly b) {
    if (a.empty() || b.empty()) return 0;
    Integer sign = 1;
    if (zdeg(a) < zdeg(b)) {
        if ((zdeg(a) & 1) && (zdeg(b) & 1)) sign = -1;
        std::swap(a, b);
    }
    Rational acc(1);
    while (true) {
        long da = zdeg(a), db = zdeg(b);
        if (db == 0) {
            Integer p;
            mpz_pow_ui(p.get_mpz_t(), b.back().get_mpz_t(), da);
            Rational total = acc * Rational(p) * Rational(sign);
            if (total.get_den() != 1) throw std::logic_error("resultant scale error");
            return Integer(total.get_num());
        }
        ZPoly r = zprem(a, b);
        if (r.empty()) return 0;
        long dr = zdeg(r);
        if ((da & 1) && (db & 1)) sign = -sign;
        const Integer& lb = b.back();
        Integer num, den;
        mpz_pow_ui(num.get_mpz_t(), lb.get_mpz_t(), da - dr);
        mpz_pow_ui(den.get_mpz_t(), lb.get_mpz_t(), (da - db + 1) * db);
        acc *= Rational(num) / Rational(den);
        Integer cont = zcontent(r);
        if (cont > 1) {
            Integer cp;
            mpz_pow_ui(cp.get_mpz_t(), cont.get_mpz_t(), db);
            acc *= Rational(cp);
            r = zdiv_scalar(std::move(r), cont);
        }
        a = std::move(b);
        b = std::move(r);
    }
}

}  // namespace

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return UniPoly::constant(Rational(1));
    ZPoly za = integer_primitive(a).coeffs;
    ZPoly zb = integer_primitive(b).coeffs;
    ZPoly g = prs_last(std::move(za), std::move(zb));
    if (zdeg(g) == 0) return UniPoly::constant(Rational(1));
    Integer c = zcontent(g);
    if (g.back() < 0) c = -c;
    g = zdiv_scalar(std::move(g), c);
    UniPoly result = from_integer_coeffs(g).monic();
    return result;
}

bool is_squarefree(const UniPoly& f) {
    if (f.is_zero()) return false;
    if (f.degree() <= 1) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

Rational resultant(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) return Rational(0);
    auto const_pow = [](const Rational& c, long e) {
        Rational p(1);
        for (long i = 0; i < e; ++i) p *= c;
        return p;
    };
    if (f.degree() == 0) return const_pow(f.leading(), g.degree());
    if (g.degree() == 0) return const_pow(g.leading(), f.degree());
    IntPrimitive pf = integer_primitive(f);
    IntPrimitive pg = integer_primitive(g);
    Integer core = zresultant(pf.coeffs, pg.coeffs);
    // res(u*F, v*G) = u^deg(G) * v^deg(F) * res(F, G)
    return const_pow(pf.unit, g.degree()) * const_pow(pg.unit, f.degree()) * Rational(core);
}

Rational discriminant(const UniPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("discriminant needs degree >= 1");
    Rational r = resultant(f, f.derivative());
    r /= f.leading();
    long n = f.degree();
    if (((n * (n - 1)) / 2) % 2 == 1) r = -r;
    return r;
}

std::optional<UniPoly> sqrt_poly(const UniPoly& f) {
    if (f.is_zero()) return UniPoly();
    if (f.degree() % 2 != 0) return std::nullopt;
    auto lead = sqrt_exact(f.leading());
    if (!lead) return std::nullopt;
    long half = f.degree() / 2;
    std::vector<Rational> g(half + 1, Rational(0));
    g[half] = *lead;
    for (long k = half - 1; k >= 0; --k) {
        Rational s(0);
        for (long i = k + 1; i <= half; ++i) {
            long j = half + k - i;
            if (j > half || j < 0) continue;
            if (j > k) s += g[i] * g[j];
        }
        g[k] = (f[half + k] - s) / (g[half] * 2);
    }
    UniPoly cand(std::move(g));
    if (cand * cand == f) return cand;
    return std::nullopt;
}

}  // namespace qabtors
