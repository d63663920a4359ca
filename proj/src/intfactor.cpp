#include "qabtors/intfactor.hpp"

#include <algorithm>
#include <stdexcept>

namespace qabtors {

namespace {

bool probably_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

// Brent-style rho with batched gcds.  n must be odd, composite, not a
// prime power issue for correctness (any nontrivial factor will do).
Integer pollard_rho(const Integer& n, unsigned long c) {
    Integer x(2), y(2), d(1), q(1), ys(0);
    const int batch = 128;
    long r = 1;
    auto f = [&](const Integer& v) {
        Integer t = (v * v + c) % n;
        return t;
    };
    while (d == 1) {
        x = y;
        for (long i = 0; i < r; ++i) y = f(y);
        long k = 0;
        while (k < r && d == 1) {
            ys = y;
            long lim = std::min<long>(batch, r - k);
            for (long i = 0; i < lim; ++i) {
                y = f(y);
                Integer diff = x - y;
                if (diff < 0) diff = -diff;
                q = (q * diff) % n;
            }
            mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += batch;
        }
        r *= 2;
    }
    if (d == n) {
        // backtrack one step at a time
        do {
            ys = f(ys);
            Integer diff = x - ys;
            if (diff < 0) diff = -diff;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (d == 1);
    }
    return d;
}

void factor_rec(Integer n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (probably_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = n;
    for (unsigned long c = 1; d == n; ++c) d = pollard_rho(n, c);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<Integer, unsigned> factor_integer(const Integer& n) {
    std::map<Integer, unsigned> out;
    Integer m = abs(n);
    if (m <= 1) return out;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[Integer(p)];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    unsigned long p = 17;
    while (m > 1 && Integer(p) * p <= m && p < 100000) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[Integer(p)];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
        p += 2;
    }
    if (m > 1) {
        if (Integer(p) * p > m) {
            ++out[m];  // trial division proved m prime
        } else {
            factor_rec(m, out);
        }
    }
    return out;
}

bool is_prime_int(const Integer& n) {
    if (n < 2) return false;
    return probably_prime(n);
}

bool is_squarefree_int(const Integer& n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factor_integer(n))
        if (e > 1) return false;
    return true;
}

Integer squarefree_kernel(const Integer& n) {
    if (n == 0) return 0;
    Integer k = (n < 0) ? Integer(-1) : Integer(1);
    for (const auto& [p, e] : factor_integer(n))
        if (e % 2 == 1) k *= p;
    return k;
}

std::vector<Integer> square_divisors(const Integer& n) {
    if (n == 0) throw std::invalid_argument("square_divisors of zero");
    std::vector<Integer> out{Integer(1)};
    for (const auto& [p, e] : factor_integer(n)) {
        unsigned half = e / 2;
        if (half == 0) continue;
        size_t base = out.size();
        Integer pk(1);
        for (unsigned k = 1; k <= half; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
    if (n == 0) throw std::invalid_argument("divisors of zero");
    std::vector<Integer> out{Integer(1)};
    for (const auto& [p, e] : factor_integer(n)) {
        size_t base = out.size();
        Integer pk(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qabtors
