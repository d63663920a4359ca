#pragma once
#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace qabtors {

// All arithmetic in this library is exact. Rationals are kept canonical
// (lowest terms, positive denominator) by GMP.
using Integer  = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long n, long d = 1) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& n, const Integer& d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q);

// True for perfect squares; zero counts as a square.
bool is_square(const Integer& n);
bool is_square(const Rational& q);
std::optional<Rational> sqrt_exact(const Rational& q);

// u^k = q solvable with u rational?  Used for model-rescaling tests where
// k is 4, 6 or 12.
bool is_nth_power(const Rational& q, unsigned k);
std::optional<Rational> nth_root_exact(const Rational& q, unsigned k);

// Accepts "p/q", plain integers, and factored literals like
// "-2^12*31^3/11^5" or "-1/2^5*19".  Everything right of '/' is one product.
Rational parse_rational(const std::string& text);

// Canonical "p/q" (bare integer when q = 1).
std::string to_string(const Rational& q);

}  // namespace qabtors
