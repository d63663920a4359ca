#pragma once
#include <initializer_list>
#include <vector>

#include "qabtors/rational.hpp"

namespace qabtors {

// Dense univariate polynomial over Q.  Coefficients are stored lowest
// degree first; the zero polynomial has an empty coefficient vector and
// degree() = -1.
class UniPoly {
  public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Rational& a);
    static UniPoly x();
    // a*x^k
    static UniPoly monomial(const Rational& a, size_t k);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& operator[](size_t i) const;  // 0 beyond degree
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& a) const;

    Rational eval(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;          // zero stays zero
    // f(x + a)
    UniPoly shift(const Rational& a) const;
    // f(a*x)
    UniPoly scale_arg(const Rational& a) const;
    UniPoly compose(const UniPoly& inner) const;
    UniPoly pow(unsigned k) const;

    std::string str() const;  // human form, highest degree first

  private:
    std::vector<Rational> c_;
    void trim();
};

inline UniPoly operator*(const Rational& a, const UniPoly& p) { return p * a; }

// Quotient and remainder; divisor must be nonzero.
struct DivRem {
    UniPoly quot, rem;
};
DivRem divrem(const UniPoly& a, const UniPoly& b);
// Exact division; throws if the remainder is nonzero.
UniPoly div_exact(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& b, const UniPoly& a);

// Monic gcd.  gcd(0,0) = 0.  Computed on integer primitive parts with a
// subresultant remainder sequence to keep coefficient growth polynomial.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

bool is_squarefree(const UniPoly& f);

// Content/primitive split over Z: f = unit * primitive integer polynomial
// with positive leading coefficient.
struct IntPrimitive {
    Rational unit;
    std::vector<Integer> coeffs;  // lowest degree first
};
IntPrimitive integer_primitive(const UniPoly& f);
UniPoly from_integer_coeffs(const std::vector<Integer>& coeffs);

// Resultant of two univariate polynomials (subresultant PRS).
Rational resultant(const UniPoly& f, const UniPoly& g);
Rational discriminant(const UniPoly& f);

// Exact polynomial square root if f = g^2, else nullopt.
std::optional<UniPoly> sqrt_poly(const UniPoly& f);

}  // namespace qabtors
