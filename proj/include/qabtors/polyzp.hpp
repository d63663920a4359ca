#pragma once
#include <cstdint>
#include <vector>

#include "qabtors/rational.hpp"

namespace qabtors {

// Dense polynomials over Z/p for word-sized odd primes.  Backbone of the
// modular factorization and the splitting-shape prefilters.
class PolyZp {
  public:
    PolyZp() : p_(0) {}
    explicit PolyZp(uint64_t p) : p_(p) {}
    PolyZp(uint64_t p, std::vector<uint64_t> c) : p_(p), c_(std::move(c)) { trim(); }

    static PolyZp from_integers(const std::vector<Integer>& coeffs, uint64_t p);

    uint64_t modulus() const { return p_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    uint64_t operator[](size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    bool operator==(const PolyZp& o) const { return p_ == o.p_ && c_ == o.c_; }

    PolyZp operator+(const PolyZp& o) const;
    PolyZp operator-(const PolyZp& o) const;
    PolyZp operator*(const PolyZp& o) const;
    PolyZp mul_scalar(uint64_t a) const;
    PolyZp monic() const;
    PolyZp derivative() const;

    static PolyZp x(uint64_t p);
    static PolyZp constant(uint64_t p, uint64_t a);

  private:
    uint64_t p_;
    std::vector<uint64_t> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

struct DivRemZp {
    PolyZp quot, rem;
};
DivRemZp divrem(const PolyZp& a, const PolyZp& b);
PolyZp gcd(PolyZp a, PolyZp b);  // monic
PolyZp powmod(const PolyZp& base, const Integer& e, const PolyZp& mod);

// Distinct-degree then equal-degree splitting.  Input must be squarefree
// mod p.  Returns monic irreducible factors sorted by (degree, coeffs).
std::vector<PolyZp> factor_squarefree_modp(const PolyZp& f, uint64_t seed = 1);

// Degrees of the irreducible factors of f mod p (with multiplicity removed
// by the caller); cheap shape probe used by normality prefilters.
std::vector<long> factor_degrees_modp(const PolyZp& f, uint64_t seed = 1);

uint64_t mod_inverse(uint64_t a, uint64_t p);

}  // namespace qabtors
