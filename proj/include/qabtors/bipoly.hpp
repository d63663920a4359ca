#pragma once

#include <vector>

#include "qabtors/unipoly.hpp"

namespace qabtors {

// Polynomial in two variables t and y, stored by powers of y with
// coefficients in Q[t].  The main consumer is eliminate_t, which projects
// away t against a fixed univariate m(t).
struct BiPoly {
    std::vector<UniPoly> c;  // c[j] multiplies y^j

    BiPoly() = default;
    explicit BiPoly(std::vector<UniPoly> cc) : c(std::move(cc)) { trim(); }

    long deg_y() const { return static_cast<long>(c.size()) - 1; }
    long deg_t() const;
    bool is_zero() const { return c.empty(); }
    UniPoly eval_y(const Rational& y0) const;  // collapse to a poly in t
    void trim();
};

BiPoly bipoly_add(const BiPoly& a, const BiPoly& b);
BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b);

// Unique polynomial of degree < xs.size() through (xs[i], ys[i]).
// The xs must be pairwise distinct.
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// Res_t(m(t), B(t,y)) as a polynomial in y, taking B with formal t-degree
// deg_t(B).  Computed by specializing y and interpolating.  m needs
// degree >= 1; specializations where the t-degree of B drops are corrected
// by the matching power of lc(m).
UniPoly eliminate_t(const UniPoly& m, const BiPoly& B);

}  // namespace qabtors
