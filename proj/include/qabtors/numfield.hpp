#pragma once

#include <optional>
#include <vector>

#include "qabtors/unipoly.hpp"

namespace qabtors {

// K = Q[t]/(modulus), modulus monic of degree >= 1.  Elements are
// polynomials in t of degree < [K:Q].
struct NumberField {
    UniPoly modulus;

    explicit NumberField(UniPoly m);
    long degree() const { return modulus.degree(); }
};

using NFElem = UniPoly;

NFElem nf_reduce(const NumberField& K, const UniPoly& a);
NFElem nf_mul(const NumberField& K, const NFElem& a, const NFElem& b);
NFElem nf_inv(const NumberField& K, const NFElem& a);  // throws on zero
// f(a) in K, for f with rational coefficients
NFElem nf_eval_poly(const NumberField& K, const UniPoly& f, const NFElem& a);

// Roots of m inside its own root field Q[t]/(m), or nullopt when m does not
// split into linear factors there (i.e. the field is not normal over Q).
// m must be monic irreducible.  Each root comes back as a polynomial in t.
std::optional<std::vector<NFElem>> roots_in_root_field(const UniPoly& m);

}  // namespace qabtors
