#pragma once
#include <vector>

#include "qabtors/unipoly.hpp"

namespace qabtors {

struct FactorPower {
    UniPoly factor;  // monic irreducible
    unsigned multiplicity = 1;
};

// unit * prod(factor^multiplicity) reproduces the input exactly.  Factors are
// sorted by (degree, coefficient sequence) so output is deterministic.
struct FactorList {
    Rational unit;
    std::vector<FactorPower> factors;
    UniPoly expand() const;
};

// Complete factorization over Q (squarefree decomposition, modular
// factorization, Hensel lifting, subset recombination).  Rejects zero.
FactorList factor_over_Q(const UniPoly& f);

// Distinct monic irreducible factors, sorted; multiplicities dropped.
std::vector<UniPoly> irreducible_factors(const UniPoly& f);

// Distinct rational roots, sorted ascending.
std::vector<Rational> rational_roots(const UniPoly& f);

// All monic divisors of exact degree d of a squarefree polynomial.  Used by
// the isogeny kernel search where only bounded-degree divisors matter, so
// steep full factorizations are avoided.
std::vector<UniPoly> monic_divisors_of_degree(const UniPoly& f, long d);

// Yun decomposition: list of (squarefree part, multiplicity), pairwise
// coprime, product^mult * unit = f.
struct SquarefreePart {
    UniPoly part;
    unsigned multiplicity;
};
std::vector<SquarefreePart> squarefree_decomposition(const UniPoly& f, Rational& unit);

// Thrown when a search exceeds its combinatorial budget; callers treat it
// as "undecided", never as a verdict.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qabtors
