#pragma once

#include <cstddef>
#include <vector>

#include "qabtors/curve.hpp"
#include "qabtors/velu.hpp"

namespace qabtors {

// Degrees where the kernel polynomial is computed explicitly.
inline constexpr unsigned kVeluPrimes[] = {2, 3, 5, 7, 13};
// Degrees handled through the finite list of rational j-invariants.
inline constexpr unsigned kSporadicPrimes[] = {11, 17, 19, 37, 43, 67, 163};

// Necessary condition for a rational ell-isogeny: x^2 - a_p x + p has a
// root mod ell at every good prime p.  Returns false only with proof
// (a witness prime whose characteristic polynomial has no root).
bool frobenius_filter_passes(const RationalCurve& e, unsigned ell);

// One noncuspidal rational point pair on a genus >= 2 modular curve: the
// two j-invariants linked by an ell-isogeny (equal when the isogeny
// connects two twists with one j).
struct SporadicJEntry {
    unsigned ell;
    Rational j_a, j_b;
};

// The complete list for ell in kSporadicPrimes, in table order.  A data
// file copy ships with the project; a test pins the two together.
const std::vector<SporadicJEntry>& sporadic_j_pairs();

// All rational ell-isogenies from a short-model curve, kernel and map
// included, for ell in kVeluPrimes.
std::vector<IsogenyData> prime_isogenies(const RationalCurve& shortE, unsigned ell);

// Is psi the dual of phi (composition = multiplication by the degree)?
// Both must be velu-built isogenies of the same prime degree with
// phi.codomain isomorphic to psi.domain; psi's kernel is pulled through
// the connecting isomorphism before the test.
bool is_dual_pair(const IsogenyData& phi, const IsogenyData& psi);

struct IsogenyEdge {
    size_t from = 0, to = 0;
    unsigned degree = 0;
    bool sporadic = false;
    UniPoly kernel, Xn;        // empty when sporadic
    RationalCurve codomain_raw;  // codomain in the coordinates Xn maps into
};

struct IsogenyClassGraph {
    std::vector<RationalCurve> curves;           // [0] = integral short model of the input
    std::vector<IsogenyEdge> edges;              // directed
    std::vector<std::vector<size_t>> out_edges;  // per vertex, indices into edges
};

// The rational isogeny class of e, curves up to Q-isomorphism.  Sporadic
// partner vertices carry a representative curve of the partner j-invariant
// (the twist is immaterial for the shape of the graph).
IsogenyClassGraph isogeny_class(const RationalCurve& e);

// Sorted multiset of degrees of cyclic isogenies from vertex 0, 1 included:
// one entry per cyclic subgroup defined over Q.
std::vector<unsigned> cyclic_isogeny_degrees(const IsogenyClassGraph& g);

}  // namespace qabtors
