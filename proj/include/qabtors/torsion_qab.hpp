#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qabtors/curve.hpp"
#include "qabtors/ratpoints.hpp"

namespace qabtors {

// Thrown when a computed quantity lands outside what is possible for
// rational elliptic curves (isogeny counts, torsion bounds, the final
// group table).  Reaching it means a bug, not a bad input.
struct InvariantBreach : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One decision of the classification, in the order taken.  `condition`
// states the test, `evidence` the facts that settled it; together the
// steps let a reader replay the run without the intermediate objects.
struct TraceStep {
    std::string condition;
    std::string evidence;
};

struct QabTorsionResult {
    TorsionGroup group;
    std::vector<long> isogeny_degrees;  // sorted, 1 included
    std::vector<TraceStep> trace;
};

// Every group that occurs as the torsion subgroup of a rational elliptic
// curve over the maximal abelian extension of Q; 17 cyclic and 18 not.
const std::vector<TorsionGroup>& allowed_groups();
bool classification_gate(const TorsionGroup& t);

// Structural screens.  kenku_check validates a cyclic-subgroup degree
// multiset (whitelist, per-prime counts, multiplicativity, total at most
// 8); bounds_check validates the finished group against the per-prime
// containments, the global order bound, and the compatibility table
// between the 2-power degrees and the 2-primary part of the group.
void kenku_check(const std::vector<long>& degrees);
void bounds_check(const TorsionGroup& t, const std::vector<long>& degrees);

// Torsion of E over the maximal abelian extension of Q.  degree_cap
// bounds the number fields the abelianity tester will open up (0 picks
// per-order defaults); undecidable-within-cap searches throw
// UndecidedError from the galois layer.
QabTorsionResult torsion_over_Qab(const RationalCurve& e, long degree_cap = 0);

// The group is a twist invariant away from j = 0 and j = 1728: check by
// recomputation on the twist by squarefree d.  Returns true when the two
// groups agree.
bool twist_invariance_check(const RationalCurve& e, long d, long degree_cap = 0);

}  // namespace qabtors
