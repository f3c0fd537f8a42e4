#pragma once

#include "horn/formula.hpp"

#include <optional>

namespace horn {

enum class Direction { AtoB, BtoA };

// A consequence of one side, over the common alphabet, that the other side
// does not entail.
struct CeWitness {
    HornClause clause;
    Direction direction;
};

struct CeResult {
    bool equivalent = true;
    std::optional<CeWitness> witness;
};

// Decides whether A and B have the same consequences over their common
// alphabet, streaming the consequences of each side through an entailment
// check against the other (A first, canonical clause order, first failure
// short-circuits).  Negative clauses are handled by the completion-variable
// reduction; declared alphabets extend the common-alphabet computation.
CeResult common_equivalent(const Formula& a, const Formula& b);

}  // namespace horn
