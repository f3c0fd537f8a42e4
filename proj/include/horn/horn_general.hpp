#pragma once

#include "horn/formula.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace horn {

// Result of completing the negative clauses of a Horn formula with fresh
// heads: the formula becomes definite and each generated variable remembers
// which negative clause it stands for.
struct ZTransformResult {
    Formula definite;
    std::vector<VariableId> z_vars;  // in generation order
    std::vector<std::pair<VariableId, HornClause>> origin;
};

// Gives every negative clause `B -> false` a fresh head "_z<k>" (one per
// clause, so single-head formulas stay single-head).  Fresh names skip
// anything in vars(F) or `avoid`.
ZTransformResult z_transform(const Formula& f, const VarSet& avoid = {});

// Substitutes false for each variable in `z`: clauses with such a variable in
// the body become tautologies and are dropped, clauses headed by one become
// negative clauses, and the variables leave the declared alphabet.  If an
// empty negative clause arises the whole result collapses to the
// distinguished inconsistent formula {-> false}.
Formula substitute_false(const Formula& f, const VarSet& z);

// Forgetting for general Horn formulas: complete with fresh heads, forget,
// then substitute the heads back to false.  The result is Horn, mentions only
// alphabet(F) \ X, and has the same consequences as F over those variables.
Formula forget_horn(const Formula& f, const VarSet& x);

// One direction of the common-equivalence check: every consequence of A over
// the common alphabet (plus A's completion variables) must be entailed by B
// extended with the negations of those completion variables.  Streams the
// consequences, so working memory stays polynomial.  On failure the
// counterexample clause is reported over the common alphabet (completion
// heads rendered as falsum).
struct DirectionalCheck {
    bool ok = true;
    std::optional<HornClause> counterexample;
};
DirectionalCheck check_direction_horn(const Formula& a, const Formula& b);

// Common equivalence of two general Horn formulas (both directions).
bool common_equivalence_horn(const Formula& a, const Formula& b);

}  // namespace horn
