#pragma once

#include "horn/formula.hpp"

#include <vector>

namespace horn {

// Introduce a definition for the variable set P: every body containing P has
// P replaced by a fresh variable "_n<k>", and the defining clause P -> _n<k>
// is added.  The result is common-equivalent to f (the fresh variable is not
// part of f's alphabet).  Requires a nonempty P and a definite formula.
Formula newvar(const VarSet& p, const Formula& f);

// All nonempty intersections of (unordered, possibly equal) pairs of clause
// bodies of f, deduplicated and sorted.  These are the candidate definitions
// the greedy loop considers.
std::vector<VarSet> body_intersections(const Formula& f);

// Greedy size reduction by repeated definition introduction: in each round,
// pick the pairwise body intersection whose introduction shrinks the formula
// most, then repeatedly refine it against single clause bodies while that
// improves the result, and restart on the new formula until no intersection
// helps.  Ties are broken toward the lexicographically least candidate.
// Negative clauses are carried through the completion transform, so any Horn
// formula is accepted; the result is never larger than the input and is
// common-equivalent to it.
Formula greedy_minimize(const Formula& f);

}  // namespace horn
