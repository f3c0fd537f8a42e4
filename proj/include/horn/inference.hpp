#pragma once

#include "horn/formula.hpp"

namespace horn {

// Result of forward chaining from a set of assumed-true variables.  `derived`
// is the syntactic fixpoint of firing definite clauses; `falsum_derived` is
// set when a falsum-headed clause fires (propagation continues past it, so
// `derived` is still the full fixpoint of the definite part).
struct ClosureResult {
    VarSet derived;
    bool falsum_derived = false;
};

// A set of signed literals: variables forced true and variables forced false.
// The two sets may overlap, which simply makes the assignment contradictory.
struct LiteralAssignment {
    VarSet pos;
    VarSet neg;

    VarSet over() const { return set_union(pos, neg); }
};

// Least fixpoint of unit propagation from `seed` (counter-based, linear in
// the formula size).
ClosureResult unit_closure(const Formula& f, const VarSet& seed);

// Horn entailment F |= c, decided by closing over body(c).  A falsum-headed
// clause is entailed iff the closure is contradictory; anything is entailed
// once falsum is derived.
bool entails_clause(const Formula& f, const HornClause& c);

// F |= every clause of G.
bool entails_formula(const Formula& f, const Formula& g);

// Classical (full-alphabet) equivalence: mutual entailment.
bool equivalent(const Formula& f, const Formula& g);

// Satisfiability of F together with the literals in `s`.
bool horn_sat(const Formula& f, const LiteralAssignment& s);

// Ground-truth common-equivalence oracle: A and B are commonly equivalent iff
// A∪S and B∪S are equisatisfiable for every total sign assignment S over the
// common alphabet (the intersection of the two alphabets).  Enumerates all
// 2^k assignments; refuses with LimitError when k exceeds `limit`.
bool ce_oracle(const Formula& a, const Formula& b, std::size_t limit = 20);

}  // namespace horn
