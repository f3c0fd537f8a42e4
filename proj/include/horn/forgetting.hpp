#pragma once

#include "horn/formula.hpp"

#include <functional>

namespace horn {

// Counters reported by one enumeration run.
struct ForgetStats {
    std::size_t emitted = 0;                // clauses delivered to the sink
    std::size_t branches = 0;               // alternatives tried (incl. root clauses)
    std::size_t pruned = 0;                 // branches cut by the lookahead test
    std::size_t duplicates_suppressed = 0;  // memo hits (when a memo is enabled)
    std::size_t max_frames = 0;             // peak depth of the replacement chain
};

// Receives each produced clause; return false to stop the enumeration early
// (stats then describe the partial run).
using ClauseSink = std::function<bool(const HornClause&)>;

struct EnumerateOptions {
    // Abandon a branch as soon as a target body is not derivable from the
    // kept variables (sound: it never removes output clauses).
    bool prune = true;
    // When nonzero, remember up to this many emitted clauses and drop exact
    // repeats; bounded, so the memory guarantee still holds.
    std::size_t memo_capacity = 0;
    // Re-derive the internal bookkeeping invariants at every step (slow;
    // meant for tests).
    bool check_invariants = false;
};

// Streams every clause of the keep-alphabet consequence set of a definite
// formula: for each clause whose head is kept, the body is rewritten by
// depth-first backtracking over the defining clauses of the non-kept body
// variables.  Working memory stays polynomial in size(F) — clauses are
// emitted immediately, never accumulated, and the chain of live replacement
// frames is bounded by the number of variables plus one.  Duplicate
// emissions across branches are normal.
ForgetStats enumerate_implicates(const Formula& f, const VarSet& keep, const ClauseSink& sink,
                                 const EnumerateOptions& options = {});

// Collected, deduplicated variable forgetting for definite formulas: the
// result mentions only vars(F) \ X and has the same consequences as F over
// those variables.
Formula forget(const Formula& f, const VarSet& x);

// As forget, with the result's alphabet pinned to vars(F) \ X so that later
// common-equivalence comparisons treat unmentioned survivors as shared.
Formula forget_ce(const Formula& f, const VarSet& x);

// Deterministic fast path when every variable heads at most one clause: no
// backtracking is possible, so forgetting runs in polynomial time.  Output
// equals forget(F, X).  Raises InputError on formulas that are not
// single-head (use forget there instead).
Formula forget_single_head(const Formula& f, const VarSet& x);

// forget plus the run statistics (collection mode, deduplicated output).
std::pair<Formula, ForgetStats> forget_with_stats(const Formula& f, const VarSet& x,
                                                  const EnumerateOptions& options = {});

}  // namespace horn
