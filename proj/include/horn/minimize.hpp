#pragma once

#include "horn/formula.hpp"

#include <vector>

namespace horn {

// Position of B relative to A in the entailment preorder of F:
// leq means B is below A (F entails A -> B), geq the converse.
struct LeqResult {
    bool leq = false;
    bool geq = false;
};
LeqResult leq_order(const Formula& f, const VarSet& a, const VarSet& b);

enum class InequivalenceMode {
    AcyclicSufficient,  // sound, incomplete: acyclic formulas qualify
    Exhaustive,         // literal check over all variable-set pairs (<= 12 vars)
};

// Whether no two variable sets are forced equivalent by F except through
// their intersection — the precondition under which clause-wise body
// minimization is exact.
bool check_inequivalent(const Formula& f, InequivalenceMode mode);

// Fixed-alphabet minimization of a single-head formula that passes the
// acyclicity test: every clause body is shrunk and replaced until no body in
// reach is strictly below it or strictly contained in it.  The result is
// single-head, equivalent to the input, never larger, and carries the input's
// alphabet.  Cyclic input is refused (see minimality_report instead).
Formula min_formula(const Formula& f);

// One Lemma-style non-minimality hint: the clause body P can derive y from
// its other forward consequences.
struct MinimalityWitness {
    HornClause clause;
    VariableId variable;
};

struct MinimalityReport {
    bool minimal_certified = false;
    std::vector<MinimalityWitness> witnesses;
};

// Necessary-condition scan for single-head definite formulas: a clause P -> x
// with a witness MAY be replaceable; no witnesses certifies minimality among
// single-head equivalents on the same alphabet.
MinimalityReport minimality_report(const Formula& f);

}  // namespace horn
