#include "horn/newvar.hpp"

#include "horn/errors.hpp"
#include "horn/horn_general.hpp"

#include <set>
#include <string>
#include <utility>

namespace horn {

namespace {

VariableId fresh_definition_var(const VarSet& avoid) {
    for (unsigned k = 0;; ++k) {
        VariableId v(std::string("_n") + std::to_string(k));
        if (!avoid.contains(v))
            return v;
    }
}

}  // namespace

Formula newvar(const VarSet& p, const Formula& f) {
    if (p.empty())
        throw InputError("newvar requires a nonempty variable set");
    if (!classify(f).definite)
        throw InputError("newvar requires a definite formula");

    VariableId n = fresh_definition_var(set_union(f.vars(), p));
    std::vector<HornClause> out;
    out.reserve(f.clause_count() + 1);
    for (const HornClause& c : f.clauses()) {
        if (p.subset_of(c.body())) {
            VarSet body = set_difference(c.body(), p);
            body.insert(n);
            out.emplace_back(std::move(body), c.head_var());
        } else {
            out.push_back(c);
        }
    }
    out.emplace_back(p, n);

    std::optional<VarSet> declared;
    if (f.declared_alphabet())
        declared = set_union(*f.declared_alphabet(), VarSet{n});
    return Formula(std::move(out), std::move(declared));
}

std::vector<VarSet> body_intersections(const Formula& f) {
    std::set<VarSet> acc;
    const std::vector<HornClause>& cs = f.clauses();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i; j < cs.size(); ++j) {
            VarSet x = set_intersection(cs[i].body(), cs[j].body());
            if (!x.empty())
                acc.insert(std::move(x));
        }
    }
    return std::vector<VarSet>(acc.begin(), acc.end());
}

namespace {

// The published greedy loop, followed literally.  Candidates are scanned in
// lexicographic order with a strict size comparison, so among equally good
// definitions the lexicographically least one wins.
Formula greedy_definite(Formula f) {
    for (;;) {
        // Best pairwise body intersection, if any improves on f.
        Formula best = f;
        VarSet n;
        bool improved = false;
        for (const VarSet& cand : body_intersections(f)) {
            Formula g = newvar(cand, f);
            if (size(g) < size(best)) {
                n = cand;
                best = std::move(g);
                improved = true;
            }
        }
        if (!improved)
            return f;

        // Refine n against single clause bodies while that beats the result
        // found so far.  n only ever shrinks here, so this terminates.
        for (;;) {
            Formula refined = f;
            VarSet m;
            bool refined_improved = false;
            std::set<VarSet> cands;
            for (const HornClause& c : f.clauses()) {
                VarSet x = set_intersection(n, c.body());
                if (!x.empty())
                    cands.insert(std::move(x));
            }
            for (const VarSet& cand : cands) {
                Formula g = newvar(cand, f);
                if (size(g) < size(refined)) {
                    m = cand;
                    refined = std::move(g);
                    refined_improved = true;
                }
            }
            if (!refined_improved) {
                // Unreachable: n is contained in the body it was derived
                // from, so n itself is always an improving candidate here.
                f = std::move(best);
                break;
            }
            // Keep refining while the winning candidate still shrinks n;
            // once it stops shrinking (or ties the pairwise result), commit.
            if (refined != best && m != n) {
                n = std::move(m);
                continue;
            }
            f = std::move(refined);
            break;
        }
    }
}

}  // namespace

Formula greedy_minimize(const Formula& f) {
    ZTransformResult zt = z_transform(f);
    Formula reduced = greedy_definite(zt.definite);
    Formula result = substitute_false(reduced, VarSet(zt.z_vars));
    if (f.declared_alphabet())
        result = Formula(result.clauses(), set_union(f.alphabet(), result.vars()));
    if (size(result) > size(f))
        throw Error("internal error: greedy minimization grew the formula");
    return result;
}

}  // namespace horn
