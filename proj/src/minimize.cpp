#include "horn/minimize.hpp"

#include "horn/errors.hpp"
#include "horn/horn_general.hpp"
#include "horn/inference.hpp"

#include <cstdint>
#include <set>
#include <unordered_map>

namespace horn {

LeqResult leq_order(const Formula& f, const VarSet& a, const VarSet& b) {
    ClosureResult ca = unit_closure(f, a);
    ClosureResult cb = unit_closure(f, b);
    LeqResult r;
    r.leq = ca.falsum_derived || b.subset_of(ca.derived);
    r.geq = cb.falsum_derived || a.subset_of(cb.derived);
    return r;
}

namespace {

// Exhaustive test of the inequivalence condition: whenever F forces two
// variable sets to be equivalent, each must already be equivalent to the
// intersection.  Closures of all subsets are precomputed as bitmasks.
bool exhaustive_inequivalent(const Formula& f) {
    const VarSet& vars = f.vars();
    std::size_t n = vars.size();
    if (n > 12)
        throw LimitError("exhaustive inequivalence check limited to 12 variables");

    std::unordered_map<std::uint32_t, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i)
        pos.emplace(vars.items()[i].id(), i);

    struct BitClause {
        std::uint32_t body = 0;
        std::uint32_t head = 0;  // 0 encodes falsum
    };
    std::vector<BitClause> clauses;
    clauses.reserve(f.clauses().size());
    for (const HornClause& c : f.clauses()) {
        BitClause bc;
        for (VariableId v : c.body())
            bc.body |= 1u << pos.at(v.id());
        if (c.is_definite())
            bc.head = 1u << pos.at(c.head_var().id());
        clauses.push_back(bc);
    }

    std::uint32_t total = 1u << n;
    std::vector<std::uint32_t> closure(total);
    std::vector<char> falsum(total, 0);
    for (std::uint32_t m = 0; m < total; ++m) {
        std::uint32_t cur = m;
        bool fal = false;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const BitClause& bc : clauses) {
                if ((cur & bc.body) != bc.body)
                    continue;
                if (bc.head == 0) {
                    fal = true;
                } else if ((cur & bc.head) == 0) {
                    cur |= bc.head;
                    changed = true;
                }
            }
        }
        closure[m] = cur;
        falsum[m] = fal ? 1 : 0;
    }

    auto implies = [&](std::uint32_t from, std::uint32_t to) {
        return falsum[from] || (closure[from] & to) == to;
    };
    for (std::uint32_t a = 0; a < total; ++a) {
        for (std::uint32_t b = 0; b < total; ++b) {
            if (!implies(a, b) || !implies(b, a))
                continue;
            // A and B equivalent under F; the condition asks that A (and by
            // symmetry of the loop, B) is equivalent to A & B.
            if (!implies(a & b, a))
                return false;
        }
    }
    return true;
}

}  // namespace

bool check_inequivalent(const Formula& f, InequivalenceMode mode) {
    switch (mode) {
        case InequivalenceMode::AcyclicSufficient:
            return classify(f).acyclic;
        case InequivalenceMode::Exhaustive:
            return exhaustive_inequivalent(f);
    }
    throw InputError("unknown inequivalence mode");
}

namespace {

struct BodyMinimizer {
    const Formula& f;  // definite, single-head
    std::unordered_map<std::uint32_t, const HornClause*> def_of;

    explicit BodyMinimizer(const Formula& formula) : f(formula) {
        for (const HornClause& c : f.clauses())
            def_of.emplace(c.head_var().id(), &c);
    }

    bool valid(const VarSet& body, VariableId head) const {
        if (body.contains(head))
            return false;
        return entails_clause(f, HornClause(body, head));
    }

    // All bodies reachable from seed by single moves: dropping one variable
    // (kept only when the clause stays entailed by the whole formula) or
    // unfolding one variable through its unique defining clause.
    std::vector<VarSet> pool(const VarSet& seed, VariableId head) const {
        std::set<VarSet> seen;
        std::vector<VarSet> queue;
        seen.insert(seed);
        queue.push_back(seed);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            VarSet a = queue[qi];
            for (VariableId y : a) {
                VarSet rest = set_difference(a, VarSet{y});
                if (!seen.count(rest) && valid(rest, head)) {
                    seen.insert(rest);
                    queue.push_back(rest);
                }
                auto it = def_of.find(y.id());
                if (it != def_of.end()) {
                    VarSet unfolded = set_union(rest, it->second->body());
                    if (!unfolded.contains(head) && !seen.count(unfolded) &&
                        valid(unfolded, head)) {
                        seen.insert(unfolded);
                        queue.push_back(unfolded);
                    }
                }
            }
            if (seen.size() > (1u << 20))
                throw LimitError("minimization candidate pool too large");
        }
        return queue;
    }

    VarSet minimize_body(const VarSet& start, VariableId head) const {
        VarSet current = start;
        for (;;) {
            std::vector<VarSet> candidates = pool(current, head);
            const VarSet* best = nullptr;
            for (const VarSet& b : candidates) {
                if (b == current)
                    continue;
                bool proper_subset =
                    b.size() < current.size() && b.subset_of(current);
                bool strictly_below = false;
                if (!proper_subset) {
                    LeqResult lr = leq_order(f, current, b);
                    strictly_below = lr.leq && !lr.geq;
                }
                if (!proper_subset && !strictly_below)
                    continue;
                if (best == nullptr || b.size() < best->size() ||
                    (b.size() == best->size() && b < *best))
                    best = &b;
            }
            if (best == nullptr)
                return current;
            current = *best;
        }
    }
};

Formula minimize_definite(const Formula& f) {
    BodyMinimizer m(f);
    std::vector<HornClause> out;
    out.reserve(f.clauses().size());
    for (const HornClause& c : f.clauses())
        out.emplace_back(m.minimize_body(c.body(), c.head_var()), c.head_var());
    return Formula(std::move(out));
}

}  // namespace

Formula min_formula(const Formula& f) {
    if (!classify(f).single_head)
        throw InputError("min_formula requires a single-head formula");

    ZTransformResult zt = z_transform(f);
    if (!classify(zt.definite).acyclic)
        throw InputError(
            "min_formula requires an acyclic formula; use minimality_report "
            "for cyclic formulas");

    Formula reduced = minimize_definite(zt.definite);
    VarSet z(zt.z_vars);
    Formula result(substitute_false(reduced, z).clauses(), f.alphabet());

    if (size(result) > size(f) || !equivalent(result, f))
        throw Error("internal error: minimization produced a non-equivalent or larger formula");
    return result;
}

MinimalityReport minimality_report(const Formula& f) {
    Classification cls = classify(f);
    if (!cls.definite || !cls.single_head)
        throw InputError("minimality_report requires a single-head definite formula");

    MinimalityReport report;
    for (const HornClause& c : f.clauses()) {
        VarSet consequences = unit_closure(f, c.body()).derived;
        for (VariableId y : c.body()) {
            VarSet rest = set_difference(consequences, VarSet{y});
            if (entails_clause(f, HornClause(rest, y)))
                report.witnesses.push_back({c, y});
        }
    }
    report.minimal_certified = report.witnesses.empty();
    return report;
}

}  // namespace horn
