#include "horn/inference.hpp"

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace horn {

ClosureResult unit_closure(const Formula& f, const VarSet& seed) {
    const auto& clauses = f.clauses();
    std::vector<std::size_t> pending(clauses.size());
    std::unordered_map<VariableId, std::vector<std::size_t>, VariableIdHash> occurs;
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        pending[i] = clauses[i].body().size();
        for (VariableId v : clauses[i].body()) occurs[v].push_back(i);
    }

    ClosureResult result;
    std::unordered_set<VariableId, VariableIdHash> derived;
    std::vector<VariableId> queue;
    auto push = [&](VariableId v) {
        if (derived.insert(v).second) queue.push_back(v);
    };
    auto fire = [&](std::size_t i) {
        if (clauses[i].is_definite())
            push(clauses[i].head_var());
        else
            result.falsum_derived = true;
    };

    for (VariableId v : seed) push(v);
    for (std::size_t i = 0; i < clauses.size(); ++i)
        if (pending[i] == 0) fire(i);
    while (!queue.empty()) {
        VariableId v = queue.back();
        queue.pop_back();
        auto it = occurs.find(v);
        if (it == occurs.end()) continue;
        for (std::size_t i : it->second)
            if (--pending[i] == 0) fire(i);
    }

    result.derived = VarSet(std::vector<VariableId>(derived.begin(), derived.end()));
    return result;
}

bool entails_clause(const Formula& f, const HornClause& c) {
    ClosureResult r = unit_closure(f, c.body());
    if (r.falsum_derived) return true;
    return c.is_definite() && r.derived.contains(c.head_var());
}

bool entails_formula(const Formula& f, const Formula& g) {
    for (const HornClause& c : g.clauses())
        if (!entails_clause(f, c)) return false;
    return true;
}

bool equivalent(const Formula& f, const Formula& g) {
    return entails_formula(f, g) && entails_formula(g, f);
}

bool horn_sat(const Formula& f, const LiteralAssignment& s) {
    ClosureResult r = unit_closure(f, s.pos);
    if (r.falsum_derived) return false;
    return set_intersection(r.derived, s.neg).empty();
}

// ---------------------------------------------------------------------------
// ce_oracle
// ---------------------------------------------------------------------------

namespace {

// Bit-parallel propagation for alphabets of at most 64 variables: clauses are
// (body mask, head mask) pairs, a zero head mask standing for falsum.
using BitClause = std::pair<std::uint64_t, std::uint64_t>;

std::vector<BitClause> compile_bits(
    const Formula& f, const std::unordered_map<VariableId, int, VariableIdHash>& bit) {
    std::vector<BitClause> out;
    out.reserve(f.clause_count());
    for (const HornClause& c : f.clauses()) {
        std::uint64_t body = 0;
        for (VariableId v : c.body()) body |= std::uint64_t{1} << bit.at(v);
        std::uint64_t head =
            c.is_definite() ? std::uint64_t{1} << bit.at(c.head_var()) : 0;
        out.push_back({body, head});
    }
    return out;
}

bool bit_sat(const std::vector<BitClause>& clauses, std::uint64_t pos, std::uint64_t neg) {
    std::uint64_t derived = pos;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [body, head] : clauses) {
            if ((body & ~derived) != 0) continue;
            if (head == 0) return false;
            if ((derived & head) != head) {
                derived |= head;
                changed = true;
            }
        }
    }
    return (derived & neg) == 0;
}

}  // namespace

bool ce_oracle(const Formula& a, const Formula& b, std::size_t limit) {
    VarSet common = set_intersection(a.alphabet(), b.alphabet());
    if (common.size() > limit)
        throw LimitError("common alphabet has " + std::to_string(common.size()) +
                         " variables, above the limit of " + std::to_string(limit));

    VarSet space = set_union(set_union(a.vars(), b.vars()), common);
    const std::size_t k = common.size();

    if (space.size() <= 64 && k < 64) {
        std::unordered_map<VariableId, int, VariableIdHash> bit;
        for (VariableId v : space) bit.emplace(v, static_cast<int>(bit.size()));
        auto ca = compile_bits(a, bit);
        auto cb = compile_bits(b, bit);
        std::vector<std::uint64_t> common_bit;
        common_bit.reserve(k);
        for (VariableId v : common) common_bit.push_back(std::uint64_t{1} << bit.at(v));
        std::uint64_t common_mask = 0;
        for (std::uint64_t m : common_bit) common_mask |= m;

        for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
            std::uint64_t pos = 0;
            for (std::size_t i = 0; i < k; ++i)
                if (s & (std::uint64_t{1} << i)) pos |= common_bit[i];
            std::uint64_t neg = common_mask & ~pos;
            if (bit_sat(ca, pos, neg) != bit_sat(cb, pos, neg)) return false;
        }
        return true;
    }

    // Generic path for very large alphabets.
    std::vector<VariableId> vars(common.begin(), common.end());
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
        std::vector<VariableId> pos, neg;
        for (std::size_t i = 0; i < k; ++i)
            (s & (std::uint64_t{1} << i) ? pos : neg).push_back(vars[i]);
        LiteralAssignment sa{VarSet(std::move(pos)), VarSet(std::move(neg))};
        if (horn_sat(a, sa) != horn_sat(b, sa)) return false;
    }
    return true;
}

}  // namespace horn
