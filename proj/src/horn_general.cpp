#include "horn/horn_general.hpp"

#include "horn/forgetting.hpp"
#include "horn/inference.hpp"

#include <cctype>
#include <string>

namespace horn {

namespace {

bool is_z_name(const std::string& name) {
    if (name.size() < 3 || name[0] != '_' || name[1] != 'z') return false;
    for (std::size_t i = 2; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    return true;
}

}  // namespace

ZTransformResult z_transform(const Formula& f, const VarSet& avoid) {
    ZTransformResult result;
    std::vector<HornClause> out;
    std::size_t next = 0;
    auto fresh = [&]() {
        for (;;) {
            VariableId z(("_z" + std::to_string(next++)));
            if (!f.vars().contains(z) && !avoid.contains(z)) return z;
        }
    };
    for (const HornClause& c : f.clauses()) {
        if (c.is_definite()) {
            out.push_back(c);
            continue;
        }
        VariableId z = fresh();
        result.z_vars.push_back(z);
        result.origin.emplace_back(z, c);
        out.emplace_back(c.body(), z);
    }
    result.definite = Formula(std::move(out));
    return result;
}

Formula substitute_false(const Formula& f, const VarSet& z) {
    std::optional<VarSet> alphabet = f.declared_alphabet();
    if (alphabet) alphabet = set_difference(*alphabet, z);

    std::vector<HornClause> out;
    for (const HornClause& c : f.clauses()) {
        if (!set_intersection(c.body(), z).empty()) continue;  // body falsified
        if (c.is_definite() && z.contains(c.head_var())) {
            if (c.body().empty())  // the empty clause: everything collapses
                return Formula({HornClause(VarSet{}, Falsum{})}, std::move(alphabet));
            out.emplace_back(c.body(), Falsum{});
            continue;
        }
        out.push_back(c);
    }
    return Formula(std::move(out), std::move(alphabet));
}

Formula forget_horn(const Formula& f, const VarSet& x) {
    for (VariableId v : x)
        if (is_z_name(v.name()))
            throw InputError("cannot forget reserved completion variable '" + v.name() + "'");
    ZTransformResult zt = z_transform(f);
    Formula kept = forget_ce(zt.definite, x);
    Formula back = substitute_false(kept, VarSet(zt.z_vars));
    return Formula(std::vector<HornClause>(back.clauses().begin(), back.clauses().end()),
                   set_difference(f.alphabet(), x));
}

DirectionalCheck check_direction_horn(const Formula& a, const Formula& b) {
    VarSet common = set_intersection(a.alphabet(), b.alphabet());
    ZTransformResult za = z_transform(a, b.alphabet());
    VarSet z_set(za.z_vars);

    // B plus the forced negation of every completion head of A.
    std::vector<HornClause> bplus(b.clauses());
    for (VariableId z : za.z_vars) bplus.emplace_back(VarSet{z}, Falsum{});
    Formula b_ext(std::move(bplus));

    DirectionalCheck result;
    VarSet keep = set_union(z_set, common);
    enumerate_implicates(za.definite, keep, [&](const HornClause& c) {
        if (entails_clause(b_ext, c)) return true;
        result.ok = false;
        // Report the counterexample over the common alphabet: a completion
        // head stands for the original clause's falsum.
        result.counterexample =
            z_set.contains(c.head_var()) ? HornClause(c.body(), Falsum{}) : c;
        return false;
    });
    return result;
}

bool common_equivalence_horn(const Formula& a, const Formula& b) {
    return check_direction_horn(a, b).ok && check_direction_horn(b, a).ok;
}

}  // namespace horn
