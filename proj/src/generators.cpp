#include "horn/generators.hpp"

#include "horn/errors.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

namespace horn {

namespace {

struct CanonGraph {
    std::vector<std::string> nodes;                           // sorted, unique
    std::vector<std::pair<std::string, std::string>> edges;  // normalized, sorted, unique

    std::size_t node_index(const std::string& label) const {
        return static_cast<std::size_t>(
            std::lower_bound(nodes.begin(), nodes.end(), label) - nodes.begin());
    }
};

CanonGraph canonicalize(const Graph& g) {
    if (g.nodes.empty())
        throw InputError("graph has no nodes");
    CanonGraph cg;
    cg.nodes = g.nodes;
    std::sort(cg.nodes.begin(), cg.nodes.end());
    cg.nodes.erase(std::unique(cg.nodes.begin(), cg.nodes.end()), cg.nodes.end());
    for (const auto& [a, b] : g.edges) {
        if (a == b)
            throw InputError("self-loop on node '" + a + "'");
        if (!std::binary_search(cg.nodes.begin(), cg.nodes.end(), a))
            throw InputError("edge endpoint '" + a + "' is not a declared node");
        if (!std::binary_search(cg.nodes.begin(), cg.nodes.end(), b))
            throw InputError("edge endpoint '" + b + "' is not a declared node");
        cg.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(cg.edges.begin(), cg.edges.end());
    cg.edges.erase(std::unique(cg.edges.begin(), cg.edges.end()), cg.edges.end());
    return cg;
}

// Generated variable names; node/edge indices are 1-based positions in the
// canonical order.
std::string r_name(std::size_t i) { return "r" + std::to_string(i + 1); }
std::string s_name(std::size_t i) { return "s" + std::to_string(i + 1); }
std::string y_name(std::size_t i) { return "y" + std::to_string(i + 1); }
std::string e_name(std::size_t l) { return "e" + std::to_string(l + 1); }

void check_label_collisions(const CanonGraph& cg) {
    std::unordered_set<std::string> reserved{"w"};
    for (std::size_t i = 0; i < cg.nodes.size(); ++i) {
        reserved.insert(r_name(i));
        reserved.insert(r_name(i) + "'");
        reserved.insert(s_name(i));
        reserved.insert(s_name(i) + "'");
        reserved.insert(y_name(i));
    }
    for (std::size_t l = 0; l < cg.edges.size(); ++l) {
        reserved.insert(e_name(l));
        reserved.insert(e_name(l) + "'");
    }
    for (const std::string& label : cg.nodes)
        if (reserved.count(label))
            throw InputError("node label '" + label + "' collides with a generated variable");
}

}  // namespace

Graph parse_graph(std::string_view text) {
    Graph g;
    std::size_t lineno = 0;
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind))
            continue;
        if (kind == "node") {
            std::string label, extra;
            if (!(ls >> label) || (ls >> extra))
                throw ParseError(lineno, "expected 'node <label>'");
            g.nodes.push_back(label);
        } else if (kind == "edge") {
            std::string a, b, extra;
            if (!(ls >> a >> b) || (ls >> extra))
                throw ParseError(lineno, "expected 'edge <a> <b>'");
            g.edges.emplace_back(a, b);
        } else {
            throw ParseError(lineno, "unknown directive '" + kind + "'");
        }
    }
    return g;
}

Formula vc_reduction(const Graph& g) {
    CanonGraph cg = canonicalize(g);
    check_label_collisions(cg);
    VariableId w("w");
    std::vector<HornClause> cs;
    for (std::size_t l = 0; l < cg.edges.size(); ++l) {
        VarSet body{VariableId(cg.edges[l].first), w, VariableId(cg.edges[l].second)};
        cs.emplace_back(body, VariableId(e_name(l)));
        cs.emplace_back(body, VariableId(e_name(l) + "'"));
    }
    for (std::size_t i = 0; i < cg.nodes.size(); ++i) {
        VariableId v(cg.nodes[i]);
        cs.emplace_back(VarSet{v, w, VariableId(r_name(i))}, VariableId(s_name(i)));
        cs.emplace_back(VarSet{v, w, VariableId(r_name(i) + "'")},
                        VariableId(s_name(i) + "'"));
    }
    return Formula(std::move(cs));
}

Formula cover_formula(const Graph& g, const std::vector<std::string>& cover) {
    CanonGraph cg = canonicalize(g);
    check_label_collisions(cg);
    std::set<std::string> in_cover(cover.begin(), cover.end());
    for (const std::string& label : in_cover)
        if (!std::binary_search(cg.nodes.begin(), cg.nodes.end(), label))
            throw InputError("cover node '" + label + "' is not a declared node");

    VariableId w("w");
    std::vector<HornClause> cs;
    for (std::size_t l = 0; l < cg.edges.size(); ++l) {
        const auto& [a, b] = cg.edges[l];
        // Covered endpoint, ties to the smaller index.
        std::string covered, other;
        if (in_cover.count(a) && (!in_cover.count(b) || cg.node_index(a) < cg.node_index(b))) {
            covered = a;
            other = b;
        } else if (in_cover.count(b)) {
            covered = b;
            other = a;
        } else {
            throw InputError("not a vertex cover: edge " + a + "-" + b + " is uncovered");
        }
        VarSet body{VariableId(y_name(cg.node_index(covered))), VariableId(other)};
        cs.emplace_back(body, VariableId(e_name(l)));
        cs.emplace_back(body, VariableId(e_name(l) + "'"));
    }
    for (std::size_t i = 0; i < cg.nodes.size(); ++i) {
        VariableId v(cg.nodes[i]);
        if (in_cover.count(cg.nodes[i])) {
            VariableId y(y_name(i));
            cs.emplace_back(VarSet{v, w}, y);
            cs.emplace_back(VarSet{y, VariableId(r_name(i))}, VariableId(s_name(i)));
            cs.emplace_back(VarSet{y, VariableId(r_name(i) + "'")},
                            VariableId(s_name(i) + "'"));
        } else {
            cs.emplace_back(VarSet{v, w, VariableId(r_name(i))}, VariableId(s_name(i)));
            cs.emplace_back(VarSet{v, w, VariableId(r_name(i) + "'")},
                            VariableId(s_name(i) + "'"));
        }
    }
    return Formula(std::move(cs));
}

NamedFamily named_family(const std::string& name, int n) {
    if (name == "exponential") {
        if (n < 1 || n > 30)
            throw InputError("family 'exponential' needs 1 <= n <= 30");
        std::string text;
        std::string zs;
        VarSet drop;
        for (int i = 1; i <= n; ++i) {
            std::string idx = std::to_string(i);
            text += "x" + idx + " -> z" + idx + "\n";
            text += "y" + idx + " -> z" + idx + "\n";
            zs += "z" + idx + " ";
            drop.insert(VariableId("z" + idx));
        }
        text += zs + "-> w\n";
        return {parse_formula(text), std::move(drop)};
    }
    if (name == "branches") {
        Formula f = parse_formula(
            "k->a\nk->b\nl->d\nl->e\nm->g\nm->h\n"
            "a->c\nb->c\nd->f\ne->f\ng->i\nh->i\nc f i->j\n");
        VarSet keep{VariableId("k"), VariableId("l"), VariableId("m"), VariableId("j")};
        return {f, set_difference(f.vars(), keep)};
    }
    if (name == "chain") {
        Formula f = parse_formula(
            "a->c1\na->c2\nc1->d1\nc1->d2\nc2->d3\nc2->d4\n"
            "d1->e1\nd2->e1\nd3->e2\nd4->e2\ne1 e2->b\n");
        return {f, set_difference(f.vars(), VarSet{VariableId("a"), VariableId("b")})};
    }
    if (name == "enlarge") {
        Formula f = parse_formula("abc -> x\nx -> lmn\n");
        return {f, VarSet{VariableId("x")}};
    }
    if (name == "disappear")
        return {parse_formula("a -> b\nc -> d\n"), VarSet{VariableId("d")}};
    if (name == "loop1133") {
        Formula f = parse_formula(
            "a -> b\nb -> c1 c2 c3\nc1 c2 c3 -> d1 d2 d3\nd1 d2 d3 -> a\n");
        return {f, VarSet{}};
    }
    if (name == "loop1313") {
        Formula f = parse_formula(
            "a -> b1 b2 b3\nb1 b2 b3 -> c\nc -> d1 d2 d3\nd1 d2 d3 -> a\n");
        return {f, VarSet{}};
    }
    if (name == "greedy") {
        Formula f = parse_formula(
            "x1 x2 x3 x4 x5 x6 -> z1\nx1 x2 x3 x4 x5 x6 -> z2\n"
            "x1 x2 x3 -> z3\nx4 x5 x6 -> z4\n");
        return {f, VarSet{}};
    }
    throw InputError("unknown family '" + name + "'");
}

Formula random_horn(const RandomProfile& profile, std::uint32_t seed) {
    if (profile.vars < 1 || profile.clauses < 0 || profile.max_body < 0)
        throw InputError("infeasible profile");
    if (profile.single_head && profile.clauses > profile.vars)
        throw InputError("infeasible profile: single-head needs clauses <= vars");

    std::vector<VariableId> vars;
    for (int i = 0; i < profile.vars; ++i)
        vars.push_back(VariableId("x" + std::to_string(i)));

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> var_pick(0, profile.vars - 1);
    std::uniform_int_distribution<int> body_size(0, std::min(profile.max_body, profile.vars));
    std::uniform_int_distribution<int> falsum_roll(0, 3);

    std::set<HornClause> clauses;
    std::set<VariableId> used_heads;
    int attempts = 0;
    while (static_cast<int>(clauses.size()) < profile.clauses) {
        if (++attempts > 20000)
            throw InputError("infeasible profile: cannot reach the requested clause count");
        VarSet body;
        int bs = body_size(rng);
        for (int i = 0; i < bs; ++i) body.insert(vars[var_pick(rng)]);

        bool negative = !profile.definite && falsum_roll(rng) == 0;
        if (negative) {
            if (body.empty()) continue;  // "-> false" would make everything trivial
            clauses.emplace(std::move(body), Falsum{});
            continue;
        }
        VariableId head = vars[var_pick(rng)];
        if (body.contains(head)) continue;
        if (profile.single_head) {
            if (used_heads.count(head)) continue;
            used_heads.insert(head);
        }
        clauses.emplace(std::move(body), head);
    }
    return Formula(std::vector<HornClause>(clauses.begin(), clauses.end()));
}

}  // namespace horn
