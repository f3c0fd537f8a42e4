#pragma once

#include "horn/formula.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace horn {

// An undirected graph over labelled nodes; input to the vertex-cover
// reduction.  Labels must be valid variable names.
struct Graph {
    std::vector<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
};

// Parse the line-based graph format: "node <label>" and "edge <a> <b>"
// lines, '#' comments.
Graph parse_graph(std::string_view text);

// The hardness-reduction formula A for a graph: two clauses per edge
// ({u, w, v} -> e_l and -> e_l') and two per node ({v_i, w, r_i} -> s_i and
// the primed twin), all of size 4; size(A) = 8|E| + 8|V|.  Acyclic and
// single-head.
Formula vc_reduction(const Graph& g);

// The smaller common-equivalent formula B obtained from a vertex cover C:
// covered edges route through y_i ({y_i, v_j} -> e_l), cover nodes gain the
// definition block {v_i, w} -> y_i plus y_i-based node clauses; other nodes
// keep their vc_reduction clauses.  size(B) = 6|E| + 8|V| + |C|.
Formula cover_formula(const Graph& g, const std::vector<std::string>& cover);

// A named example formula together with the variable set the source example
// forgets (empty when the example is about minimization instead).
struct NamedFamily {
    Formula formula;
    VarSet drop;
};

// Families: "exponential" (parameterized by n >= 1), "branches", "chain",
// "enlarge", "disappear", "loop1133", "loop1313", "greedy".
NamedFamily named_family(const std::string& name, int n = 0);

struct RandomProfile {
    int vars = 6;
    int clauses = 5;
    int max_body = 3;
    bool single_head = false;
    bool definite = true;
};

// Deterministic random formula over variables x0..x<vars-1> with exactly
// `clauses` distinct clauses, honoring the profile flags.
Formula random_horn(const RandomProfile& profile, std::uint32_t seed);

}  // namespace horn
