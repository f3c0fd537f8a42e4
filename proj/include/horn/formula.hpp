#pragma once

// Data model for propositional Horn formulae: interned variables, clauses
// with an explicit falsum head for negative clauses, formulae as canonical
// clause sets with an optional declared alphabet, plus parsing, rendering,
// the literal-occurrence size metric and structural classification.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "horn/errors.hpp"

namespace horn {

// An interned variable name.  Equality compares identities; ordering is
// lexicographic on the name so that every canonical order is readable.
//
// Valid names are non-empty strings of letters, digits, underscore and
// apostrophe.  Two extra rules keep the rule-text syntax round-trippable:
//   - a leading underscore is reserved for generated variables ("_z<k>" for
//     completed negative-clause heads, "_n<k>" for introduced definitions);
//   - a name of two or more characters must contain a digit, apostrophe or
//     underscore after its first character, because a bare run of letters
//     like "ab" always denotes the concatenation of the variables a and b
//     in rule text (see parse_formula).
class VariableId {
public:
    explicit VariableId(std::string_view name);

    const std::string& name() const;
    std::uint32_t id() const { return id_; }

    friend bool operator==(VariableId a, VariableId b) { return a.id_ == b.id_; }
    friend bool operator!=(VariableId a, VariableId b) { return a.id_ != b.id_; }
    friend bool operator<(VariableId a, VariableId b);
    friend bool operator<=(VariableId a, VariableId b) { return a == b || a < b; }

private:
    std::uint32_t id_;
};

struct VariableIdHash {
    std::size_t operator()(VariableId v) const { return std::hash<std::uint32_t>()(v.id()); }
};

// A set of variables kept as a sorted, duplicate-free vector.
class VarSet {
public:
    VarSet() = default;
    VarSet(std::initializer_list<VariableId> vars);
    explicit VarSet(std::vector<VariableId> vars);

    bool contains(VariableId v) const;
    bool subset_of(const VarSet& other) const;
    void insert(VariableId v);
    void erase(VariableId v);

    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    const std::vector<VariableId>& items() const { return v_; }

    friend bool operator==(const VarSet& a, const VarSet& b) { return a.v_ == b.v_; }
    friend bool operator!=(const VarSet& a, const VarSet& b) { return !(a == b); }
    // Lexicographic on the sorted name sequence; used for canonical orders
    // and deterministic tie-breaking.
    friend bool operator<(const VarSet& a, const VarSet& b);

private:
    std::vector<VariableId> v_;
};

VarSet set_union(const VarSet& a, const VarSet& b);
VarSet set_difference(const VarSet& a, const VarSet& b);
VarSet set_intersection(const VarSet& a, const VarSet& b);

// The distinguished false head of a negative clause.
struct Falsum {
    friend bool operator==(Falsum, Falsum) { return true; }
    friend bool operator!=(Falsum, Falsum) { return false; }
};

// body -> head with head either a variable (definite clause) or falsum
// (negative clause: the clause !b1 v ... v !bk).  Tautologies are rejected
// at construction: a definite head never occurs in its own body.
class HornClause {
public:
    using Head = std::variant<VariableId, Falsum>;

    HornClause(VarSet body, Head head);
    HornClause(VarSet body, VariableId head) : HornClause(std::move(body), Head(head)) {}

    const VarSet& body() const { return body_; }
    const Head& head() const { return head_; }
    bool is_definite() const { return std::holds_alternative<VariableId>(head_); }
    VariableId head_var() const;  // requires is_definite()

    // All variables of the clause (body plus definite head).
    VarSet vars() const;
    bool mentions(VariableId v) const;

    friend bool operator==(const HornClause& a, const HornClause& b) {
        return a.body_ == b.body_ && a.head_ == b.head_;
    }
    friend bool operator!=(const HornClause& a, const HornClause& b) { return !(a == b); }
    // Canonical order: body lexicographically, then head (falsum last).
    friend bool operator<(const HornClause& a, const HornClause& b);

private:
    VarSet body_;
    Head head_;
};

// |body| + 1 for a definite clause, |body| for a negative one: the number of
// literal occurrences.
std::size_t size(const HornClause& c);

// A finite set of Horn clauses kept in canonical order, with an optional
// declared alphabet.  The declared alphabet records variables the formula
// speaks about beyond those occurring in clauses; it is how the result of
// forgetting keeps "mentioning" a variable without constraining it.
class Formula {
public:
    Formula() = default;
    explicit Formula(std::vector<HornClause> clauses,
                     std::optional<VarSet> declared_alphabet = std::nullopt);

    const std::vector<HornClause>& clauses() const { return clauses_; }
    std::size_t clause_count() const { return clauses_.size(); }
    bool contains(const HornClause& c) const;

    // Union of clause variables.
    const VarSet& vars() const { return vars_; }
    // declared alphabet when present, vars() otherwise.
    const VarSet& alphabet() const;
    const std::optional<VarSet>& declared_alphabet() const { return declared_alphabet_; }

    friend bool operator==(const Formula& a, const Formula& b) {
        return a.clauses_ == b.clauses_ && a.declared_alphabet_ == b.declared_alphabet_;
    }
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
    std::vector<HornClause> clauses_;
    std::optional<VarSet> declared_alphabet_;
    VarSet vars_;
};

std::size_t size(const Formula& f);

struct Classification {
    bool horn = true;  // always true for this data model
    bool definite = false;
    bool single_head = false;
    bool acyclic = false;
};

Classification classify(const Formula& f);

// Body-variable -> head-variable edges of the definite clauses.
struct DependencyGraph {
    VarSet nodes;
    std::vector<std::pair<VariableId, VariableId>> edges;  // sorted, unique
};

DependencyGraph dependency_graph(const Formula& f);
bool is_acyclic(const DependencyGraph& g);

// The definite clauses of f.
Formula definite_part(const Formula& f);

// Parse rule text.  One clause (or clause group) per line:
//
//   B -> H      implications; |H| heads give |H| clauses
//   B -> false  negative clause
//   B ->        same as B -> false
//   B = H       set equivalence: expands to B->H plus H->B
//
// B and H are lists of variables separated by whitespace or commas.  A token
// that is a bare run of letters denotes the concatenation of single-letter
// variables ("ab->cd" is {ab -> c, ab -> d}); each letter may carry trailing
// digits and apostrophes ("b1b2b3->c1", "a'b'->c").  Tokens containing an
// underscore or starting with a digit are single multi-character variables.
// '#' starts a comment; a comment of the form "# alphabet: ..." declares the
// formula's alphabet.  Tautological expansions (head inside body) and '='
// lines with falsum are errors.
Formula parse_formula(std::string_view text);

// Canonical rule text: one clause per line, bodies sorted, clauses sorted
// (body, then head), single-space separators; a "# alphabet:" first line when
// a declared alphabet is present.  parse_formula(render(f)) == f.
std::string render(const Formula& f);
std::string render(const HornClause& c);

}  // namespace horn
