#include "horn/formula.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

namespace horn {

// ---------------------------------------------------------------------------
// Variable interning
// ---------------------------------------------------------------------------

namespace {

struct SymbolTable {
    std::mutex mutex;
    std::deque<std::string> names;  // id -> name (deque: stable references)
    std::unordered_map<std::string, std::uint32_t> index;
};

SymbolTable& table() {
    static SymbolTable t;
    return t;
}

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool is_ident_char(char c) { return is_letter(c) || is_digit(c) || c == '_' || c == '\''; }

// "_z<k>" or "_n<k>": the generated-variable namespace.
bool is_generated_name(std::string_view s) {
    if (s.size() < 3 || s[0] != '_' || (s[1] != 'z' && s[1] != 'n')) return false;
    for (std::size_t i = 2; i < s.size(); ++i)
        if (!is_digit(s[i])) return false;
    return true;
}

// A single-letter variable group: letter followed by digits and apostrophes.
bool is_letter_group(std::string_view s) {
    if (s.empty() || !is_letter(s[0])) return false;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!is_digit(s[i]) && s[i] != '\'') return false;
    return true;
}

void validate_name(std::string_view name) {
    if (name.empty()) throw InputError("variable name must be non-empty");
    for (char c : name)
        if (!is_ident_char(c))
            throw InputError("invalid character in variable name: '" + std::string(name) + "'");
    if (name[0] == '_') {
        if (!is_generated_name(name))
            throw InputError("variable name '" + std::string(name) +
                             "' starts with '_', which is reserved for generated variables");
        return;
    }
    if (name[0] == '\'')
        throw InputError("variable name must start with a letter or digit: '" +
                         std::string(name) + "'");
    if (is_digit(name[0])) return;                              // digit-led identifier
    if (name.find('_') != std::string_view::npos) return;       // underscored identifier
    if (is_letter_group(name)) return;                          // a, x1, a', ...
    // A bare multi-letter run would read as a concatenation in rule text.
    throw InputError("ambiguous variable name '" + std::string(name) +
                     "': a run of letters denotes concatenated variables; "
                     "use digits, apostrophes or an underscore");
}

}  // namespace

VariableId::VariableId(std::string_view name) {
    validate_name(name);
    SymbolTable& t = table();
    std::lock_guard<std::mutex> lock(t.mutex);
    auto it = t.index.find(std::string(name));
    if (it != t.index.end()) {
        id_ = it->second;
        return;
    }
    id_ = static_cast<std::uint32_t>(t.names.size());
    t.names.emplace_back(name);
    t.index.emplace(t.names.back(), id_);
}

const std::string& VariableId::name() const { return table().names[id_]; }

bool operator<(VariableId a, VariableId b) {
    return a.id_ != b.id_ && a.name() < b.name();
}

// ---------------------------------------------------------------------------
// VarSet
// ---------------------------------------------------------------------------

VarSet::VarSet(std::initializer_list<VariableId> vars)
    : VarSet(std::vector<VariableId>(vars)) {}

VarSet::VarSet(std::vector<VariableId> vars) : v_(std::move(vars)) {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

bool VarSet::contains(VariableId v) const {
    return std::binary_search(v_.begin(), v_.end(), v);
}

bool VarSet::subset_of(const VarSet& other) const {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

void VarSet::insert(VariableId v) {
    auto it = std::lower_bound(v_.begin(), v_.end(), v);
    if (it == v_.end() || *it != v) v_.insert(it, v);
}

void VarSet::erase(VariableId v) {
    auto it = std::lower_bound(v_.begin(), v_.end(), v);
    if (it != v_.end() && *it == v) v_.erase(it);
}

bool operator<(const VarSet& a, const VarSet& b) {
    return std::lexicographical_compare(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end());
}

VarSet set_union(const VarSet& a, const VarSet& b) {
    std::vector<VariableId> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    VarSet r;
    for (VariableId v : out) r.insert(v);  // already sorted; inserts append
    return r;
}

VarSet set_difference(const VarSet& a, const VarSet& b) {
    std::vector<VariableId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    VarSet r;
    for (VariableId v : out) r.insert(v);
    return r;
}

VarSet set_intersection(const VarSet& a, const VarSet& b) {
    std::vector<VariableId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    VarSet r;
    for (VariableId v : out) r.insert(v);
    return r;
}

// ---------------------------------------------------------------------------
// HornClause
// ---------------------------------------------------------------------------

HornClause::HornClause(VarSet body, Head head) : body_(std::move(body)), head_(head) {
    if (is_definite() && body_.contains(std::get<VariableId>(head_)))
        throw InputError("tautological clause: head '" +
                         std::get<VariableId>(head_).name() + "' occurs in its own body");
}

VariableId HornClause::head_var() const { return std::get<VariableId>(head_); }

VarSet HornClause::vars() const {
    VarSet v = body_;
    if (is_definite()) v.insert(head_var());
    return v;
}

bool HornClause::mentions(VariableId v) const {
    return body_.contains(v) || (is_definite() && head_var() == v);
}

bool operator<(const HornClause& a, const HornClause& b) {
    if (a.body_ != b.body_) return a.body_ < b.body_;
    bool adef = a.is_definite(), bdef = b.is_definite();
    if (adef != bdef) return adef;  // falsum sorts last
    if (!adef) return false;
    return a.head_var() < b.head_var();
}

std::size_t size(const HornClause& c) {
    return c.body().size() + (c.is_definite() ? 1 : 0);
}

// ---------------------------------------------------------------------------
// Formula
// ---------------------------------------------------------------------------

Formula::Formula(std::vector<HornClause> clauses, std::optional<VarSet> declared_alphabet)
    : clauses_(std::move(clauses)), declared_alphabet_(std::move(declared_alphabet)) {
    std::sort(clauses_.begin(), clauses_.end());
    clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
    for (const HornClause& c : clauses_) vars_ = set_union(vars_, c.vars());
    if (declared_alphabet_ && !vars_.subset_of(*declared_alphabet_)) {
        VarSet missing = set_difference(vars_, *declared_alphabet_);
        throw InputError("declared alphabet does not cover variable '" +
                         missing.begin()->name() + "'");
    }
}

bool Formula::contains(const HornClause& c) const {
    return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

const VarSet& Formula::alphabet() const {
    return declared_alphabet_ ? *declared_alphabet_ : vars_;
}

std::size_t size(const Formula& f) {
    std::size_t total = 0;
    for (const HornClause& c : f.clauses()) total += size(c);
    return total;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

DependencyGraph dependency_graph(const Formula& f) {
    DependencyGraph g;
    g.nodes = f.vars();
    std::set<std::pair<VariableId, VariableId>> edges;
    for (const HornClause& c : f.clauses()) {
        if (!c.is_definite()) continue;
        for (VariableId b : c.body()) edges.emplace(b, c.head_var());
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

bool is_acyclic(const DependencyGraph& g) {
    std::unordered_map<VariableId, std::vector<VariableId>, VariableIdHash> adj;
    for (const auto& [u, v] : g.edges) adj[u].push_back(v);
    // Iterative three-color depth-first search.
    std::unordered_map<VariableId, int, VariableIdHash> color;  // 0 new, 1 open, 2 done
    for (VariableId start : g.nodes) {
        if (color[start] != 0) continue;
        std::vector<std::pair<VariableId, std::size_t>> stack{{start, 0}};
        color[start] = 1;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            auto it = adj.find(u);
            if (it == adj.end() || next >= it->second.size()) {
                color[u] = 2;
                stack.pop_back();
                continue;
            }
            VariableId v = it->second[next++];
            if (color[v] == 1) return false;
            if (color[v] == 0) {
                color[v] = 1;
                stack.emplace_back(v, 0);
            }
        }
    }
    return true;
}

Classification classify(const Formula& f) {
    Classification c;
    c.definite = true;
    c.single_head = true;
    std::set<VariableId> heads;
    for (const HornClause& cl : f.clauses()) {
        if (!cl.is_definite()) {
            c.definite = false;
            continue;
        }
        if (!heads.insert(cl.head_var()).second) c.single_head = false;
    }
    c.acyclic = is_acyclic(dependency_graph(f));
    return c;
}

Formula definite_part(const Formula& f) {
    std::vector<HornClause> out;
    for (const HornClause& c : f.clauses())
        if (c.is_definite()) out.push_back(c);
    return Formula(std::move(out), f.declared_alphabet());
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum Kind { Ident, Arrow, Equals } kind;
    std::string text;  // for Ident
};

std::vector<Token> tokenize_line(std::string_view line, std::size_t lineno) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
            ++i;
        } else if (c == '-') {
            if (i + 1 >= line.size() || line[i + 1] != '>')
                throw ParseError(lineno, "expected '->' after '-'");
            tokens.push_back({Token::Arrow, {}});
            i += 2;
        } else if (c == '=') {
            tokens.push_back({Token::Equals, {}});
            ++i;
        } else if (is_ident_char(c)) {
            std::size_t j = i;
            while (j < line.size() && is_ident_char(line[j])) ++j;
            tokens.push_back({Token::Ident, std::string(line.substr(i, j - i))});
            i = j;
        } else {
            throw ParseError(lineno, std::string("unexpected character '") + c + "'");
        }
    }
    return tokens;
}

// Expand one identifier token into variables.  A bare run of letter groups is
// the concatenation of those variables (paper-style "abc" = a, b, c); tokens
// with an underscore or a leading digit are single variables.
std::vector<VariableId> expand_token(const std::string& tok, std::size_t lineno) {
    try {
        if (tok[0] == '_' || is_digit(tok[0]) || tok.find('_') != std::string::npos)
            return {VariableId(tok)};
        // Split into letter groups: letter [digits/apostrophes]*.
        std::vector<VariableId> vars;
        std::size_t i = 0;
        while (i < tok.size()) {
            if (!is_letter(tok[i]))
                throw ParseError(lineno, "malformed variable token '" + tok + "'");
            std::size_t j = i + 1;
            while (j < tok.size() && (is_digit(tok[j]) || tok[j] == '\'')) ++j;
            vars.emplace_back(tok.substr(i, j - i));
            i = j;
        }
        return vars;
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(lineno, e.what());
    }
}

std::vector<VariableId> expand_tokens(const std::vector<Token>& tokens, std::size_t begin,
                                      std::size_t end, std::size_t lineno) {
    std::vector<VariableId> vars;
    for (std::size_t i = begin; i < end; ++i) {
        if (tokens[i].kind != Token::Ident)
            throw ParseError(lineno, "unexpected operator");
        if (tokens[i].text == "false")
            throw ParseError(lineno, "'false' is only allowed as the sole head");
        auto expanded = expand_token(tokens[i].text, lineno);
        vars.insert(vars.end(), expanded.begin(), expanded.end());
    }
    return vars;
}

}  // namespace

Formula parse_formula(std::string_view text) {
    std::vector<HornClause> clauses;
    std::optional<VarSet> alphabet;

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;

        // Comments; "# alphabet: ..." declares the alphabet.
        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            std::string_view comment = line.substr(hash + 1);
            std::size_t start = comment.find_first_not_of(" \t");
            if (start != std::string_view::npos &&
                comment.substr(start).rfind("alphabet:", 0) == 0) {
                std::string_view rest = comment.substr(start + 9);
                if (!alphabet) alphabet = VarSet{};
                for (const Token& t : tokenize_line(rest, lineno)) {
                    if (t.kind != Token::Ident || t.text == "false")
                        throw ParseError(lineno, "expected variables in alphabet declaration");
                    for (VariableId v : expand_token(t.text, lineno)) alphabet->insert(v);
                }
            }
            line = line.substr(0, hash);
        }

        std::vector<Token> tokens = tokenize_line(line, lineno);
        if (tokens.empty()) continue;

        std::size_t op_index = tokens.size();
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (tokens[i].kind == Token::Ident) continue;
            if (op_index != tokens.size())
                throw ParseError(lineno, "more than one '->' or '=' on a line");
            op_index = i;
        }
        if (op_index == tokens.size())
            throw ParseError(lineno, "expected '->' or '=' on the line");
        bool equivalence = tokens[op_index].kind == Token::Equals;

        VarSet body(expand_tokens(tokens, 0, op_index, lineno));

        // Head side.
        bool falsum_head = false;
        std::vector<VariableId> heads;
        if (op_index + 1 == tokens.size()) {
            falsum_head = true;  // "B ->"
        } else if (op_index + 2 == tokens.size() && tokens[op_index + 1].kind == Token::Ident &&
                   tokens[op_index + 1].text == "false") {
            falsum_head = true;  // "B -> false"
        } else {
            heads = expand_tokens(tokens, op_index + 1, tokens.size(), lineno);
        }

        try {
            if (equivalence) {
                if (falsum_head)
                    throw ParseError(lineno, "'=' with falsum is not meaningful");
                VarSet head_set(heads);
                for (VariableId h : head_set) clauses.emplace_back(body, h);
                for (VariableId b : body) clauses.emplace_back(head_set, b);
            } else if (falsum_head) {
                clauses.emplace_back(body, Falsum{});
            } else {
                for (VariableId h : VarSet(heads)) clauses.emplace_back(body, h);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(lineno, e.what());
        }
    }

    return Formula(std::move(clauses), std::move(alphabet));
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string render(const HornClause& c) {
    std::ostringstream out;
    bool first = true;
    for (VariableId v : c.body()) {
        if (!first) out << ' ';
        out << v.name();
        first = false;
    }
    if (!first) out << ' ';
    out << "-> " << (c.is_definite() ? c.head_var().name() : std::string("false"));
    return out.str();
}

std::string render(const Formula& f) {
    std::ostringstream out;
    bool first = true;
    if (f.declared_alphabet()) {
        out << "# alphabet:";
        for (VariableId v : *f.declared_alphabet()) out << ' ' << v.name();
        first = false;
    }
    for (const HornClause& c : f.clauses()) {
        if (!first) out << '\n';
        out << render(c);
        first = false;
    }
    return out.str();
}

}  // namespace horn
