#include "horn/cli.hpp"

#include "horn/equivalence.hpp"
#include "horn/errors.hpp"
#include "horn/forgetting.hpp"
#include "horn/formula.hpp"
#include "horn/generators.hpp"
#include "horn/horn_general.hpp"
#include "horn/minimize.hpp"
#include "horn/newvar.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace horn {
namespace {

// Read a rule or graph file; "-" means the provided input stream.
std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream text;
    if (path == "-") {
        text << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file)
            throw InputError("cannot open '" + path + "'");
        text << file.rdbuf();
    }
    return text.str();
}

Formula load_formula(const std::string& path, std::istream& in) {
    return parse_formula(slurp(path, in));
}

// Comma- and/or whitespace-separated name list, as taken by --drop / --cover.
std::vector<std::string> split_list(const std::string& list) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : list) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

VarSet parse_var_list(const std::string& list) {
    VarSet vars;
    for (const std::string& name : split_list(list)) vars.insert(VariableId(name));
    return vars;
}

bool reserved_z_name(const std::string& name) {
    if (name.size() < 3 || name[0] != '_' || name[1] != 'z') return false;
    for (std::size_t i = 2; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    return true;
}

int cmd_forget(const std::string& file, const std::string& drop_list, bool collect, bool no_prune,
               bool want_stats, std::istream& in, std::ostream& out, std::ostream& err) {
    Formula f = load_formula(file, in);
    VarSet drop = parse_var_list(drop_list);
    for (VariableId v : drop)
        if (reserved_z_name(v.name()))
            throw InputError("cannot forget reserved completion variable '" + v.name() + "'");

    // Negative clauses ride through the enumeration as definite clauses with
    // completion heads; those heads are translated back on the way out, so
    // streaming keeps working memory polynomial for general Horn input.
    ZTransformResult zt = z_transform(f);
    VarSet z_set(zt.z_vars);
    VarSet survivors = set_difference(f.alphabet(), drop);
    VarSet keep = set_union(z_set, survivors);

    EnumerateOptions options;
    options.prune = !no_prune;

    ForgetStats stats;
    if (collect) {
        std::vector<HornClause> got;
        stats = enumerate_implicates(
            zt.definite, keep,
            [&](const HornClause& c) {
                got.push_back(c);
                return true;
            },
            options);
        Formula back = substitute_false(Formula(std::move(got), keep), z_set);
        Formula result(std::vector<HornClause>(back.clauses().begin(), back.clauses().end()),
                       survivors);
        out << render(result) << '\n';
    } else {
        stats = enumerate_implicates(
            zt.definite, keep,
            [&](const HornClause& c) {
                // Completion heads only ever occur as heads, never in bodies.
                if (c.is_definite() && z_set.contains(c.head_var()))
                    out << render(HornClause(c.body(), Falsum{})) << '\n';
                else
                    out << render(c) << '\n';
                return true;
            },
            options);
    }

    if (want_stats) {
        nlohmann::ordered_json line{{"emitted", stats.emitted},
                                    {"branches", stats.branches},
                                    {"pruned", stats.pruned},
                                    {"duplicates_suppressed", stats.duplicates_suppressed},
                                    {"max_frames", stats.max_frames}};
        err << line.dump() << '\n';
    }
    return 0;
}

int cmd_ce(const std::string& file_a, const std::string& file_b, bool want_witness,
           std::istream& in, std::ostream& out) {
    Formula a = load_formula(file_a, in);
    Formula b = load_formula(file_b, in);
    CeResult r = common_equivalent(a, b);
    if (r.equivalent) return 0;
    if (want_witness && r.witness) out << render(r.witness->clause) << '\n';
    return 1;
}

// Necessary-condition redundancy report, printed as comment lines so the
// clause output stays parseable.  Works on the completed (definite) view;
// completion heads are shown as the original negative clauses.
void print_report(const Formula& f, std::ostream& out) {
    try {
        ZTransformResult zt = z_transform(f);
        VarSet z_set(zt.z_vars);
        MinimalityReport rep = minimality_report(zt.definite);
        if (rep.minimal_certified) {
            out << "# report: minimal among single-head formulas on this alphabet\n";
            return;
        }
        out << "# report: " << rep.witnesses.size() << " redundancy witness(es)\n";
        for (const MinimalityWitness& w : rep.witnesses) {
            HornClause shown = w.clause;
            if (shown.is_definite() && z_set.contains(shown.head_var()))
                shown = HornClause(shown.body(), Falsum{});
            out << "# witness: " << render(shown) << " [" << w.variable.name() << "]\n";
        }
    } catch (const Error& e) {
        out << "# report: unavailable (" << e.what() << ")\n";
    }
}

int cmd_minimize(const std::string& file, bool newvar_mode, bool want_report, std::istream& in,
                 std::ostream& out) {
    Formula f = load_formula(file, in);

    if (newvar_mode) {
        Formula g = greedy_minimize(f);
        out << render(g) << '\n';
        out << "# size: " << size(f) << " -> " << size(g) << '\n';
        if (want_report) print_report(f, out);
        return 0;
    }

    if (!classify(f).single_head)
        throw InputError("same-alphabet minimization requires a single-head formula");
    if (!classify(z_transform(f).definite).acyclic) {
        // No exact procedure on cyclic input; emit the report instead.
        print_report(f, out);
        return 3;
    }

    Formula g = min_formula(f);
    out << render(g) << '\n';
    out << "# size: " << size(f) << " -> " << size(g) << '\n';
    if (want_report) print_report(f, out);
    return 0;
}

int cmd_gen(bool family_given, const std::string& family, int n, const std::string& vc_file,
            const std::string& cover_list, bool cover_given, std::istream& in, std::ostream& out) {
    if (family_given) {
        NamedFamily fam = named_family(family, n);
        out << render(fam.formula) << '\n';
        if (!fam.drop.empty()) {
            out << "# drop:";
            for (VariableId v : fam.drop) out << ' ' << v.name();
            out << '\n';
        }
        return 0;
    }

    Graph g = parse_graph(slurp(vc_file, in));
    if (!cover_given) {
        out << render(vc_reduction(g)) << '\n';
        return 0;
    }

    std::vector<std::string> cover = split_list(cover_list);
    Formula b = cover_formula(g, cover);

    // Canonical counts for the size-law line (duplicates are harmless on
    // input, so normalize the same way the builders do).
    std::vector<std::string> nodes = g.nodes;
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [u, v] : g.edges) edges.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());

    out << render(b) << '\n';
    out << "# size law: " << size(b) << " == 6*" << edges.size() << " + 8*" << nodes.size()
        << " + " << cover.size() << '\n';
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Horn formula toolkit: variable forgetting, common equivalence, minimization"};
    app.name("horntool");
    app.require_subcommand(1);

    auto* forget_cmd =
        app.add_subcommand("forget", "Forget variables; streams clauses by default");
    std::string forget_drop;
    std::string forget_file = "-";
    bool stream_mode = false, collect_mode = false, no_prune = false, forget_stats = false;
    forget_cmd->add_option("--drop", forget_drop, "variables to forget (comma-separated)")
        ->required();
    auto* stream_opt = forget_cmd->add_flag("--stream", stream_mode,
                                            "print clauses as emitted (default; duplicates possible)");
    auto* collect_opt = forget_cmd->add_flag("--collect", collect_mode,
                                             "print the deduplicated canonical formula");
    stream_opt->excludes(collect_opt);
    forget_cmd->add_flag("--no-prune", no_prune, "disable the derivability lookahead");
    forget_cmd->add_flag("--stats", forget_stats,
                         "print a JSON stats record on the diagnostic stream");
    forget_cmd->add_option("FILE", forget_file, "rule file ('-' for stdin)");

    auto* ce_cmd = app.add_subcommand("ce", "Check common equivalence of two formulas");
    std::string ce_file_a, ce_file_b;
    bool ce_witness = false;
    ce_cmd->add_option("FILE_A", ce_file_a, "first rule file")->required();
    ce_cmd->add_option("FILE_B", ce_file_b, "second rule file")->required();
    ce_cmd->add_flag("--witness", ce_witness, "print a separating clause when not equivalent");

    auto* min_cmd = app.add_subcommand("minimize", "Minimize a formula");
    std::string min_file = "-";
    bool same_alphabet = false, use_newvar = false, min_report = false;
    auto* same_opt = min_cmd->add_flag("--same-alphabet", same_alphabet,
                                       "exact single-head minimization (default)");
    auto* newvar_opt =
        min_cmd->add_flag("--newvar", use_newvar, "greedy reduction with fresh definitions");
    same_opt->excludes(newvar_opt);
    min_cmd->add_flag("--report", min_report, "also print the redundancy-witness report");
    min_cmd->add_option("FILE", min_file, "rule file ('-' for stdin)");

    auto* gen_cmd = app.add_subcommand("gen", "Generate example formulas");
    std::string gen_family, gen_vc_file, gen_cover;
    int gen_n = 0;
    auto* family_opt =
        gen_cmd->add_option("--family", gen_family, "named family (see README for the list)");
    auto* n_opt = gen_cmd->add_option("-n", gen_n, "family parameter");
    auto* vc_opt = gen_cmd->add_option("--vc", gen_vc_file,
                                       "build the vertex-cover reduction of a graph file");
    auto* cover_opt = gen_cmd->add_option(
        "--cover", gen_cover, "build the smaller cover formula for this vertex cover instead");
    family_opt->excludes(vc_opt);
    n_opt->needs(family_opt);
    cover_opt->needs(vc_opt);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (forget_cmd->parsed())
            return cmd_forget(forget_file, forget_drop, collect_mode, no_prune, forget_stats, in,
                              out, err);
        if (ce_cmd->parsed()) return cmd_ce(ce_file_a, ce_file_b, ce_witness, in, out);
        if (min_cmd->parsed()) return cmd_minimize(min_file, use_newvar, min_report, in, out);
        if (gen_cmd->parsed()) {
            if (family_opt->count() == 0 && vc_opt->count() == 0)
                throw InputError("gen needs --family or --vc");
            return cmd_gen(family_opt->count() > 0, gen_family, gen_n, gen_vc_file, gen_cover,
                           cover_opt->count() > 0, in, out);
        }
        err << "error: no command\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace horn
