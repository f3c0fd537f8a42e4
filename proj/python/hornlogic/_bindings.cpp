// Thin string-level bindings: every operation takes and returns rule text
// (or graph text), so the Python side needs no mirrored data model.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "horn/equivalence.hpp"
#include "horn/errors.hpp"
#include "horn/formula.hpp"
#include "horn/generators.hpp"
#include "horn/horn_general.hpp"
#include "horn/minimize.hpp"
#include "horn/newvar.hpp"

#include <string>
#include <vector>

namespace py = pybind11;
using namespace horn;

namespace {

VarSet to_varset(const std::vector<std::string>& names) {
    VarSet s;
    for (const std::string& n : names) s.insert(VariableId(n));
    return s;
}

}  // namespace

PYBIND11_MODULE(_hornlogic, m) {
    m.doc() = "Horn formula toolkit: variable forgetting, common equivalence, minimization.";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const LimitError& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "canonical", [](const std::string& rules) { return render(parse_formula(rules)); },
        py::arg("rules"), "Parse rule text and return the canonical rendering.");

    m.def(
        "size", [](const std::string& rules) { return horn::size(parse_formula(rules)); },
        py::arg("rules"), "Number of literal occurrences in the formula.");

    m.def(
        "classify",
        [](const std::string& rules) {
            Classification c = classify(parse_formula(rules));
            py::dict d;
            d["definite"] = c.definite;
            d["single_head"] = c.single_head;
            d["acyclic"] = c.acyclic;
            return d;
        },
        py::arg("rules"), "Structural flags of the formula.");

    m.def(
        "forget",
        [](const std::string& rules, const std::vector<std::string>& drop) {
            return render(forget_horn(parse_formula(rules), to_varset(drop)));
        },
        py::arg("rules"), py::arg("drop"),
        "Forget the given variables; the result keeps the surviving alphabet declared.");

    m.def(
        "common_equivalent",
        [](const std::string& rules_a, const std::string& rules_b) {
            return common_equivalent(parse_formula(rules_a), parse_formula(rules_b)).equivalent;
        },
        py::arg("rules_a"), py::arg("rules_b"),
        "Whether the two formulas have the same consequences on their common alphabet.");

    m.def(
        "ce_witness",
        [](const std::string& rules_a, const std::string& rules_b) -> py::object {
            CeResult r = common_equivalent(parse_formula(rules_a), parse_formula(rules_b));
            if (r.equivalent) return py::none();
            return py::str(render(r.witness->clause));
        },
        py::arg("rules_a"), py::arg("rules_b"),
        "A separating clause over the common alphabet, or None when equivalent.");

    m.def(
        "min_formula",
        [](const std::string& rules) { return render(min_formula(parse_formula(rules))); },
        py::arg("rules"),
        "Exact fixed-alphabet minimization of a single-head formula (acyclic after completion).");

    m.def(
        "minimality_report",
        [](const std::string& rules) {
            MinimalityReport r = minimality_report(parse_formula(rules));
            py::dict d;
            d["minimal_certified"] = r.minimal_certified;
            py::list witnesses;
            for (const MinimalityWitness& w : r.witnesses)
                witnesses.append(py::make_tuple(render(w.clause), w.variable.name()));
            d["witnesses"] = witnesses;
            return d;
        },
        py::arg("rules"),
        "Redundancy witnesses (clause, body variable); none certifies minimality.");

    m.def(
        "greedy_minimize",
        [](const std::string& rules) { return render(greedy_minimize(parse_formula(rules))); },
        py::arg("rules"), "Greedy size reduction by introducing fresh definition variables.");

    m.def(
        "newvar",
        [](const std::vector<std::string>& definition, const std::string& rules) {
            return render(newvar(to_varset(definition), parse_formula(rules)));
        },
        py::arg("definition"), py::arg("rules"),
        "Introduce one fresh definition for the given variable set.");

    m.def(
        "named_family",
        [](const std::string& name, int n) {
            NamedFamily fam = named_family(name, n);
            py::dict d;
            d["rules"] = render(fam.formula);
            py::list drop;
            for (VariableId v : fam.drop) drop.append(v.name());
            d["drop"] = drop;
            return d;
        },
        py::arg("name"), py::arg("n") = 0,
        "A named example family and the variable set its source example forgets.");

    m.def(
        "vc_reduction",
        [](const std::string& graph) { return render(vc_reduction(parse_graph(graph))); },
        py::arg("graph"), "The vertex-cover hardness formula of a 'node a'/'edge a b' graph.");

    m.def(
        "cover_formula",
        [](const std::string& graph, const std::vector<std::string>& cover) {
            return render(cover_formula(parse_graph(graph), cover));
        },
        py::arg("graph"), py::arg("cover"),
        "The smaller common-equivalent formula witnessed by a vertex cover.");

    m.def(
        "random_horn",
        [](std::uint32_t seed, int vars, int clauses, int max_body, bool single_head,
           bool definite) {
            RandomProfile profile{vars, clauses, max_body, single_head, definite};
            return render(random_horn(profile, seed));
        },
        py::arg("seed"), py::arg("vars") = 6, py::arg("clauses") = 5, py::arg("max_body") = 3,
        py::arg("single_head") = false, py::arg("definite") = true,
        "Deterministic random formula with exactly the requested number of clauses.");
}
