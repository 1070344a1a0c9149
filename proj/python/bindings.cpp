#include "boolsolve/elimination.hpp"
#include "boolsolve/errors.hpp"
#include "boolsolve/oracle.hpp"
#include "boolsolve/solve.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace boolsolve;

namespace {

std::vector<Formula> to_formulas(const std::vector<std::string>& texts) {
    std::vector<Formula> out;
    for (const auto& t : texts) out.push_back(parse(t));
    return out;
}

std::vector<std::string> to_texts(const Solution& sol) {
    std::vector<std::string> out;
    for (const auto& c : sol.components) out.push_back(print(c));
    return out;
}

SolutionProblem make_problem(const std::string& formula, const std::vector<std::string>& unknowns,
                             std::optional<std::vector<std::string>> parameters,
                             std::optional<std::vector<std::string>> forbidden) {
    SolutionProblem sp{parse(formula), unknowns, std::move(parameters), std::nullopt};
    if (forbidden) sp.forbidden = AtomSet(forbidden->begin(), forbidden->end());
    sp.validate();
    return sp;
}

Solution solve_with(const SolutionProblem& sp, const std::string& method) {
    if (method == "succ-elim") return solve_succ_elim(with_parameters(sp));
    if (method == "second-order") return solve_on_second_order(sp, Strategy::Interval);
    if (method == "second-order-reproductive") {
        return solve_on_second_order(with_parameters(sp), Strategy::Reproductive);
    }
    if (method == "witnesses") return solve_by_witnesses(sp, WitnessFn::FTrue);
    if (method == "witnesses-dnf") return solve_by_witnesses(sp, WitnessFn::DnfEhw);
    if (method == "witnesses-ackermann") return solve_by_witnesses(sp, WitnessFn::AckermannThenFTrue);
    if (method == "shortcut") return solve_shortcut(sp, true);
    if (method == "restricted") return solve_restricted(sp);
    throw InvalidProblem("unknown method '" + method + "'");
}

}  // namespace

PYBIND11_MODULE(_boolsolve, m) {
    m.doc() = "Boolean equation solving over propositional formulas";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<NoSolution>(m, "NoSolution", base.ptr());
    py::register_exception<NotSubstitutible>(m, "NotSubstitutible", base.ptr());
    py::register_exception<TooLarge>(m, "TooLarge", base.ptr());

    py::class_<Formula>(m, "Formula")
        .def(py::init([](const std::string& text) { return parse(text); }), py::arg("text"))
        .def("__str__", [](const Formula& f) { return print(f); })
        .def("__repr__", [](const Formula& f) { return "Formula('" + print(f) + "')"; })
        .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
        .def("__hash__", [](const Formula& f) { return f.hash(); })
        .def_property_readonly("free_atoms", [](const Formula& f) { return free_atoms(f); });

    m.def("parse", &parse, py::arg("text"));
    m.def("to_text", [](const Formula& f) { return print(f); }, py::arg("formula"));
    m.def("is_valid", &is_valid, py::arg("formula"));
    m.def("is_satisfiable", &is_satisfiable, py::arg("formula"));
    m.def("equivalent", &equivalent, py::arg("f"), py::arg("g"));
    m.def("entails", &entails, py::arg("f"), py::arg("g"));
    m.def("simplify", &simplify, py::arg("formula"));
    m.def("canonical", &canonical, py::arg("formula"));
    m.def(
        "truth_table",
        [](const Formula& f, std::optional<std::vector<std::string>> basis) {
            const TruthTable t = basis ? truth_table(f, AtomSet(basis->begin(), basis->end()))
                                       : truth_table(f);
            return t.bits();
        },
        py::arg("formula"), py::arg("basis") = py::none());
    m.def(
        "substitute",
        [](const Formula& f, const std::vector<std::string>& ps, const std::vector<std::string>& gs) {
            return substitute(f, ps, to_formulas(gs));
        },
        py::arg("formula"), py::arg("atoms"), py::arg("replacements"));
    m.def(
        "eliminate",
        [](const std::vector<std::string>& ps, const Formula& f) { return eliminate_all(ps, f); },
        py::arg("atoms"), py::arg("formula"));
    m.def(
        "weakest_precondition",
        [](const std::vector<std::string>& ps, const Formula& f) {
            return weakest_precondition(ps, f);
        },
        py::arg("atoms"), py::arg("formula"));
    m.def(
        "elim_witness",
        [](const std::string& p, const Formula& f, bool dnf) {
            const WitnessResult w = dnf ? elim_witness_dnf(p, f) : elim_witness(p, f);
            return py::make_tuple(w.witness, w.residue);
        },
        py::arg("atom"), py::arg("formula"), py::arg("dnf") = false);
    m.def(
        "project",
        [](const Formula& f, const std::vector<std::string>& keep) -> std::optional<Formula> {
            auto r = project_vocabulary(f, AtomSet(keep.begin(), keep.end()));
            if (auto* g = std::get_if<Formula>(&r)) return *g;
            return std::nullopt;
        },
        py::arg("formula"), py::arg("keep"));

    py::class_<SolutionProblem>(m, "Problem")
        .def(py::init(&make_problem), py::arg("formula"), py::arg("unknowns"),
             py::arg("parameters") = py::none(), py::arg("forbidden") = py::none())
        .def_readonly("formula", &SolutionProblem::formula)
        .def_readonly("unknowns", &SolutionProblem::unknowns)
        .def_readonly("parameters", &SolutionProblem::parameters);

    m.def("exists_solution", &exists_solution, py::arg("problem"));
    m.def(
        "solve",
        [](const SolutionProblem& sp, const std::string& method) {
            return to_texts(solve_with(sp, method));
        },
        py::arg("problem"), py::arg("method") = "succ-elim");
    m.def(
        "check",
        [](const SolutionProblem& sp, const std::vector<std::string>& components) {
            return check_particular(sp, to_formulas(components)).verdict;
        },
        py::arg("problem"), py::arg("components"));
    m.def(
        "enumerate_solutions",
        [](const SolutionProblem& sp, const std::vector<std::string>& basis) {
            std::vector<std::vector<std::string>> out;
            for (const auto& s : enumerate_solutions(sp, AtomSet(basis.begin(), basis.end()))) {
                out.push_back(to_texts(s));
            }
            return out;
        },
        py::arg("problem"), py::arg("basis"));
}
