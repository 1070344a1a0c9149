#include "boolsolve/cli.hpp"

#include "boolsolve/elimination.hpp"
#include "boolsolve/errors.hpp"
#include "boolsolve/oracle.hpp"
#include "boolsolve/problem_file.hpp"
#include "boolsolve/solve.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <iterator>
#include <map>

namespace boolsolve {

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

void print_solution(std::ostream& out, const SolutionProblem& sp, const Solution& sol) {
    for (std::size_t i = 0; i < sp.unknowns.size(); ++i) {
        out << sp.unknowns[i] << " := " << print(sol.components[i]) << '\n';
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; });
}

// Either "f1; f2; ..." in unknown order or "p := f" items separated by
// newlines or semicolons, as printed by `solve`.
std::vector<Formula> parse_components(const std::string& text, const SolutionProblem& sp) {
    std::vector<Formula> out;
    if (text.find(":=") == std::string::npos) {
        for (const auto& part : split(text, ';')) {
            if (!blank(part)) out.push_back(parse(part));
        }
        return out;
    }
    std::map<std::string, Formula> assigned;
    std::string joined = text;
    std::replace(joined.begin(), joined.end(), '\n', ';');
    for (const auto& part : split(joined, ';')) {
        if (blank(part)) continue;
        const auto pos = part.find(":=");
        if (pos == std::string::npos) throw InvalidProblem("expected 'unknown := formula'");
        const auto names = parse_atom_list(part.substr(0, pos));
        if (names.size() != 1) throw InvalidProblem("expected one unknown before ':='");
        if (!assigned.emplace(names[0], parse(part.substr(pos + 2))).second) {
            throw InvalidProblem("'" + names[0] + "' assigned twice");
        }
    }
    for (const auto& p : sp.unknowns) {
        auto it = assigned.find(p);
        if (it == assigned.end()) throw InvalidProblem("no component for unknown '" + p + "'");
        out.push_back(it->second);
        assigned.erase(it);
    }
    if (!assigned.empty()) {
        throw InvalidProblem("'" + assigned.begin()->first + "' is not an unknown");
    }
    return out;
}

std::string valuation_text(const std::optional<Valuation>& v) {
    return v ? " [" + to_string(*v) + "]" : "";
}

struct SolveOptions {
    std::string method = "succ-elim";
    std::string witness = "ftrue";
    bool reproductive = false;
    bool reorder = false;
    std::string file;
};

Solution solve_with(const ProblemFile& pf, const SolveOptions& o, SolutionProblem& sp) {
    if (!pf.component_forbid.empty()) {
        sp = with_parameters(sp);
        std::vector<AtomSet> per;
        for (const auto& p : sp.unknowns) {
            auto it = pf.component_forbid.find(p);
            per.push_back(it == pf.component_forbid.end() ? AtomSet{} : it->second);
            if (sp.forbidden) per.back().insert(sp.forbidden->begin(), sp.forbidden->end());
        }
        return solve_restricted_two_stage(sp, per);
    }
    if (sp.forbidden) {
        if (o.reproductive || o.method == "succ-elim") sp = with_parameters(sp);
        return solve_restricted(sp);
    }
    Solution sol;
    if (o.method == "succ-elim") {
        sp = with_parameters(sp);
        return solve_succ_elim(sp);
    }
    if (o.method == "second-order") {
        if (o.reproductive) {
            sp = with_parameters(sp);
            return solve_on_second_order(sp, Strategy::Reproductive);
        }
        return solve_on_second_order(sp, Strategy::Interval);
    }
    if (o.method == "witnesses") {
        const WitnessFn fn = o.witness == "dnf"         ? WitnessFn::DnfEhw
                             : o.witness == "ackermann" ? WitnessFn::AckermannThenFTrue
                                                        : WitnessFn::FTrue;
        sol = solve_by_witnesses(sp, fn);
    } else {
        sol = solve_shortcut(sp, o.reorder);
    }
    if (!o.reproductive) return sol;
    sp = with_parameters(sp);
    return rigorous_solution(sp, sol);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Solve Boolean equations over propositional formulas", "boolsolve"};
    app.require_subcommand(1);

    SolveOptions so;
    auto* solve = app.add_subcommand("solve", "Compute a solution");
    solve->add_option("--method", so.method, "Solver")
        ->check(CLI::IsMember({"succ-elim", "second-order", "witnesses", "shortcut"}));
    solve->add_option("--witness", so.witness, "Witness function for --method witnesses")
        ->check(CLI::IsMember({"ftrue", "dnf", "ackermann"}));
    solve->add_flag("--reproductive", so.reproductive, "Return a reproductive solution");
    solve->add_flag("--reorder", so.reorder, "Try other unknown orders for --method shortcut");
    solve->add_option("file", so.file, "Problem file")->required();

    std::string exists_file;
    auto* exists = app.add_subcommand("exists", "Decide whether a solution exists");
    exists->add_option("file", exists_file, "Problem file")->required();

    std::string check_file;
    std::string check_with;
    auto* check = app.add_subcommand("check", "Check a particular solution");
    check->add_option("--with", check_with, "Components, or - to read them from stdin")->required();
    check->add_option("file", check_file, "Problem file")->required();

    std::string elim_vars;
    std::string elim_formula;
    auto* eliminate = app.add_subcommand("eliminate", "Eliminate atoms, printing the canonical form");
    eliminate->add_option("--vars", elim_vars, "Atoms to eliminate")->required();
    eliminate->add_option("formula", elim_formula, "Formula")->required();

    std::string pre_file;
    auto* precondition = app.add_subcommand("precondition", "Weakest precondition of solvability");
    precondition->add_option("file", pre_file, "Problem file")->required();

    std::string enum_file;
    std::string enum_basis;
    bool enum_tables = false;
    bool enum_force = false;
    auto* enumerate = app.add_subcommand("enumerate", "List all solutions over a function basis");
    enumerate->add_option("--basis", enum_basis, "Basis atoms (default: the problem's atoms)");
    enumerate->add_flag("--tables", enum_tables, "Print truth tables instead of formulas");
    enumerate->add_flag("--force", enum_force, "Lift the size limits");
    enumerate->add_option("file", enum_file, "Problem file")->required();

    std::string proj_keep;
    std::string proj_formula;
    auto* project = app.add_subcommand("project", "Rewrite a formula over fewer atoms");
    project->add_option("--keep", proj_keep, "Atoms to keep")->required();
    project->add_option("formula", proj_formula, "Formula")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kError;
    }

    try {
        if (solve->parsed()) {
            const ProblemFile pf = load_problem(so.file);
            SolutionProblem sp = pf.problem;
            const Solution sol = solve_with(pf, so, sp);
            print_solution(out, sp, sol);
            return kOk;
        }
        if (exists->parsed()) {
            const bool yes = exists_solution(load_problem(exists_file).problem);
            out << (yes ? "solvable" : "unsolvable") << '\n';
            return yes ? kOk : kFalse;
        }
        if (check->parsed()) {
            const SolutionProblem sp = load_problem(check_file).problem;
            std::string text = check_with;
            if (text == "-") text.assign(std::istreambuf_iterator<char>(in), {});
            const auto comps = parse_components(text, sp);
            const CheckReport report = check_particular(sp, comps);
            if (report.verdict) {
                out << "solution\n";
                return kOk;
            }
            const auto& f = report.failures.front();
            out << "not a solution: " << f.reason << valuation_text(f.valuation) << '\n';
            return kFalse;
        }
        if (eliminate->parsed()) {
            const auto vars = parse_atom_list(elim_vars);
            out << print(weakest_precondition(vars, parse(elim_formula))) << '\n';
            return kOk;
        }
        if (precondition->parsed()) {
            const SolutionProblem sp = load_problem(pre_file).problem;
            out << print(weakest_precondition(sp.unknowns, sp.formula)) << '\n';
            return kOk;
        }
        if (enumerate->parsed()) {
            const SolutionProblem sp = load_problem(enum_file).problem;
            AtomSet basis = sp.base_atoms();
            if (enumerate->count("--basis") > 0) {
                const auto atoms = parse_atom_list(enum_basis);
                basis = AtomSet(atoms.begin(), atoms.end());
            }
            OracleLimits limits;
            if (enum_force) limits = {6, 64};
            const FunctionSpace space(basis);
            const auto found = enumerate_solution_codes(sp, basis, limits);
            if (enum_tables) {
                std::string header = "basis:";
                for (const auto& a : basis) header += " " + a;
                out << header << '\n';
            }
            for (const auto& codes : found) {
                for (std::size_t j = 0; j < codes.size(); ++j) {
                    if (j) out << "; ";
                    if (enum_tables) {
                        out << space.table(codes[j]).bits();
                    } else {
                        out << print(space.formula(codes[j]));
                    }
                }
                out << '\n';
            }
            return found.empty() ? kFalse : kOk;
        }
        if (project->parsed()) {
            const auto keep = parse_atom_list(proj_keep);
            const auto result =
                project_vocabulary(parse(proj_formula), AtomSet(keep.begin(), keep.end()));
            if (const auto* f = std::get_if<Formula>(&result)) {
                out << print(*f) << '\n';
                return kOk;
            }
            const auto& ni = std::get<NotIndependent>(result);
            out << "not independent: [" << to_string(ni.with_true) << "] vs ["
                << to_string(ni.with_false) << "]\n";
            return kFalse;
        }
    } catch (const NoSolution& e) {
        err << "no solution: " << e.what() << '\n';
        return kFalse;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}

}  // namespace boolsolve
