#include "boolsolve/errors.hpp"
#include "boolsolve/solve.hpp"

#include <variant>

namespace boolsolve {

namespace detail {
Formula prepared_formula(const SolutionProblem& sp);
const std::vector<std::string>& require_parameters(const SolutionProblem& sp, const char* who);
}  // namespace detail

namespace {

// ∀b̄ F by expansion; other quantifiers of F are kept.
Formula forall_expanded(const Formula& f, const AtomSet& bs) {
    Formula out = f;
    for (const auto& b : bs) {
        out = simplify(Formula::conj(substitute(out, b, Formula::top()),
                                     substitute(out, b, Formula::bot())));
    }
    return out;
}

Formula project_or_fail(const Formula& g, const AtomSet& forbidden, std::size_t index) {
    AtomSet keep = free_atoms(g);
    for (const auto& b : forbidden) keep.erase(b);
    auto projected = project_vocabulary(g, keep);
    if (auto* f = std::get_if<Formula>(&projected)) return *f;
    throw ProjectionFailed("component " + std::to_string(index + 1) +
                           " depends on a forbidden atom");
}

}  // namespace

Solution solve_restricted(const SolutionProblem& sp) {
    const AtomSet bs = sp.forbidden.value_or(AtomSet{});
    SolutionProblem inner{forall_expanded(detail::prepared_formula(sp), bs), sp.unknowns,
                          sp.parameters, std::nullopt};
    if (!exists_solution(inner)) {
        throw NoSolution(bs.empty() ? "the problem has no solution"
                                    : "no solution avoids the forbidden atoms");
    }
    Solution out = sp.parameters ? solve_succ_elim(inner)
                                 : solve_on_second_order(inner, Strategy::Interval);
    for (std::size_t i = 0; i < out.components.size(); ++i) {
        out.components[i] = project_or_fail(out.components[i], bs, i);
    }
    if (!is_particular_solution(sp, out.components)) {
        throw InternalCheckFailed("restricted solution does not solve the problem");
    }
    return out;
}

Solution solve_restricted_two_stage(const SolutionProblem& sp,
                                    std::span<const AtomSet> forbidden) {
    const auto& ts = detail::require_parameters(sp, "two-stage restricted solving");
    if (forbidden.size() != sp.unknowns.size()) {
        throw InvalidProblem("expected one restriction per unknown");
    }
    const Solution stage1 = solve_succ_elim(sp);

    AtomSet taken = all_atoms(sp.formula);
    taken.insert(sp.unknowns.begin(), sp.unknowns.end());
    taken.insert(ts.begin(), ts.end());
    for (const auto& bs : forbidden) taken.insert(bs.begin(), bs.end());

    // ⋀ (R_i[c_i / b_i] -> R_i), solved for the parameters with every copy c forbidden.
    std::vector<Formula> requirements;
    AtomSet copies;
    for (std::size_t i = 0; i < forbidden.size(); ++i) {
        const Formula& r = stage1.components[i];
        std::vector<std::string> bs;
        std::vector<Formula> cs;
        for (const auto& b : free_atoms(r)) {
            if (!forbidden[i].contains(b)) continue;
            std::string c = fresh_name(b, taken);
            taken.insert(c);
            copies.insert(c);
            bs.push_back(b);
            cs.push_back(Formula::atom(c));
        }
        if (bs.empty()) continue;
        requirements.push_back(Formula::implies(substitute(r, bs, cs), r));
    }
    SolutionProblem stage2{Formula::conj_all(requirements), ts, std::nullopt, copies};
    const Solution instantiation = solve_restricted(stage2);

    Solution out = instantiate(sp, stage1, instantiation.components);
    for (std::size_t i = 0; i < out.components.size(); ++i) {
        out.components[i] = project_or_fail(out.components[i], forbidden[i], i);
    }
    if (!is_particular_solution(sp, out.components)) {
        throw InternalCheckFailed("restricted solution does not solve the problem");
    }
    return out;
}

}  // namespace boolsolve
