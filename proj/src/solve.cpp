#include "boolsolve/solve.hpp"

#include "boolsolve/errors.hpp"

#include <algorithm>
#include <numeric>

namespace boolsolve {

namespace detail {

// Binders renamed away from every name a solver may substitute in.
Formula prepared_formula(const SolutionProblem& sp) {
    AtomSet avoid = sp.unknown_set();
    const AtomSet ts = sp.parameter_set();
    avoid.insert(ts.begin(), ts.end());
    if (sp.forbidden) avoid.insert(sp.forbidden->begin(), sp.forbidden->end());
    return clean_variant(sp.formula, avoid);
}

const std::vector<std::string>& require_parameters(const SolutionProblem& sp, const char* who) {
    if (!sp.parameters) throw MissingParameters(std::string(who) + " needs parameters");
    return *sp.parameters;
}

}  // namespace detail

namespace {

using detail::prepared_formula;
using detail::require_parameters;

Formula at(const Formula& f, const std::string& p, bool value) {
    return substitute(f, p, Formula::constant(value));
}

Formula prefix_free(const Formula& f, const std::string& p) {
    std::vector<std::string> names;
    const Formula* body = &f;
    while (body->kind() == Kind::Exists && body->name() != p) {
        names.push_back(body->name());
        body = &body->body();
    }
    return eliminate_all(names, *body);
}

Formula partial(const Formula& f, std::span<const std::string> ps, std::span<const Formula> gs) {
    return substitute(f, ps.first(gs.size()), gs);
}

}  // namespace

bool exists_solution(const SolutionProblem& sp) {
    return is_valid(Formula::exists_all(sp.unknowns, sp.formula));
}

std::optional<Formula> apply_solution(const SolutionProblem& sp,
                                      std::span<const Formula> components) {
    if (!is_substitutible(components, sp.unknowns, sp.formula)) return std::nullopt;
    return substitute(sp.formula, sp.unknowns, components);
}

bool is_particular_solution(const SolutionProblem& sp, std::span<const Formula> components) {
    const auto applied = apply_solution(sp, components);
    return applied && is_valid(*applied);
}

Formula solve1_interval(const Formula& f, const std::string& p) {
    const Formula g = prefix_free(f, p);
    const Formula low = at(g, p, false);
    if (!is_valid(Formula::disj(at(g, p, true), low))) {
        throw NoSolution("no solution for '" + p + "'");
    }
    return simplify(Formula::negation(low));
}

Formula solve1_reproductive(const Formula& f, const std::string& p, const std::string& t) {
    const Formula g = prefix_free(f, p);
    const Formula low = at(g, p, false);
    const Formula high = at(g, p, true);
    if (!is_valid(Formula::disj(high, low))) throw NoSolution("no solution for '" + p + "'");
    const Formula ta = Formula::atom(t);
    return simplify(Formula::disj(Formula::conj(Formula::negation(low), Formula::negation(ta)),
                                  Formula::conj(high, ta)));
}

Formula schroeder_interpolant(const Formula& a, const Formula& b, const std::string& t,
                              SchroederVariant variant) {
    if (!entails(a, b)) throw NotSolvable("lower bound does not entail upper bound");
    const Formula ta = Formula::atom(t);
    switch (variant) {
        case SchroederVariant::AorBt:
            return Formula::disj(a, Formula::conj(b, ta));
        case SchroederVariant::BandAt:
            return Formula::conj(b, Formula::disj(a, ta));
        case SchroederVariant::AtBnt:
            break;
    }
    return Formula::disj(Formula::conj(a, Formula::negation(ta)), Formula::conj(b, ta));
}

Solution solve_on_second_order(const SolutionProblem& sp, Strategy strategy) {
    const bool reproductive = strategy == Strategy::Reproductive;
    const std::vector<std::string>* ts = nullptr;
    if (reproductive) ts = &require_parameters(sp, "reproductive solving");
    const Formula f = prepared_formula(sp);
    const std::span<const std::string> ps(sp.unknowns);
    Solution out;
    out.kind = reproductive ? SolutionKind::Reproductive : SolutionKind::Particular;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const Formula fi = Formula::exists_all(ps.subspan(i + 1), partial(f, ps, out.components));
        out.trace.push_back(fi);
        out.components.push_back(reproductive ? solve1_reproductive(fi, ps[i], (*ts)[i])
                                              : solve1_interval(fi, ps[i]));
    }
    return out;
}

Solution solve_succ_elim(const SolutionProblem& sp) {
    const auto& ts = require_parameters(sp, "successive elimination");
    const std::span<const std::string> ps(sp.unknowns);
    const std::size_t n = ps.size();
    std::vector<Formula> stages(n + 1);
    stages[n] = prepared_formula(sp);
    for (std::size_t i = n; i > 0; --i) stages[i - 1] = shannon_eliminate(ps[i - 1], stages[i]);
    if (!is_valid(stages[0])) throw NoSolution("the problem has no solution");
    Solution out;
    out.kind = SolutionKind::Reproductive;
    out.trace = stages;
    for (std::size_t i = 1; i <= n; ++i) {
        const Formula fi = partial(stages[i], ps, out.components);
        const Formula ta = Formula::atom(ts[i - 1]);
        out.components.push_back(simplify(
            Formula::disj(Formula::conj(Formula::negation(at(fi, ps[i - 1], false)), Formula::negation(ta)),
                          Formula::conj(at(fi, ps[i - 1], true), ta))));
    }
    return out;
}

Solution solve_by_witnesses(const SolutionProblem& sp, WitnessFn fn) {
    if (!exists_solution(sp)) throw NoSolution("the problem has no solution");
    const Formula f = prepared_formula(sp);
    const std::span<const std::string> ps(sp.unknowns);
    const std::size_t n = ps.size();
    std::vector<Formula> gs(n);
    for (std::size_t i = n; i-- > 0;) {
        const Formula body = substitute(f, ps.subspan(i + 1), std::span(gs).subspan(i + 1));
        std::optional<WitnessResult> w;
        if (fn == WitnessFn::AckermannThenFTrue) w = ackermann_rewrite(ps[i], body);
        if (!w) w = fn == WitnessFn::DnfEhw ? elim_witness_dnf(ps[i], body) : elim_witness(ps[i], body);
        gs[i] = w->witness;
        for (std::size_t j = i + 1; j < n; ++j) gs[j] = simplify(substitute(gs[j], ps[i], gs[i]));
    }
    Solution out;
    out.components = std::move(gs);
    return out;
}

Solution rigorous_solution(const SolutionProblem& sp, const Solution& particular) {
    const auto& ts = require_parameters(sp, "the rigorous solution");
    if (particular.kind != SolutionKind::Particular ||
        !is_particular_solution(sp, particular.components)) {
        throw NotAParticularSolution("the given components do not solve the problem");
    }
    const std::vector<Formula> targs = atoms_of(ts);
    const Formula ft = substitute(prepared_formula(sp), sp.unknowns, targs);
    Solution out;
    out.kind = SolutionKind::Reproductive;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        out.components.push_back(
            clean_variant(Formula::disj(Formula::conj(particular.components[i], negate(ft)),
                                        Formula::conj(targs[i], ft))));
    }
    return out;
}

Solution instantiate(const SolutionProblem& sp, const Solution& reproductive,
                     std::span<const Formula> ts) {
    const auto& params = require_parameters(sp, "instantiation");
    if (ts.size() != params.size()) {
        throw NotSubstitutible("expected " + std::to_string(params.size()) +
                                   " instantiation formulas, got " + std::to_string(ts.size()),
                               0, 0);
    }
    const AtomSet unknowns = sp.unknown_set();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        for (const auto& a : free_atoms(ts[i])) {
            if (unknowns.contains(a)) {
                throw NotSubstitutible("instantiation formula " + std::to_string(i + 1) +
                                           " mentions unknown '" + a + "'",
                                       2, i);
            }
        }
    }
    Solution out;
    for (const auto& c : reproductive.components) {
        Formula g = substitute(c, params, ts);
        out.components.push_back(g == c ? c : simplify(g));
    }
    if (!is_particular_solution(sp, out.components)) {
        throw InternalCheckFailed("instantiated solution does not solve the problem");
    }
    return out;
}

std::optional<Solution> polarity_shortcut(const SolutionProblem& sp) {
    Solution out;
    for (const auto& p : sp.unknowns) {
        const Polarity pol = polarity_of(sp.formula, p);
        if (pol == Polarity::Both) return std::nullopt;
        out.components.push_back(Formula::constant(pol != Polarity::NegativeOnly));
    }
    if (!is_particular_solution(sp, out.components)) return std::nullopt;
    return out;
}

std::optional<Formula> definiens(const Formula& f, const std::string& p) {
    const Formula high = at(f, p, true);
    if (is_satisfiable(Formula::conj(high, at(f, p, false)))) return std::nullopt;
    return simplify(high);
}

namespace {

std::optional<Formula> shortcut_step(const Formula& f, const std::string& p) {
    auto accept = [&](const Formula& g) -> std::optional<Formula> {
        if (is_valid(substitute(f, p, g))) return g;
        return std::nullopt;
    };
    const Polarity pol = polarity_of(f, p);
    if (pol != Polarity::Both) {
        if (auto g = accept(Formula::constant(pol != Polarity::NegativeOnly))) return g;
    }
    if (auto d = definiens(f, p)) {
        if (auto g = accept(*d)) return g;
    }
    if (auto d = definiens(negate(f), p)) {
        if (auto g = accept(simplify(negate(*d)))) return g;
    }
    return std::nullopt;
}

std::optional<std::vector<Formula>> shortcut_in_order(const Formula& f,
                                                      const std::vector<std::string>& ps,
                                                      const std::vector<std::size_t>& order) {
    std::vector<std::string> done;
    std::vector<Formula> gs;
    std::vector<Formula> by_index(ps.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::string& p = ps[order[k]];
        std::vector<std::string> later;
        for (std::size_t m = k + 1; m < order.size(); ++m) later.push_back(ps[order[m]]);
        const Formula fk = eliminate_all(later, substitute(f, done, gs));
        auto g = shortcut_step(fk, p);
        if (!g) return std::nullopt;
        done.push_back(p);
        gs.push_back(*g);
        by_index[order[k]] = *g;
    }
    return by_index;
}

}  // namespace

Solution solve_shortcut(const SolutionProblem& sp, bool reorder) {
    if (!exists_solution(sp)) throw NoSolution("the problem has no solution");
    const Formula f = prepared_formula(sp);
    std::vector<std::size_t> order(sp.unknowns.size());
    std::iota(order.begin(), order.end(), 0);
    const std::vector<std::size_t> given = order;
    do {
        if (auto gs = shortcut_in_order(f, sp.unknowns, order)) {
            Solution out;
            out.components = std::move(*gs);
            return out;
        }
        if (!reorder) break;
        std::next_permutation(order.begin(), order.end());
    } while (order != given);
    throw NotSolvable("no polarity or definability shortcut applies");
}

}  // namespace boolsolve
