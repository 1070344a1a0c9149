#include "boolsolve/problem.hpp"

#include "boolsolve/errors.hpp"

namespace boolsolve {

namespace {

void check_names(const std::vector<std::string>& names, const char* what) {
    AtomSet seen;
    for (const auto& n : names) {
        if (!is_identifier(n)) throw InvalidProblem(std::string(what) + " '" + n + "' is not an identifier");
        if (!seen.insert(n).second) throw InvalidProblem(std::string(what) + " '" + n + "' listed twice");
    }
}

}  // namespace

void SolutionProblem::validate() const {
    check_names(unknowns, "unknown");
    const AtomSet free = free_atoms(formula);
    if (parameters) {
        check_names(*parameters, "parameter");
        if (parameters->size() != unknowns.size()) {
            throw InvalidProblem("expected " + std::to_string(unknowns.size()) +
                                 " parameters, got " + std::to_string(parameters->size()));
        }
        const AtomSet us = unknown_set();
        for (const auto& t : *parameters) {
            if (free.contains(t)) throw InvalidProblem("parameter '" + t + "' occurs in the formula");
            if (us.contains(t)) throw InvalidProblem("parameter '" + t + "' is also an unknown");
        }
    }
    if (forbidden) {
        for (const auto& b : *forbidden) {
            if (!is_identifier(b)) throw InvalidProblem("forbidden '" + b + "' is not an identifier");
        }
        for (const auto& p : unknowns) {
            if (forbidden->contains(p)) throw InvalidProblem("unknown '" + p + "' is forbidden");
        }
    }
}

AtomSet SolutionProblem::base_atoms() const {
    AtomSet out = free_atoms(formula);
    for (const auto& p : unknowns) out.erase(p);
    return out;
}

AtomSet SolutionProblem::parameter_set() const {
    if (!parameters) return {};
    return {parameters->begin(), parameters->end()};
}

std::string_view to_string(SolutionKind kind) {
    return kind == SolutionKind::Particular ? "particular" : "reproductive";
}

std::vector<std::string> fresh_parameters(const SolutionProblem& sp) {
    AtomSet taken = all_atoms(sp.formula);
    taken.insert(sp.unknowns.begin(), sp.unknowns.end());
    if (sp.forbidden) taken.insert(sp.forbidden->begin(), sp.forbidden->end());
    std::vector<std::string> out;
    std::size_t k = 1;
    while (out.size() < sp.unknowns.size()) {
        std::string name = "t" + std::to_string(k++);
        if (!taken.contains(name)) out.push_back(std::move(name));
    }
    return out;
}

SolutionProblem with_parameters(SolutionProblem sp) {
    if (!sp.parameters) sp.parameters = fresh_parameters(sp);
    return sp;
}

}  // namespace boolsolve
