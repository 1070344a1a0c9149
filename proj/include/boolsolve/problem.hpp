#pragma once

#include "boolsolve/formula.hpp"

#include <optional>
#include <string>
#include <vector>

namespace boolsolve {

/// A formula with ordered unknowns, optional parameters (one per unknown)
/// and optional atoms that solution components must not mention.
struct SolutionProblem {
    Formula formula;
    std::vector<std::string> unknowns;
    std::optional<std::vector<std::string>> parameters;
    std::optional<AtomSet> forbidden;

    /// Throws InvalidProblem on malformed or overlapping atom lists.
    void validate() const;

    /// Free atoms of the formula that are not unknowns.
    AtomSet base_atoms() const;
    AtomSet unknown_set() const { return {unknowns.begin(), unknowns.end()}; }
    AtomSet parameter_set() const;
};

enum class SolutionKind { Particular, Reproductive };

std::string_view to_string(SolutionKind kind);

struct Solution {
    std::vector<Formula> components;
    SolutionKind kind = SolutionKind::Particular;
    /// Intermediate formulas kept by some solvers, e.g. F_0 ... F_n of
    /// successive elimination.
    std::vector<Formula> trace;
};

/// Parameter names t1, t2, ... avoiding every atom of the problem.
std::vector<std::string> fresh_parameters(const SolutionProblem& sp);

/// Copy of sp with fresh parameters filled in if it has none.
SolutionProblem with_parameters(SolutionProblem sp);

}  // namespace boolsolve
