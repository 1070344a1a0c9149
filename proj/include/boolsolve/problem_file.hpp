#pragma once

#include "boolsolve/problem.hpp"

#include <map>
#include <string>
#include <string_view>

namespace boolsolve {

/// Line-oriented problem description:
///
///     # comment
///     unknowns: p1 p2
///     parameters: t1 t2
///     forbid: b
///     forbid(p1): b
///     formula: (a -> b) ->
///       (p1 -> p2)
///
/// Indented lines continue the previous value.
struct ProblemFile {
    SolutionProblem problem;
    /// Atoms that one component must avoid, keyed by unknown.
    std::map<std::string, AtomSet> component_forbid;
};

/// Throws InvalidProblem with a line number on malformed input.
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::string& path);

/// Whitespace- or comma-separated identifiers.
std::vector<std::string> parse_atom_list(std::string_view text);

}  // namespace boolsolve
