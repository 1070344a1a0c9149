#pragma once

#include "boolsolve/problem.hpp"
#include "boolsolve/semantics.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace boolsolve {

/// All Boolean functions over a basis of at most 3 atoms, in code order:
/// function k has truth-table bit i equal to bit i of k.
class FunctionSpace {
public:
    explicit FunctionSpace(AtomSet basis);

    const AtomSet& basis() const { return basis_; }
    std::uint64_t size() const { return size_; }
    TruthTable table(std::uint64_t code) const { return TruthTable::from_code(basis_, code); }
    Formula formula(std::uint64_t code) const { return formula_from_table(table(code)); }

private:
    AtomSet basis_;
    std::uint64_t size_;
};

/// Cost guard of the oracle: basis of at most 3 atoms, at most 2 unknowns.
struct OracleLimits {
    std::size_t max_basis = 3;
    std::size_t max_unknowns = 2;
};

struct CheckFailure {
    std::string subject;
    std::string reason;
    std::optional<Valuation> valuation;
};

struct CheckReport {
    bool verdict = true;
    /// First failures only; `failure_count` counts all of them.
    std::vector<CheckFailure> failures;
    std::size_t failure_count = 0;

    void fail(std::string subject, std::string reason, std::optional<Valuation> v = std::nullopt);
};

/// Solution tuples as function codes over `basis`, in enumeration order.
std::vector<std::vector<std::uint64_t>> enumerate_solution_codes(
    const SolutionProblem& sp, const AtomSet& basis, const OracleLimits& limits = {});

/// Solution tuples as canonical formulas. Throws TooLarge past the limits
/// and InvalidProblem if the basis contains an unknown.
std::vector<Solution> enumerate_solutions(const SolutionProblem& sp, const AtomSet& basis,
                                          const OracleLimits& limits = {});

CheckReport check_particular(const SolutionProblem& sp, std::span<const Formula> sol);

/// (a) sol[T] solves sp for every basis tuple T; (b) sol[H] ≡ H for every
/// enumerated solution H. Needs parameters.
CheckReport check_reproductive(const SolutionProblem& sp, std::span<const Formula> sol,
                               const AtomSet& basis, const OracleLimits& limits = {});

/// Clause (a) above, and every enumerated solution H equals sol[T] for some T.
CheckReport check_general(const SolutionProblem& sp, std::span<const Formula> sol,
                          const AtomSet& basis, const OracleLimits& limits = {});

}  // namespace boolsolve
