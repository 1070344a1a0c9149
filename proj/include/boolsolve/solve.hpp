#pragma once

#include "boolsolve/elimination.hpp"
#include "boolsolve/problem.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace boolsolve {

/// ∃unknowns F is valid.
bool exists_solution(const SolutionProblem& sp);

/// Lower end of the solution interval of a unary problem. A leading ∃-prefix
/// over other atoms is eliminated first. Throws NoSolution.
Formula solve1_interval(const Formula& f, const std::string& p);

/// (¬F[⊥] ∧ ¬t) ∨ (F[⊤] ∧ t), with the same prefix handling. Throws NoSolution.
Formula solve1_reproductive(const Formula& f, const std::string& p, const std::string& t);

enum class SchroederVariant { AorBt, BandAt, AtBnt };

/// Reproductive solution of ((A -> p) & (p -> B))[p] with parameter t:
/// A | (B & t), B & (A | t) or (A & ~t) | (B & t). Throws NotSolvable unless A ⊨ B.
Formula schroeder_interpolant(const Formula& a, const Formula& b, const std::string& t,
                              SchroederVariant variant);

enum class Strategy { Interval, Reproductive };

/// Left-to-right unary solving of ∃p_{i+1}...∃p_n F[G_1 ... G_{i-1} p_i ... p_n].
/// Reproductive needs parameters (MissingParameters). Throws NoSolution.
Solution solve_on_second_order(const SolutionProblem& sp, Strategy strategy);

/// Successive elimination followed by back substitution; the trace holds
/// F_0 ... F_n. Throws NoSolution or MissingParameters.
Solution solve_succ_elim(const SolutionProblem& sp);

enum class WitnessFn { FTrue, DnfEhw, AckermannThenFTrue };

/// Right-to-left elimination witnesses with re-substitution into the
/// witnesses already computed. Throws NoSolution.
Solution solve_by_witnesses(const SolutionProblem& sp, WitnessFn fn);

/// R_i = (G_i & ~F[t]) | (t_i & F[t]) for a particular solution G.
/// Throws NotAParticularSolution or MissingParameters.
Solution rigorous_solution(const SolutionProblem& sp, const Solution& particular);

/// Substitutes ts for the parameters of a reproductive solution.
/// Throws NotSubstitutible, or InternalCheckFailed if the result is not a solution.
Solution instantiate(const SolutionProblem& sp, const Solution& reproductive,
                     std::span<const Formula> ts);

/// ⊤ for unknowns occurring only positively or not at all, ⊥ for negative
/// ones; nullopt if some unknown has both polarities or the result is invalid.
std::optional<Solution> polarity_shortcut(const SolutionProblem& sp);

/// G with f ⊨ p <-> G, if p is definable in f.
std::optional<Formula> definiens(const Formula& f, const std::string& p);

/// Successive unary solving using only the polarity and definability
/// shortcuts. With `reorder`, other unknown orders are tried before giving
/// up. Throws NoSolution, or NotSolvable if no shortcut applies.
Solution solve_shortcut(const SolutionProblem& sp, bool reorder);

/// Solution whose components avoid sp.forbidden, by solving (∀b F)[p].
/// Uses successive elimination when sp has parameters. Throws NoSolution.
Solution solve_restricted(const SolutionProblem& sp);

/// Per-component restrictions: component i must avoid forbidden[i].
/// Throws NoSolution, MissingParameters or ProjectionFailed.
Solution solve_restricted_two_stage(const SolutionProblem& sp,
                                    std::span<const AtomSet> forbidden);

/// F[components] after a substitutibility check; nullopt if not substitutible.
std::optional<Formula> apply_solution(const SolutionProblem& sp,
                                      std::span<const Formula> components);

/// Substitutible and F[components] valid.
bool is_particular_solution(const SolutionProblem& sp, std::span<const Formula> components);

}  // namespace boolsolve
