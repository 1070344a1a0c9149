#pragma once

#include "boolsolve/errors.hpp"
#include "boolsolve/formula.hpp"
#include "boolsolve/semantics.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace boolsolve {

/// Witness G for eliminating `eliminated` from `body`: ∃p body ≡ body[p:=G].
struct WitnessResult {
    Formula witness;
    std::string eliminated;
    /// The formula the witness was computed for (possibly a clean variant).
    Formula body;
    /// body[p := witness].
    Formula residue;
};

/// Disjuncts of a formula with one witness per disjunct.
struct DisjunctWitnesses {
    std::vector<Formula> disjuncts;
    std::vector<Formula> witnesses;
};

class InvalidDisjunctWitness : public Error {
public:
    using Error::Error;
};

/// simplify(f[p:=⊤] ∨ f[p:=⊥]).
Formula shannon_eliminate(const std::string& p, const Formula& f);

/// ∃ps f without ps, eliminating the last atom first.
Formula eliminate_all(std::span<const std::string> ps, const Formula& f);

/// Replaces every quantified subformula by its expansion.
Formula expand_quantifiers(const Formula& f);

/// witness = simplify(f'[p:=⊤]) for a clean variant f' of f.
WitnessResult elim_witness(const std::string& p, const Formula& f);

/// Positive Ackermann form: f is (g -> p) & rest, p not free in g, and p
/// occurs in rest only negatively. Conjunctions are flattened, so the
/// implication may be any conjunct.
std::optional<WitnessResult> ackermann_rewrite(const std::string& p, const Formula& f);

/// ⋀ᵢ((⋀_{j<i} ¬Fⱼ[Gⱼ]) ∧ Fᵢ[Gᵢ] → Gᵢ). Throws InvalidDisjunctWitness if a
/// witness is not a witness for its disjunct or mentions p.
Formula ehw_combine(const std::string& p, const DisjunctWitnesses& dw);

/// Disjunctive decomposition of a quantifier-free f with per-disjunct
/// polarity witnesses. Minterm expansion is used while f has at most
/// `dnf_cutoff` free atoms besides p.
DisjunctWitnesses polarity_witnesses(const std::string& p, const Formula& f,
                                     std::size_t dnf_cutoff = 12);

/// Witness obtained by combining per-disjunct witnesses of a DNF of f.
/// Quantified input is expanded first.
WitnessResult elim_witness_dnf(const std::string& p, const Formula& f,
                               std::size_t dnf_cutoff = 12);

/// Canonical form of ∃ps f.
Formula weakest_precondition(std::span<const std::string> ps, const Formula& f);

/// Two valuations agreeing on `keep` on which f differs.
struct NotIndependent {
    Valuation with_true;
    Valuation with_false;
};

/// ∃(free(f)∖keep) f if it is equivalent to f.
std::variant<Formula, NotIndependent> project_vocabulary(const Formula& f, const AtomSet& keep);

}  // namespace boolsolve
