#pragma once

#include "boolsolve/formula.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace boolsolve {

/// Total assignment of truth values to a finite set of atoms.
using Valuation = std::map<std::string, bool>;

std::string to_string(const Valuation& v);

/// Semantics of a formula over an explicit, sorted atom basis.
///
/// Bit `i` is the value under the valuation encoded by `i`: the first basis
/// atom is the most significant bit, the last basis atom the least
/// significant. For basis [a, b] the order is ab = 00, 01, 10, 11.
class TruthTable {
public:
    TruthTable() : TruthTable(AtomSet{}) {}
    explicit TruthTable(const AtomSet& basis);
    /// `bits` lists values for index 0, 1, ... (leftmost is index 0).
    TruthTable(const AtomSet& basis, std::string_view bits);

    /// Table whose bit k is bit k of `code`; basis must have at most 6 atoms.
    static TruthTable from_code(const AtomSet& basis, std::uint64_t code);

    const std::vector<std::string>& basis() const { return basis_; }
    AtomSet basis_set() const { return {basis_.begin(), basis_.end()}; }
    std::size_t size() const { return std::size_t{1} << basis_.size(); }

    bool get(std::size_t index) const { return (words_[index >> 6] >> (index & 63)) & 1U; }
    void set(std::size_t index, bool value);

    bool all_true() const;
    bool all_false() const;
    /// Bits packed 64 per word; bits past size() are zero.
    const std::vector<std::uint64_t>& words() const { return words_; }
    /// Only meaningful for tables with at most 64 rows.
    std::uint64_t code() const { return words_.front(); }

    Valuation valuation_at(std::size_t index) const;
    std::size_t index_of(const Valuation& v) const;

    std::string bits() const;
    /// `basis: a b` newline `bits: 0010`.
    std::string to_text() const;

    friend bool operator==(const TruthTable& a, const TruthTable& b) {
        return a.basis_ == b.basis_ && a.words_ == b.words_;
    }

private:
    friend class BitEvaluator;
    std::vector<std::string> basis_;
    std::vector<std::uint64_t> words_;
};

/// Value of f under v; quantifiers expand as f[p:=⊤] or/and f[p:=⊥].
/// Throws UnboundAtom if a free atom of f has no value in v.
bool eval(const Formula& f, const Valuation& v);

/// Throws UnboundAtom unless free_atoms(f) is a subset of basis, and
/// TooLarge if the basis plus quantifier nesting exceeds 26 atoms.
TruthTable truth_table(const Formula& f, const AtomSet& basis);
TruthTable truth_table(const Formula& f);

bool is_valid(const Formula& f);
bool is_satisfiable(const Formula& f);
bool equivalent(const Formula& f, const Formula& g);
bool entails(const Formula& f, const Formula& g);

/// First valuation (in table order over free_atoms(f)) falsifying f.
std::optional<Valuation> falsifying_valuation(const Formula& f);

/// Full DNF of t: minterms in index order, literals in basis order.
/// All-false gives ⊥ and all-true gives ⊤.
Formula formula_from_table(const TruthTable& t);

/// Canonical form of f over free_atoms(f).
Formula canonical(const Formula& f);

/// Equivalence-preserving cleanup: constant propagation, double negation,
/// duplicate and complementary literals in flattened ∧/∨ chains, void
/// quantifiers. No minimality guarantee.
Formula simplify(const Formula& f);

/// ¬f with double negation and constants folded.
Formula negate(const Formula& f);

}  // namespace boolsolve
