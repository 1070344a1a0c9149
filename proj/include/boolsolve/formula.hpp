#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boolsolve {

/// Ordered, duplicate-free set of atom names (ascending lexicographic).
using AtomSet = std::set<std::string>;

enum class Kind : std::uint8_t {
    Top,
    Bot,
    Atom,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Exists,
    Forall,
};

/// Immutable propositional formula with quantification upon nullary atoms.
///
/// A Formula is a cheap handle to a shared, immutable node. Equality is
/// structural; identical subtrees may be shared between formulas.
class Formula {
public:
    struct Node;

    /// Defaults to ⊤.
    Formula();

    static Formula top();
    static Formula bot();
    static Formula constant(bool value);
    static Formula atom(std::string name);
    static Formula negation(Formula operand);
    static Formula conj(Formula lhs, Formula rhs);
    static Formula disj(Formula lhs, Formula rhs);
    static Formula implies(Formula lhs, Formula rhs);
    static Formula iff(Formula lhs, Formula rhs);
    static Formula exists(std::string name, Formula body);
    static Formula forall(std::string name, Formula body);

    /// Left-nested conjunction; empty input gives ⊤.
    static Formula conj_all(std::span<const Formula> items);
    /// Left-nested disjunction; empty input gives ⊥.
    static Formula disj_all(std::span<const Formula> items);
    /// ∃names[0] ... ∃names[n-1] body.
    static Formula exists_all(std::span<const std::string> names, Formula body);
    static Formula forall_all(std::span<const std::string> names, Formula body);

    Kind kind() const;
    bool is_binary() const;
    bool is_quantifier() const;
    bool is_constant() const { return kind() == Kind::Top || kind() == Kind::Bot; }

    /// Atom name or bound name of a quantifier.
    const std::string& name() const;
    /// Operand of ¬, left operand of binary nodes, body of quantifiers.
    const Formula& lhs() const;
    const Formula& rhs() const;
    const Formula& operand() const { return lhs(); }
    const Formula& body() const { return lhs(); }

    std::size_t hash() const;
    /// Number of nodes of the tree (shared subtrees counted per occurrence).
    std::size_t size() const;
    std::size_t depth() const;

    const Node* identity() const { return node_.get(); }

    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct NullTag {};
    explicit Formula(NullTag) {}
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Formula make(Kind kind, std::string name, Formula lhs, Formula rhs);

    std::shared_ptr<const Node> node_;
};

struct Formula::Node {
    Kind kind;
    std::string name;
    std::array<Formula, 2> children;
    std::size_t hash;
    std::size_t size;
    std::size_t depth;
};

inline Kind Formula::kind() const { return node_->kind; }
inline const std::string& Formula::name() const { return node_->name; }
inline const Formula& Formula::lhs() const { return node_->children[0]; }
inline const Formula& Formula::rhs() const { return node_->children[1]; }
inline std::size_t Formula::hash() const { return node_->hash; }
inline std::size_t Formula::size() const { return node_->size; }
inline std::size_t Formula::depth() const { return node_->depth; }

inline bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

enum class Polarity : std::uint8_t { Absent, PositiveOnly, NegativeOnly, Both };

std::string_view to_string(Polarity polarity);

// Lexical classes of the formula language.
bool is_identifier(std::string_view text);
bool is_reserved(std::string_view text);

/// Parses a formula; throws ParseError with line/column on malformed input.
Formula parse(std::string_view text);

/// Canonical printer with minimal parentheses; parse(print(f)) == f.
std::string print(const Formula& f);

AtomSet free_atoms(const Formula& f);
/// Names bound by some quantifier occurrence in f.
AtomSet bound_atoms(const Formula& f);
/// All atom names occurring in f, free or bound, including binder names.
AtomSet all_atoms(const Formula& f);

bool is_quantifier_free(const Formula& f);

Polarity polarity_of(const Formula& f, std::string_view atom);

/// Substitutibility of gs for ps in f, nullary instance of the
/// capture/occurrence conditions: (1) no free occurrence of ps[i] lies in the
/// scope of a quantifier binding a member of free(gs[i]); (2) no member of ps
/// occurs free in gs[i].
bool is_substitutible(std::span<const Formula> gs, std::span<const std::string> ps,
                      const Formula& f);

/// Simultaneous replacement of the free occurrences of ps[i] by gs[i].
///
/// Pairs mapping an atom to itself are no-ops and exempt from the
/// substitutibility check. Throws NotSubstitutible otherwise.
Formula substitute(const Formula& f, std::span<const std::string> ps,
                   std::span<const Formula> gs);
Formula substitute(const Formula& f, const std::string& p, const Formula& g);

/// Replacement without the substitutibility check.
Formula substitute_unchecked(const Formula& f, std::span<const std::string> ps,
                             std::span<const Formula> gs);

/// Renames bound atoms so that no free atom is bound and every binder is
/// distinct. The first binder of a name that is not free keeps its name;
/// others get `name_k` with the smallest k not used anywhere in f.
Formula clean_variant(const Formula& f);
/// As above; binders additionally avoid the names in `avoid`.
Formula clean_variant(const Formula& f, const AtomSet& avoid);
bool is_clean(const Formula& f);

/// `base` if it is not in `taken`, else `base_k` with the smallest such k.
std::string fresh_name(const std::string& base, const AtomSet& taken);

std::vector<Formula> atoms_of(std::span<const std::string> names);

}  // namespace boolsolve
