#include "boolsolve/semantics.hpp"

#include "boolsolve/errors.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>
#include <unordered_set>

namespace boolsolve {

namespace {

constexpr unsigned kMaxVars = 26;

constexpr std::array<std::uint64_t, 6> kVarMask = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

std::size_t words_for(unsigned vars) { return vars <= 6 ? 1 : std::size_t{1} << (vars - 6); }

std::uint64_t tail_mask(unsigned vars) {
    return vars >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (std::size_t{1} << vars)) - 1);
}

using Bits = std::vector<std::uint64_t>;

std::size_t quantifier_depth(const Formula& f) {
    switch (f.kind()) {
        case Kind::Top:
        case Kind::Bot:
        case Kind::Atom:
            return 0;
        case Kind::Not:
            return quantifier_depth(f.operand());
        case Kind::Exists:
        case Kind::Forall:
            return 1 + quantifier_depth(f.body());
        default:
            return std::max(quantifier_depth(f.lhs()), quantifier_depth(f.rhs()));
    }
}

}  // namespace

// Evaluates a formula on all valuations at once. Basis atom i of n sits in
// slot n-1-i; quantified atoms take slots n, n+1, ... by nesting depth.
class BitEvaluator {
public:
    BitEvaluator(const std::vector<std::string>& basis, unsigned extra_slots)
        : vars_(static_cast<unsigned>(basis.size()) + extra_slots),
          nwords_(words_for(vars_)),
          next_slot_(static_cast<unsigned>(basis.size())),
          memoize_(nwords_ <= 64) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            env_.emplace_back(basis[i], static_cast<unsigned>(basis.size() - 1 - i));
        }
    }

    static TruthTable tabulate(const Formula& f, const AtomSet& basis);

private:
    struct Key {
        const void* node;
        int scope;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            return std::hash<const void*>{}(k.node) ^ (static_cast<std::size_t>(k.scope) << 1);
        }
    };

    Bits constant(bool value) const {
        Bits out(nwords_, value ? ~std::uint64_t{0} : 0);
        out.back() &= tail_mask(vars_);
        return out;
    }

    Bits variable(unsigned slot) const {
        Bits out(nwords_);
        if (slot < 6) {
            std::fill(out.begin(), out.end(), kVarMask[slot]);
        } else {
            for (std::size_t w = 0; w < nwords_; ++w) {
                out[w] = ((w >> (slot - 6)) & 1U) ? ~std::uint64_t{0} : 0;
            }
        }
        out.back() &= tail_mask(vars_);
        return out;
    }

    // Replaces t by the join (∃) or meet (∀) of its two cofactors on `slot`.
    void quantify(Bits& t, unsigned slot, bool existential) const {
        if (slot < 6) {
            const unsigned shift = 1U << slot;
            const std::uint64_t m = kVarMask[slot];
            for (auto& w : t) {
                const std::uint64_t hi = (w & m) >> shift;  // cofactor 1, aligned low
                const std::uint64_t lo = w & ~m;            // cofactor 0
                const std::uint64_t r = existential ? (hi | lo) : (hi & lo);
                w = r | (r << shift);
            }
        } else {
            const std::size_t stride = std::size_t{1} << (slot - 6);
            for (std::size_t w = 0; w < nwords_; ++w) {
                if (w & stride) continue;
                const std::uint64_t r = existential ? (t[w] | t[w + stride]) : (t[w] & t[w + stride]);
                t[w] = r;
                t[w + stride] = r;
            }
        }
        t.back() &= tail_mask(vars_);
    }

    Bits eval(const Formula& f) {
        switch (f.kind()) {
            case Kind::Top:
                return constant(true);
            case Kind::Bot:
                return constant(false);
            case Kind::Atom: {
                for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
                    if (it->first == f.name()) return variable(it->second);
                }
                throw UnboundAtom(f.name());
            }
            default:
                break;
        }
        const bool use_memo = memoize_ && f.size() >= 4;
        if (use_memo) {
            auto it = memo_.find(Key{f.identity(), scope_});
            if (it != memo_.end()) return it->second;
        }
        Bits out = compound(f);
        if (use_memo) memo_.emplace(Key{f.identity(), scope_}, out);
        return out;
    }

    Bits compound(const Formula& f) {
        const std::uint64_t tail = tail_mask(vars_);
        switch (f.kind()) {
            case Kind::Not: {
                Bits t = eval(f.operand());
                for (auto& w : t) w = ~w;
                t.back() &= tail;
                return t;
            }
            case Kind::Exists:
            case Kind::Forall: {
                const unsigned slot = next_slot_++;
                env_.emplace_back(f.name(), slot);
                const int saved_scope = scope_;
                scope_ = ++scope_counter_;
                Bits t = eval(f.body());
                scope_ = saved_scope;
                env_.pop_back();
                --next_slot_;
                quantify(t, slot, f.kind() == Kind::Exists);
                return t;
            }
            default: {
                Bits a = eval(f.lhs());
                const Bits b = eval(f.rhs());
                for (std::size_t w = 0; w < nwords_; ++w) {
                    switch (f.kind()) {
                        case Kind::And:
                            a[w] &= b[w];
                            break;
                        case Kind::Or:
                            a[w] |= b[w];
                            break;
                        case Kind::Implies:
                            a[w] = ~a[w] | b[w];
                            break;
                        default:
                            a[w] = ~(a[w] ^ b[w]);
                            break;
                    }
                }
                a.back() &= tail;
                return a;
            }
        }
    }

    unsigned vars_;
    std::size_t nwords_;
    unsigned next_slot_;
    bool memoize_;
    int scope_ = 0;
    int scope_counter_ = 0;
    std::vector<std::pair<std::string, unsigned>> env_;
    std::unordered_map<Key, Bits, KeyHash> memo_;
};

std::string to_string(const Valuation& v) {
    std::string out;
    for (const auto& [name, value] : v) {
        if (!out.empty()) out += ' ';
        out += name;
        out += '=';
        out += value ? '1' : '0';
    }
    return out;
}

TruthTable::TruthTable(const AtomSet& basis)
    : basis_(basis.begin(), basis.end()),
      words_(basis.size() > kMaxVars ? 0 : (size() + 63) / 64, 0) {
    if (basis_.size() > kMaxVars) throw TooLarge("truth table basis exceeds 26 atoms");
}

TruthTable::TruthTable(const AtomSet& basis, std::string_view bits) : TruthTable(basis) {
    if (bits.size() != size()) {
        throw Error("truth table needs " + std::to_string(size()) + " bits, got " +
                    std::to_string(bits.size()));
    }
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') throw Error("truth table bits must be 0 or 1");
        set(i, bits[i] == '1');
    }
}

TruthTable TruthTable::from_code(const AtomSet& basis, std::uint64_t code) {
    if (basis.size() > 6) throw TooLarge("function code needs a basis of at most 6 atoms");
    TruthTable t(basis);
    const std::size_t rows = t.size();
    t.words_[0] = rows == 64 ? code : (code & ((std::uint64_t{1} << rows) - 1));
    return t;
}

void TruthTable::set(std::size_t index, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (index & 63);
    if (value) {
        words_[index >> 6] |= bit;
    } else {
        words_[index >> 6] &= ~bit;
    }
}

bool TruthTable::all_true() const {
    const std::size_t rows = size();
    for (std::size_t w = 0; w < words_.size(); ++w) {
        const std::size_t remaining = rows - w * 64;
        const std::uint64_t full =
            remaining >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << remaining) - 1);
        if (words_[w] != full) return false;
    }
    return true;
}

bool TruthTable::all_false() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Valuation TruthTable::valuation_at(std::size_t index) const {
    Valuation v;
    const std::size_t n = basis_.size();
    for (std::size_t i = 0; i < n; ++i) v[basis_[i]] = ((index >> (n - 1 - i)) & 1U) != 0;
    return v;
}

std::size_t TruthTable::index_of(const Valuation& v) const {
    std::size_t index = 0;
    for (const auto& atom : basis_) {
        auto it = v.find(atom);
        if (it == v.end()) throw UnboundAtom(atom);
        index = (index << 1) | (it->second ? 1U : 0U);
    }
    return index;
}

std::string TruthTable::bits() const {
    std::string out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out += get(i) ? '1' : '0';
    return out;
}

std::string TruthTable::to_text() const {
    std::string out = "basis:";
    for (const auto& atom : basis_) {
        out += ' ';
        out += atom;
    }
    out += "\nbits: ";
    out += bits();
    return out;
}

namespace {

bool eval_rec(const Formula& f, Valuation& v) {
    switch (f.kind()) {
        case Kind::Top:
            return true;
        case Kind::Bot:
            return false;
        case Kind::Atom: {
            auto it = v.find(f.name());
            if (it == v.end()) throw UnboundAtom(f.name());
            return it->second;
        }
        case Kind::Not:
            return !eval_rec(f.operand(), v);
        case Kind::And:
            return eval_rec(f.lhs(), v) && eval_rec(f.rhs(), v);
        case Kind::Or:
            return eval_rec(f.lhs(), v) || eval_rec(f.rhs(), v);
        case Kind::Implies:
            return !eval_rec(f.lhs(), v) || eval_rec(f.rhs(), v);
        case Kind::Iff:
            return eval_rec(f.lhs(), v) == eval_rec(f.rhs(), v);
        case Kind::Exists:
        case Kind::Forall: {
            auto it = v.find(f.name());
            const std::optional<bool> saved =
                it == v.end() ? std::nullopt : std::optional<bool>(it->second);
            v[f.name()] = true;
            const bool with_true = eval_rec(f.body(), v);
            v[f.name()] = false;
            const bool with_false = eval_rec(f.body(), v);
            if (saved) {
                v[f.name()] = *saved;
            } else {
                v.erase(f.name());
            }
            return f.kind() == Kind::Exists ? (with_true || with_false)
                                            : (with_true && with_false);
        }
    }
    return false;
}

}  // namespace

bool eval(const Formula& f, const Valuation& v) {
    Valuation scratch = v;
    return eval_rec(f, scratch);
}

TruthTable BitEvaluator::tabulate(const Formula& f, const AtomSet& basis) {
    TruthTable out(basis);
    for (const auto& atom : free_atoms(f)) {
        if (!basis.contains(atom)) throw UnboundAtom(atom);
    }
    const std::size_t extra = quantifier_depth(f);
    if (basis.size() + extra > kMaxVars) {
        throw TooLarge("evaluation needs " + std::to_string(basis.size() + extra) +
                       " atoms, limit is 26");
    }
    BitEvaluator evaluator(out.basis_, static_cast<unsigned>(extra));
    const Bits bits = evaluator.eval(f);
    // After quantification the high slots no longer matter; the rows where
    // they are all zero are the leading ones.
    const std::size_t rows = out.size();
    for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] = bits[w];
    if (rows < 64) out.words_[0] &= (std::uint64_t{1} << rows) - 1;
    return out;
}

TruthTable truth_table(const Formula& f, const AtomSet& basis) {
    return BitEvaluator::tabulate(f, basis);
}

TruthTable truth_table(const Formula& f) { return truth_table(f, free_atoms(f)); }

bool is_valid(const Formula& f) { return truth_table(f).all_true(); }

bool is_satisfiable(const Formula& f) { return !truth_table(f).all_false(); }

bool equivalent(const Formula& f, const Formula& g) {
    if (f == g) return true;
    return is_valid(Formula::iff(f, g));
}

bool entails(const Formula& f, const Formula& g) { return is_valid(Formula::implies(f, g)); }

std::optional<Valuation> falsifying_valuation(const Formula& f) {
    const TruthTable t = truth_table(f);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!t.get(i)) return t.valuation_at(i);
    }
    return std::nullopt;
}

Formula formula_from_table(const TruthTable& t) {
    if (t.all_true()) return Formula::top();
    if (t.all_false()) return Formula::bot();
    const auto& basis = t.basis();
    const std::size_t n = basis.size();
    std::vector<Formula> atoms = atoms_of(basis);
    std::vector<Formula> negated;
    negated.reserve(n);
    for (const auto& a : atoms) negated.push_back(Formula::negation(a));
    std::vector<Formula> minterms;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!t.get(i)) continue;
        std::vector<Formula> literals;
        literals.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            const bool value = ((i >> (n - 1 - k)) & 1U) != 0;
            literals.push_back(value ? atoms[k] : negated[k]);
        }
        minterms.push_back(Formula::conj_all(literals));
    }
    return Formula::disj_all(minterms);
}

Formula canonical(const Formula& f) { return formula_from_table(truth_table(f)); }

Formula negate(const Formula& f) {
    switch (f.kind()) {
        case Kind::Top:
            return Formula::bot();
        case Kind::Bot:
            return Formula::top();
        case Kind::Not:
            return f.operand();
        default:
            return Formula::negation(f);
    }
}

namespace {

bool complementary(const Formula& a, const Formula& b) {
    return (a.kind() == Kind::Not && a.operand() == b) ||
           (b.kind() == Kind::Not && b.operand() == a);
}

void flatten(const Formula& f, Kind kind, std::vector<Formula>& out) {
    if (f.kind() == kind) {
        flatten(f.lhs(), kind, out);
        flatten(f.rhs(), kind, out);
    } else {
        out.push_back(f);
    }
}

// Simplified n-ary ∧ (conjunction=true) or ∨ of already simplified operands.
Formula merge_chain(const Formula& lhs, const Formula& rhs, bool conjunction) {
    const Kind kind = conjunction ? Kind::And : Kind::Or;
    const Kind absorbing = conjunction ? Kind::Bot : Kind::Top;
    const Kind neutral = conjunction ? Kind::Top : Kind::Bot;
    std::vector<Formula> items;
    flatten(lhs, kind, items);
    flatten(rhs, kind, items);
    std::vector<Formula> kept;
    std::unordered_set<Formula, FormulaHash> seen;
    for (const auto& item : items) {
        if (item.kind() == absorbing) return item;
        if (item.kind() == neutral) continue;
        if (!seen.insert(item).second) continue;
        kept.push_back(item);
    }
    for (const auto& item : kept) {
        const Formula complement = item.kind() == Kind::Not ? item.operand() : Formula::negation(item);
        if (seen.contains(complement)) return Formula::constant(!conjunction);
    }
    if (kept.empty()) return Formula::constant(conjunction);
    return conjunction ? Formula::conj_all(kept) : Formula::disj_all(kept);
}

Formula simplify_rec(const Formula& f) {
    switch (f.kind()) {
        case Kind::Top:
        case Kind::Bot:
        case Kind::Atom:
            return f;
        case Kind::Not:
            return negate(simplify_rec(f.operand()));
        case Kind::And:
            return merge_chain(simplify_rec(f.lhs()), simplify_rec(f.rhs()), true);
        case Kind::Or:
            return merge_chain(simplify_rec(f.lhs()), simplify_rec(f.rhs()), false);
        case Kind::Implies: {
            Formula a = simplify_rec(f.lhs());
            Formula b = simplify_rec(f.rhs());
            if (a.kind() == Kind::Bot || b.kind() == Kind::Top || a == b) return Formula::top();
            if (a.kind() == Kind::Top) return b;
            if (b.kind() == Kind::Bot) return negate(a);
            if (complementary(a, b)) return b;
            return Formula::implies(std::move(a), std::move(b));
        }
        case Kind::Iff: {
            Formula a = simplify_rec(f.lhs());
            Formula b = simplify_rec(f.rhs());
            if (a == b) return Formula::top();
            if (complementary(a, b)) return Formula::bot();
            if (a.kind() == Kind::Top) return b;
            if (b.kind() == Kind::Top) return a;
            if (a.kind() == Kind::Bot) return negate(b);
            if (b.kind() == Kind::Bot) return negate(a);
            return Formula::iff(std::move(a), std::move(b));
        }
        case Kind::Exists:
        case Kind::Forall: {
            Formula body = simplify_rec(f.body());
            if (!free_atoms(body).contains(f.name())) return body;
            return f.kind() == Kind::Exists ? Formula::exists(f.name(), std::move(body))
                                            : Formula::forall(f.name(), std::move(body));
        }
    }
    return f;
}

}  // namespace

Formula simplify(const Formula& f) { return simplify_rec(f); }

}  // namespace boolsolve
