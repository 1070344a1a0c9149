#include "boolsolve/elimination.hpp"

#include <algorithm>

namespace boolsolve {

namespace {

Formula with_constant(const Formula& f, const std::string& p, bool value) {
    return substitute(f, p, Formula::constant(value));
}

void conjuncts(const Formula& f, std::vector<Formula>& out) {
    if (f.kind() == Kind::And) {
        conjuncts(f.lhs(), out);
        conjuncts(f.rhs(), out);
    } else {
        out.push_back(f);
    }
}

// Negation normal form over ∧, ∨ and literals; input is quantifier-free.
Formula nnf(const Formula& f, bool positive) {
    switch (f.kind()) {
        case Kind::Top:
        case Kind::Bot:
            return positive == (f.kind() == Kind::Top) ? Formula::top() : Formula::bot();
        case Kind::Atom:
            return positive ? f : Formula::negation(f);
        case Kind::Not:
            return nnf(f.operand(), !positive);
        case Kind::And:
        case Kind::Or: {
            Formula l = nnf(f.lhs(), positive);
            Formula r = nnf(f.rhs(), positive);
            return (f.kind() == Kind::And) == positive ? Formula::conj(l, r) : Formula::disj(l, r);
        }
        case Kind::Implies: {
            Formula l = nnf(f.lhs(), !positive);
            Formula r = nnf(f.rhs(), positive);
            return positive ? Formula::disj(l, r) : Formula::conj(l, r);
        }
        case Kind::Iff: {
            const Formula a = f.lhs();
            const Formula b = f.rhs();
            if (positive) {
                return Formula::disj(Formula::conj(nnf(a, true), nnf(b, true)),
                                     Formula::conj(nnf(a, false), nnf(b, false)));
            }
            return Formula::disj(Formula::conj(nnf(a, true), nnf(b, false)),
                                 Formula::conj(nnf(a, false), nnf(b, true)));
        }
        default:
            throw Error("quantified formula has no negation normal form here");
    }
}

using Cube = std::vector<Formula>;

std::vector<Cube> distribute(const Formula& f) {
    switch (f.kind()) {
        case Kind::Top:
            return {Cube{}};
        case Kind::Bot:
            return {};
        case Kind::Or: {
            auto l = distribute(f.lhs());
            auto r = distribute(f.rhs());
            l.insert(l.end(), r.begin(), r.end());
            return l;
        }
        case Kind::And: {
            const auto l = distribute(f.lhs());
            const auto r = distribute(f.rhs());
            std::vector<Cube> out;
            for (const auto& x : l) {
                for (const auto& y : r) {
                    Cube c = x;
                    c.insert(c.end(), y.begin(), y.end());
                    out.push_back(std::move(c));
                }
            }
            return out;
        }
        default:
            return {Cube{f}};
    }
}

Formula witness_for_cube(const Cube& cube, const std::string& p) {
    bool neg = false;
    for (const auto& lit : cube) {
        if (lit.kind() == Kind::Not && lit.operand().kind() == Kind::Atom &&
            lit.operand().name() == p) {
            neg = true;
        }
    }
    return Formula::constant(!neg);
}

}  // namespace

Formula shannon_eliminate(const std::string& p, const Formula& f) {
    return simplify(Formula::disj(with_constant(f, p, true), with_constant(f, p, false)));
}

Formula eliminate_all(std::span<const std::string> ps, const Formula& f) {
    Formula out = f;
    for (auto it = ps.rbegin(); it != ps.rend(); ++it) out = shannon_eliminate(*it, out);
    return out;
}

Formula expand_quantifiers(const Formula& f) {
    switch (f.kind()) {
        case Kind::Top:
        case Kind::Bot:
        case Kind::Atom:
            return f;
        case Kind::Not:
            return Formula::negation(expand_quantifiers(f.operand()));
        case Kind::Exists:
        case Kind::Forall: {
            const Formula body = expand_quantifiers(f.body());
            const Formula t = with_constant(body, f.name(), true);
            const Formula b = with_constant(body, f.name(), false);
            return simplify(f.kind() == Kind::Exists ? Formula::disj(t, b) : Formula::conj(t, b));
        }
        case Kind::And:
            return Formula::conj(expand_quantifiers(f.lhs()), expand_quantifiers(f.rhs()));
        case Kind::Or:
            return Formula::disj(expand_quantifiers(f.lhs()), expand_quantifiers(f.rhs()));
        case Kind::Implies:
            return Formula::implies(expand_quantifiers(f.lhs()), expand_quantifiers(f.rhs()));
        case Kind::Iff:
            return Formula::iff(expand_quantifiers(f.lhs()), expand_quantifiers(f.rhs()));
    }
    return f;
}

WitnessResult elim_witness(const std::string& p, const Formula& f) {
    const Formula body = clean_variant(f);
    Formula witness = simplify(with_constant(body, p, true));
    Formula residue = substitute(body, p, witness);
    return {std::move(witness), p, body, std::move(residue)};
}

std::optional<WitnessResult> ackermann_rewrite(const std::string& p, const Formula& f) {
    std::vector<Formula> parts;
    conjuncts(f, parts);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Formula& c = parts[i];
        if (c.kind() != Kind::Implies || c.rhs().kind() != Kind::Atom || c.rhs().name() != p) {
            continue;
        }
        const Formula& g = c.lhs();
        if (free_atoms(g).contains(p)) continue;
        std::vector<Formula> others;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j != i) others.push_back(parts[j]);
        }
        const Formula rest = Formula::conj_all(others);
        const Polarity pol = polarity_of(rest, p);
        if (pol != Polarity::NegativeOnly && pol != Polarity::Absent) continue;
        const Formula gs[] = {g};
        const std::string ps[] = {p};
        if (!is_substitutible(gs, ps, rest)) continue;
        return WitnessResult{g, p, f, substitute(rest, p, g)};
    }
    return std::nullopt;
}

Formula ehw_combine(const std::string& p, const DisjunctWitnesses& dw) {
    if (dw.disjuncts.size() != dw.witnesses.size()) {
        throw InvalidDisjunctWitness("disjunct and witness counts differ");
    }
    std::vector<Formula> applied;
    for (std::size_t i = 0; i < dw.disjuncts.size(); ++i) {
        const Formula& g = dw.witnesses[i];
        if (free_atoms(g).contains(p)) {
            throw InvalidDisjunctWitness("witness " + std::to_string(i + 1) + " mentions '" + p +
                                         "'");
        }
        const Formula gs[] = {g};
        const std::string ps[] = {p};
        if (!is_substitutible(gs, ps, dw.disjuncts[i])) {
            throw InvalidDisjunctWitness("witness " + std::to_string(i + 1) +
                                         " is not substitutible");
        }
        Formula fg = substitute(dw.disjuncts[i], p, g);
        if (!equivalent(Formula::exists(p, dw.disjuncts[i]), fg)) {
            throw InvalidDisjunctWitness("witness " + std::to_string(i + 1) +
                                         " does not eliminate '" + p + "' from its disjunct");
        }
        applied.push_back(simplify(fg));
    }
    std::vector<Formula> clauses;
    Formula earlier_fail = Formula::top();
    for (std::size_t i = 0; i < applied.size(); ++i) {
        clauses.push_back(
            Formula::implies(Formula::conj(earlier_fail, applied[i]), dw.witnesses[i]));
        earlier_fail = Formula::conj(earlier_fail, negate(applied[i]));
    }
    return simplify(Formula::conj_all(clauses));
}

DisjunctWitnesses polarity_witnesses(const std::string& p, const Formula& f,
                                     std::size_t dnf_cutoff) {
    DisjunctWitnesses out;
    AtomSet others = free_atoms(f);
    others.erase(p);
    if (others.size() <= dnf_cutoff) {
        const TruthTable on_true = truth_table(with_constant(f, p, true), others);
        const TruthTable on_false = truth_table(with_constant(f, p, false), others);
        const std::vector<Formula> atoms = atoms_of(on_true.basis());
        const Formula pa = Formula::atom(p);
        for (std::size_t i = 0; i < on_true.size(); ++i) {
            const bool t = on_true.get(i);
            const bool b = on_false.get(i);
            if (!t && !b) continue;
            std::vector<Formula> lits;
            for (std::size_t k = 0; k < atoms.size(); ++k) {
                const bool value = ((i >> (atoms.size() - 1 - k)) & 1U) != 0;
                lits.push_back(value ? atoms[k] : Formula::negation(atoms[k]));
            }
            if (t && !b) lits.push_back(pa);
            if (!t && b) lits.push_back(Formula::negation(pa));
            out.disjuncts.push_back(Formula::conj_all(lits));
            out.witnesses.push_back(Formula::constant(!(b && !t)));
        }
        return out;
    }
    for (const auto& cube : distribute(simplify(nnf(f, true)))) {
        out.disjuncts.push_back(Formula::conj_all(cube));
        out.witnesses.push_back(witness_for_cube(cube, p));
    }
    return out;
}

WitnessResult elim_witness_dnf(const std::string& p, const Formula& f, std::size_t dnf_cutoff) {
    const Formula body = is_quantifier_free(f) ? f : expand_quantifiers(f);
    const DisjunctWitnesses dw = polarity_witnesses(p, body, dnf_cutoff);
    Formula witness = ehw_combine(p, dw);
    Formula residue = substitute(body, p, witness);
    return {std::move(witness), p, body, std::move(residue)};
}

Formula weakest_precondition(std::span<const std::string> ps, const Formula& f) {
    return canonical(eliminate_all(ps, f));
}

std::variant<Formula, NotIndependent> project_vocabulary(const Formula& f, const AtomSet& keep) {
    const AtomSet free = free_atoms(f);
    std::vector<std::string> drop;
    std::set_difference(free.begin(), free.end(), keep.begin(), keep.end(),
                        std::back_inserter(drop));
    if (drop.empty()) return f;
    Formula g = eliminate_all(drop, f);
    const TruthTable tf = truth_table(f, free);
    const TruthTable tg = truth_table(g, free);
    if (tf == tg) return g;
    for (std::size_t i = 0; i < tf.size(); ++i) {
        if (tf.get(i) || !tg.get(i)) continue;
        const Valuation falsifying = tf.valuation_at(i);
        for (std::size_t j = 0; j < tf.size(); ++j) {
            if (!tf.get(j)) continue;
            Valuation v = tf.valuation_at(j);
            const bool agrees = std::all_of(keep.begin(), keep.end(), [&](const std::string& a) {
                return !v.contains(a) || v.at(a) == falsifying.at(a);
            });
            if (agrees) return NotIndependent{std::move(v), falsifying};
        }
    }
    throw InternalCheckFailed("projection differs from formula without a witness pair");
}

}  // namespace boolsolve
