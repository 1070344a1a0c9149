#include "boolsolve/errors.hpp"
#include "boolsolve/formula.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>

namespace boolsolve {

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound, AtomSet& out) {
    switch (f.kind()) {
        case Kind::Top:
        case Kind::Bot:
            return;
        case Kind::Atom:
            if (std::find(bound.begin(), bound.end(), f.name()) == bound.end()) out.insert(f.name());
            return;
        case Kind::Not:
            collect_free(f.operand(), bound, out);
            return;
        case Kind::Exists:
        case Kind::Forall:
            bound.push_back(f.name());
            collect_free(f.body(), bound, out);
            bound.pop_back();
            return;
        default:
            collect_free(f.lhs(), bound, out);
            collect_free(f.rhs(), bound, out);
            return;
    }
}

template <typename Visit>
void walk(const Formula& f, Visit&& visit) {
    visit(f);
    switch (f.kind()) {
        case Kind::Top:
        case Kind::Bot:
        case Kind::Atom:
            return;
        case Kind::Not:
        case Kind::Exists:
        case Kind::Forall:
            walk(f.lhs(), visit);
            return;
        default:
            walk(f.lhs(), visit);
            walk(f.rhs(), visit);
            return;
    }
}

Polarity join(Polarity a, Polarity b) {
    if (a == Polarity::Absent) return b;
    if (b == Polarity::Absent) return a;
    if (a == b) return a;
    return Polarity::Both;
}

Polarity flip(Polarity p) {
    switch (p) {
        case Polarity::PositiveOnly:
            return Polarity::NegativeOnly;
        case Polarity::NegativeOnly:
            return Polarity::PositiveOnly;
        default:
            return p;
    }
}

Polarity polarity_rec(const Formula& f, std::string_view atom) {
    switch (f.kind()) {
        case Kind::Top:
        case Kind::Bot:
            return Polarity::Absent;
        case Kind::Atom:
            return f.name() == atom ? Polarity::PositiveOnly : Polarity::Absent;
        case Kind::Not:
            return flip(polarity_rec(f.operand(), atom));
        case Kind::Exists:
        case Kind::Forall:
            if (f.name() == atom) return Polarity::Absent;
            return polarity_rec(f.body(), atom);
        case Kind::And:
        case Kind::Or:
            return join(polarity_rec(f.lhs(), atom), polarity_rec(f.rhs(), atom));
        case Kind::Implies:
            return join(flip(polarity_rec(f.lhs(), atom)), polarity_rec(f.rhs(), atom));
        case Kind::Iff: {
            const Polarity p = join(polarity_rec(f.lhs(), atom), polarity_rec(f.rhs(), atom));
            return p == Polarity::Absent ? Polarity::Absent : Polarity::Both;
        }
    }
    return Polarity::Absent;
}

// Does a free occurrence of `p` lie under a binder of some member of `names`?
bool captured(const Formula& f, const std::string& p, const AtomSet& names, int binders_in_scope) {
    switch (f.kind()) {
        case Kind::Top:
        case Kind::Bot:
            return false;
        case Kind::Atom:
            return f.name() == p && binders_in_scope > 0;
        case Kind::Not:
            return captured(f.operand(), p, names, binders_in_scope);
        case Kind::Exists:
        case Kind::Forall: {
            if (f.name() == p) return false;  // occurrences below are bound
            const int extra = names.contains(f.name()) ? 1 : 0;
            return captured(f.body(), p, names, binders_in_scope + extra);
        }
        default:
            return captured(f.lhs(), p, names, binders_in_scope) ||
                   captured(f.rhs(), p, names, binders_in_scope);
    }
}

Formula replace(const Formula& f, const std::map<std::string, Formula>& subst,
                std::vector<std::string>& bound) {
    switch (f.kind()) {
        case Kind::Top:
        case Kind::Bot:
            return f;
        case Kind::Atom: {
            auto it = subst.find(f.name());
            if (it == subst.end()) return f;
            if (std::find(bound.begin(), bound.end(), f.name()) != bound.end()) return f;
            return it->second;
        }
        case Kind::Not: {
            Formula op = replace(f.operand(), subst, bound);
            return op == f.operand() ? f : Formula::negation(std::move(op));
        }
        case Kind::Exists:
        case Kind::Forall: {
            bound.push_back(f.name());
            Formula body = replace(f.body(), subst, bound);
            bound.pop_back();
            if (body == f.body()) return f;
            return f.kind() == Kind::Exists ? Formula::exists(f.name(), std::move(body))
                                            : Formula::forall(f.name(), std::move(body));
        }
        default: {
            Formula l = replace(f.lhs(), subst, bound);
            Formula r = replace(f.rhs(), subst, bound);
            if (l == f.lhs() && r == f.rhs()) return f;
            switch (f.kind()) {
                case Kind::And:
                    return Formula::conj(std::move(l), std::move(r));
                case Kind::Or:
                    return Formula::disj(std::move(l), std::move(r));
                case Kind::Implies:
                    return Formula::implies(std::move(l), std::move(r));
                default:
                    return Formula::iff(std::move(l), std::move(r));
            }
        }
    }
}

}  // namespace

AtomSet free_atoms(const Formula& f) {
    AtomSet out;
    std::vector<std::string> bound;
    collect_free(f, bound, out);
    return out;
}

AtomSet bound_atoms(const Formula& f) {
    AtomSet out;
    walk(f, [&](const Formula& g) {
        if (g.is_quantifier()) out.insert(g.name());
    });
    return out;
}

AtomSet all_atoms(const Formula& f) {
    AtomSet out;
    walk(f, [&](const Formula& g) {
        if (g.kind() == Kind::Atom || g.is_quantifier()) out.insert(g.name());
    });
    return out;
}

bool is_quantifier_free(const Formula& f) {
    bool result = true;
    walk(f, [&](const Formula& g) {
        if (g.is_quantifier()) result = false;
    });
    return result;
}

Polarity polarity_of(const Formula& f, std::string_view atom) { return polarity_rec(f, atom); }

namespace {

// Returns 0 if substitutible, else the violated condition number with `index` set.
int check_substitutible(std::span<const Formula> gs, std::span<const std::string> ps,
                        const Formula& f, std::size_t& index) {
    if (gs.size() != ps.size()) {
        index = 0;
        return -1;
    }
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const AtomSet fv = free_atoms(gs[i]);
        for (const auto& p : ps) {
            if (fv.contains(p)) {
                index = i;
                return 2;
            }
        }
        if (!fv.empty() && captured(f, ps[i], fv, 0)) {
            index = i;
            return 1;
        }
    }
    return 0;
}

}  // namespace

bool is_substitutible(std::span<const Formula> gs, std::span<const std::string> ps,
                      const Formula& f) {
    std::size_t index = 0;
    return check_substitutible(gs, ps, f, index) == 0;
}

Formula substitute_unchecked(const Formula& f, std::span<const std::string> ps,
                             std::span<const Formula> gs) {
    std::map<std::string, Formula> subst;
    for (std::size_t i = 0; i < ps.size() && i < gs.size(); ++i) subst.emplace(ps[i], gs[i]);
    if (subst.empty()) return f;
    std::vector<std::string> bound;
    return replace(f, subst, bound);
}

Formula substitute(const Formula& f, std::span<const std::string> ps,
                   std::span<const Formula> gs) {
    if (ps.size() != gs.size()) {
        throw NotSubstitutible("substitution has " + std::to_string(gs.size()) +
                                   " formulas for " + std::to_string(ps.size()) + " atoms",
                               0, 0);
    }
    std::vector<std::string> keep_ps;
    std::vector<Formula> keep_gs;
    std::vector<std::size_t> origin;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (gs[i].kind() == Kind::Atom && gs[i].name() == ps[i]) continue;
        keep_ps.push_back(ps[i]);
        keep_gs.push_back(gs[i]);
        origin.push_back(i);
    }
    std::size_t index = 0;
    const int violated = check_substitutible(keep_gs, keep_ps, f, index);
    if (violated == 1) {
        throw NotSubstitutible("substituent " + std::to_string(origin[index] + 1) + " for '" +
                                   keep_ps[index] + "' would be captured by a quantifier",
                               1, origin[index]);
    }
    if (violated == 2) {
        throw NotSubstitutible("substituent " + std::to_string(origin[index] + 1) + " for '" +
                                   keep_ps[index] + "' mentions a substituted atom",
                               2, origin[index]);
    }
    return substitute_unchecked(f, keep_ps, keep_gs);
}

Formula substitute(const Formula& f, const std::string& p, const Formula& g) {
    const std::string ps[] = {p};
    const Formula gs[] = {g};
    return substitute(f, ps, gs);
}

namespace {

class Cleaner {
public:
    Cleaner(const Formula& f, const AtomSet& avoid) : free_(free_atoms(f)), taken_(all_atoms(f)) {
        free_.insert(avoid.begin(), avoid.end());
        taken_.insert(avoid.begin(), avoid.end());
    }

    Formula run(const Formula& f) {
        switch (f.kind()) {
            case Kind::Top:
            case Kind::Bot:
                return f;
            case Kind::Atom: {
                for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
                    if (it->first == f.name()) {
                        return it->second == f.name() ? f : Formula::atom(it->second);
                    }
                }
                return f;
            }
            case Kind::Not:
                return Formula::negation(run(f.operand()));
            case Kind::Exists:
            case Kind::Forall: {
                std::string name = f.name();
                if (free_.contains(name) || used_binders_.contains(name)) {
                    name = fresh_name(name, taken_);
                }
                taken_.insert(name);
                used_binders_.insert(name);
                scope_.emplace_back(f.name(), name);
                Formula body = run(f.body());
                scope_.pop_back();
                return f.kind() == Kind::Exists ? Formula::exists(std::move(name), std::move(body))
                                                : Formula::forall(std::move(name), std::move(body));
            }
            default: {
                Formula l = run(f.lhs());
                Formula r = run(f.rhs());
                switch (f.kind()) {
                    case Kind::And:
                        return Formula::conj(std::move(l), std::move(r));
                    case Kind::Or:
                        return Formula::disj(std::move(l), std::move(r));
                    case Kind::Implies:
                        return Formula::implies(std::move(l), std::move(r));
                    default:
                        return Formula::iff(std::move(l), std::move(r));
                }
            }
        }
    }

private:
    AtomSet free_;
    AtomSet taken_;
    AtomSet used_binders_;
    std::vector<std::pair<std::string, std::string>> scope_;
};

}  // namespace

Formula clean_variant(const Formula& f) {
    if (is_quantifier_free(f)) return f;
    return Cleaner(f, {}).run(f);
}

Formula clean_variant(const Formula& f, const AtomSet& avoid) {
    if (is_quantifier_free(f)) return f;
    return Cleaner(f, avoid).run(f);
}

bool is_clean(const Formula& f) {
    const AtomSet free = free_atoms(f);
    AtomSet seen;
    bool ok = true;
    walk(f, [&](const Formula& g) {
        if (!g.is_quantifier()) return;
        if (free.contains(g.name()) || !seen.insert(g.name()).second) ok = false;
    });
    return ok;
}

}  // namespace boolsolve
