#include "boolsolve/formula.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace boolsolve {

namespace {

std::size_t combine(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Kind kind, std::string name, Formula lhs, Formula rhs) {
    std::size_t h = combine(static_cast<std::size_t>(kind) + 1, std::hash<std::string>{}(name));
    std::size_t size = 1;
    std::size_t depth = 0;
    const bool unary = kind == Kind::Not || kind == Kind::Exists || kind == Kind::Forall;
    const bool binary = kind == Kind::And || kind == Kind::Or || kind == Kind::Implies ||
                        kind == Kind::Iff;
    if (unary || binary) {
        h = combine(h, lhs.hash());
        size += lhs.size();
        depth = lhs.depth() + 1;
    }
    if (binary) {
        h = combine(h, rhs.hash());
        size += rhs.size();
        depth = std::max(depth, rhs.depth() + 1);
    }
    auto node = std::make_shared<Node>(Node{kind, std::move(name), {std::move(lhs), std::move(rhs)},
                                            h, size, depth});
    return Formula(std::move(node));
}

Formula::Formula() : node_(top().node_) {}

// Leaves and unary nodes hold null handles in unused child slots.
Formula Formula::top() {
    static const Formula value = make(Kind::Top, "", Formula(NullTag{}), Formula(NullTag{}));
    return value;
}

Formula Formula::bot() {
    static const Formula value = make(Kind::Bot, "", Formula(NullTag{}), Formula(NullTag{}));
    return value;
}

Formula Formula::constant(bool value) { return value ? top() : bot(); }

Formula Formula::atom(std::string name) {
    return make(Kind::Atom, std::move(name), Formula(NullTag{}), Formula(NullTag{}));
}

Formula Formula::negation(Formula operand) {
    return make(Kind::Not, "", std::move(operand), Formula(NullTag{}));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
    return make(Kind::And, "", std::move(lhs), std::move(rhs));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
    return make(Kind::Or, "", std::move(lhs), std::move(rhs));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
    return make(Kind::Implies, "", std::move(lhs), std::move(rhs));
}

Formula Formula::iff(Formula lhs, Formula rhs) {
    return make(Kind::Iff, "", std::move(lhs), std::move(rhs));
}

Formula Formula::exists(std::string name, Formula body) {
    return make(Kind::Exists, std::move(name), std::move(body), Formula(NullTag{}));
}

Formula Formula::forall(std::string name, Formula body) {
    return make(Kind::Forall, std::move(name), std::move(body), Formula(NullTag{}));
}

Formula Formula::conj_all(std::span<const Formula> items) {
    if (items.empty()) return top();
    Formula acc = items.front();
    for (std::size_t i = 1; i < items.size(); ++i) acc = conj(acc, items[i]);
    return acc;
}

Formula Formula::disj_all(std::span<const Formula> items) {
    if (items.empty()) return bot();
    Formula acc = items.front();
    for (std::size_t i = 1; i < items.size(); ++i) acc = disj(acc, items[i]);
    return acc;
}

Formula Formula::exists_all(std::span<const std::string> names, Formula body) {
    for (auto it = names.rbegin(); it != names.rend(); ++it) body = exists(*it, std::move(body));
    return body;
}

Formula Formula::forall_all(std::span<const std::string> names, Formula body) {
    for (auto it = names.rbegin(); it != names.rend(); ++it) body = forall(*it, std::move(body));
    return body;
}

bool Formula::is_binary() const {
    switch (kind()) {
        case Kind::And:
        case Kind::Or:
        case Kind::Implies:
        case Kind::Iff:
            return true;
        default:
            return false;
    }
}

bool Formula::is_quantifier() const {
    return kind() == Kind::Exists || kind() == Kind::Forall;
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
    switch (a.kind()) {
        case Kind::Top:
        case Kind::Bot:
            return true;
        case Kind::Atom:
            return a.name() == b.name();
        case Kind::Not:
            return a.lhs() == b.lhs();
        case Kind::Exists:
        case Kind::Forall:
            return a.name() == b.name() && a.lhs() == b.lhs();
        default:
            return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
}

std::string_view to_string(Polarity polarity) {
    switch (polarity) {
        case Polarity::Absent:
            return "absent";
        case Polarity::PositiveOnly:
            return "positive";
        case Polarity::NegativeOnly:
            return "negative";
        case Polarity::Both:
            return "both";
    }
    return "?";
}

bool is_reserved(std::string_view text) {
    return text == "true" || text == "false" || text == "exists" || text == "forall";
}

bool is_identifier(std::string_view text) {
    if (text.empty() || text.front() < 'a' || text.front() > 'z') return false;
    for (char c : text) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return !is_reserved(text);
}

std::vector<Formula> atoms_of(std::span<const std::string> names) {
    std::vector<Formula> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(Formula::atom(n));
    return out;
}

std::string fresh_name(const std::string& base, const AtomSet& taken) {
    if (!taken.contains(base)) return base;
    for (std::size_t k = 1;; ++k) {
        std::string candidate = base + "_" + std::to_string(k);
        if (!taken.contains(candidate)) return candidate;
    }
}

}  // namespace boolsolve
