#include "boolsolve/oracle.hpp"

#include "boolsolve/errors.hpp"

#include <algorithm>
#include <set>

namespace boolsolve {

namespace {

constexpr std::size_t kKeptFailures = 16;

std::size_t bit_of(const std::vector<std::string>& sorted, const std::string& atom) {
    const auto pos = std::lower_bound(sorted.begin(), sorted.end(), atom) - sorted.begin();
    return sorted.size() - 1 - static_cast<std::size_t>(pos);
}

// Table of f over outer ∪ inner atoms, addressed by an outer row and the
// values of the inner atoms packed as bits (inner atom j is bit j).
class Plan {
public:
    Plan(const Formula& f, const std::vector<std::string>& outer,
         const std::vector<std::string>& inner) {
        AtomSet all(outer.begin(), outer.end());
        all.insert(inner.begin(), inner.end());
        table_ = truth_table(f, all);
        const auto& basis = table_.basis();
        std::vector<std::size_t> outer_bits;
        for (const auto& a : outer) outer_bits.push_back(bit_of(basis, a));
        const std::size_t rows = std::size_t{1} << outer.size();
        base_.resize(rows);
        for (std::size_t e = 0; e < rows; ++e) {
            std::size_t index = 0;
            for (std::size_t m = 0; m < outer.size(); ++m) {
                if ((e >> (outer.size() - 1 - m)) & 1U) index |= std::size_t{1} << outer_bits[m];
            }
            base_[e] = index;
        }
        for (const auto& a : inner) inner_bits_.push_back(bit_of(basis, a));
    }

    bool at(std::size_t e, unsigned inner) const {
        std::size_t index = base_[e];
        for (std::size_t j = 0; j < inner_bits_.size(); ++j) {
            if ((inner >> j) & 1U) index |= std::size_t{1} << inner_bits_[j];
        }
        return table_.get(index);
    }

private:
    TruthTable table_;
    std::vector<std::size_t> base_;
    std::vector<std::size_t> inner_bits_;
};

// Outer rows of the oracle: the basis plus any other atom that must be
// quantified over, with each row's projection onto the basis.
struct Rows {
    std::vector<std::string> outer;
    std::vector<std::size_t> basis_row;
    std::size_t count = 0;

    Rows(const AtomSet& basis, const AtomSet& extra) {
        AtomSet all = basis;
        all.insert(extra.begin(), extra.end());
        outer.assign(all.begin(), all.end());
        if (outer.size() > 20) throw TooLarge("oracle valuation space exceeds 20 atoms");
        count = std::size_t{1} << outer.size();
        const std::vector<std::string> bvec(basis.begin(), basis.end());
        basis_row.resize(count);
        for (std::size_t e = 0; e < count; ++e) {
            std::size_t b = 0;
            for (std::size_t m = 0; m < outer.size(); ++m) {
                if (!basis.contains(outer[m])) continue;
                if ((e >> (outer.size() - 1 - m)) & 1U) b |= std::size_t{1} << bit_of(bvec, outer[m]);
            }
            basis_row[e] = b;
        }
    }

    Valuation valuation(std::size_t e) const {
        Valuation v;
        for (std::size_t m = 0; m < outer.size(); ++m) v[outer[m]] = (e >> (outer.size() - 1 - m)) & 1U;
        return v;
    }
};

bool fn(std::uint64_t code, std::size_t row) { return (code >> row) & 1U; }

void guard(const SolutionProblem& sp, const AtomSet& basis, const OracleLimits& limits) {
    if (basis.size() > limits.max_basis) {
        throw TooLarge("oracle basis has " + std::to_string(basis.size()) + " atoms, limit is " +
                       std::to_string(limits.max_basis));
    }
    if (sp.unknowns.size() > limits.max_unknowns) {
        throw TooLarge("oracle problem has " + std::to_string(sp.unknowns.size()) +
                       " unknowns, limit is " + std::to_string(limits.max_unknowns));
    }
    if (basis.size() > 6) throw TooLarge("function codes need a basis of at most 6 atoms");
    for (const auto& p : sp.unknowns) {
        if (basis.contains(p)) throw InvalidProblem("basis contains unknown '" + p + "'");
    }
}

// Calls visit(codes) for every tuple of `k` functions, first component slowest.
template <typename Visit>
void for_each_tuple(std::size_t k, std::uint64_t space, Visit&& visit) {
    std::vector<std::uint64_t> codes(k, 0);
    while (true) {
        visit(codes);
        std::size_t j = k;
        while (j > 0) {
            if (++codes[j - 1] < space) break;
            codes[j - 1] = 0;
            --j;
        }
        if (j == 0) return;
    }
}

std::string describe(const FunctionSpace& space, const std::vector<std::uint64_t>& codes) {
    std::string out = "(";
    for (std::size_t j = 0; j < codes.size(); ++j) {
        if (j) out += "; ";
        out += print(space.formula(codes[j]));
    }
    return out + ")";
}

AtomSet extra_atoms(const SolutionProblem& sp, std::span<const Formula> sol) {
    AtomSet extra = sp.base_atoms();
    const AtomSet params = sp.parameter_set();
    for (const auto& g : sol) {
        for (const auto& a : free_atoms(g)) {
            if (!params.contains(a)) extra.insert(a);
        }
    }
    return extra;
}

struct Parametric {
    Rows rows;
    Plan formula;
    std::vector<Plan> components;
};

Parametric build(const SolutionProblem& sp, std::span<const Formula> sol, const AtomSet& basis) {
    Rows rows(basis, extra_atoms(sp, sol));
    Plan f(sp.formula, rows.outer, sp.unknowns);
    std::vector<Plan> comps;
    for (const auto& g : sol) comps.emplace_back(g, rows.outer, *sp.parameters);
    return {std::move(rows), std::move(f), std::move(comps)};
}

unsigned component_bits(const Parametric& pr, std::size_t e, unsigned params) {
    unsigned out = 0;
    for (std::size_t j = 0; j < pr.components.size(); ++j) {
        if (pr.components[j].at(e, params)) out |= 1U << j;
    }
    return out;
}

unsigned tuple_bits(const std::vector<std::uint64_t>& codes, std::size_t row) {
    unsigned out = 0;
    for (std::size_t j = 0; j < codes.size(); ++j) {
        if (fn(codes[j], row)) out |= 1U << j;
    }
    return out;
}

// Shared preconditions of the parametric checks; false if already failed.
bool parametric_ready(const SolutionProblem& sp, std::span<const Formula> sol,
                      CheckReport& report) {
    if (!sp.parameters) throw MissingParameters("checking a parametric solution needs parameters");
    if (sol.size() != sp.unknowns.size()) {
        report.fail("solution", "expected " + std::to_string(sp.unknowns.size()) + " components");
        return false;
    }
    if (!is_substitutible(sol, sp.unknowns, sp.formula)) {
        report.fail("solution", "not substitutible for the unknowns");
        return false;
    }
    return true;
}

void check_instances(const SolutionProblem& sp, const Parametric& pr, const FunctionSpace& space,
                     CheckReport& report) {
    for_each_tuple(sp.unknowns.size(), space.size(), [&](const std::vector<std::uint64_t>& ts) {
        for (std::size_t e = 0; e < pr.rows.count; ++e) {
            const unsigned params = tuple_bits(ts, pr.rows.basis_row[e]);
            if (!pr.formula.at(e, component_bits(pr, e, params))) {
                report.fail("T = " + describe(space, ts), "instance is not a solution",
                            pr.rows.valuation(e));
                return;
            }
        }
    });
}

}  // namespace

FunctionSpace::FunctionSpace(AtomSet basis) : basis_(std::move(basis)) {
    if (basis_.size() > 5) throw TooLarge("function space over more than 5 atoms");
    const std::size_t rows = std::size_t{1} << basis_.size();
    size_ = rows >= 64 ? 0 : std::uint64_t{1} << rows;
}

void CheckReport::fail(std::string subject, std::string reason, std::optional<Valuation> v) {
    verdict = false;
    ++failure_count;
    if (failures.size() < kKeptFailures) {
        failures.push_back({std::move(subject), std::move(reason), std::move(v)});
    }
}

std::vector<std::vector<std::uint64_t>> enumerate_solution_codes(const SolutionProblem& sp,
                                                                 const AtomSet& basis,
                                                                 const OracleLimits& limits) {
    guard(sp, basis, limits);
    const FunctionSpace space(basis);
    const Rows rows(basis, sp.base_atoms());
    const Plan f(sp.formula, rows.outer, sp.unknowns);
    std::vector<std::vector<std::uint64_t>> out;
    for_each_tuple(sp.unknowns.size(), space.size(), [&](const std::vector<std::uint64_t>& gs) {
        for (std::size_t e = 0; e < rows.count; ++e) {
            if (!f.at(e, tuple_bits(gs, rows.basis_row[e]))) return;
        }
        out.push_back(gs);
    });
    return out;
}

std::vector<Solution> enumerate_solutions(const SolutionProblem& sp, const AtomSet& basis,
                                          const OracleLimits& limits) {
    const FunctionSpace space(basis);
    std::vector<Solution> out;
    for (const auto& codes : enumerate_solution_codes(sp, basis, limits)) {
        Solution s;
        for (auto c : codes) s.components.push_back(space.formula(c));
        out.push_back(std::move(s));
    }
    return out;
}

CheckReport check_particular(const SolutionProblem& sp, std::span<const Formula> sol) {
    CheckReport report;
    if (sol.size() != sp.unknowns.size()) {
        report.fail("solution", "expected " + std::to_string(sp.unknowns.size()) + " components");
        return report;
    }
    try {
        const Formula applied = substitute(sp.formula, sp.unknowns, sol);
        if (auto v = falsifying_valuation(applied)) {
            report.fail("solution", "substituted formula is not valid", std::move(v));
        }
    } catch (const NotSubstitutible& e) {
        report.fail("solution", std::string("not substitutible: ") + e.what());
    }
    return report;
}

CheckReport check_reproductive(const SolutionProblem& sp, std::span<const Formula> sol,
                               const AtomSet& basis, const OracleLimits& limits) {
    CheckReport report;
    guard(sp, basis, limits);
    if (!parametric_ready(sp, sol, report)) return report;
    const FunctionSpace space(basis);
    const Parametric pr = build(sp, sol, basis);
    check_instances(sp, pr, space, report);
    for (const auto& hs : enumerate_solution_codes(sp, basis, limits)) {
        for (std::size_t e = 0; e < pr.rows.count; ++e) {
            const unsigned h = tuple_bits(hs, pr.rows.basis_row[e]);
            if (component_bits(pr, e, h) != h) {
                report.fail("H = " + describe(space, hs), "solution is not reproduced",
                            pr.rows.valuation(e));
                break;
            }
        }
    }
    return report;
}

CheckReport check_general(const SolutionProblem& sp, std::span<const Formula> sol,
                          const AtomSet& basis, const OracleLimits& limits) {
    CheckReport report;
    guard(sp, basis, limits);
    if (!parametric_ready(sp, sol, report)) return report;
    const FunctionSpace space(basis);
    const Parametric pr = build(sp, sol, basis);
    if (pr.rows.count > 64) throw TooLarge("general check supports at most 6 valuation atoms");
    check_instances(sp, pr, space, report);

    const std::size_t k = sp.unknowns.size();
    std::set<std::vector<std::uint64_t>> reachable;
    for_each_tuple(k, space.size(), [&](const std::vector<std::uint64_t>& ts) {
        std::vector<std::uint64_t> image(k, 0);
        for (std::size_t e = 0; e < pr.rows.count; ++e) {
            const unsigned c = component_bits(pr, e, tuple_bits(ts, pr.rows.basis_row[e]));
            for (std::size_t j = 0; j < k; ++j) {
                if ((c >> j) & 1U) image[j] |= std::uint64_t{1} << e;
            }
        }
        reachable.insert(std::move(image));
    });
    for (const auto& hs : enumerate_solution_codes(sp, basis, limits)) {
        std::vector<std::uint64_t> image(k, 0);
        for (std::size_t e = 0; e < pr.rows.count; ++e) {
            const unsigned h = tuple_bits(hs, pr.rows.basis_row[e]);
            for (std::size_t j = 0; j < k; ++j) {
                if ((h >> j) & 1U) image[j] |= std::uint64_t{1} << e;
            }
        }
        if (!reachable.contains(image)) {
            report.fail("H = " + describe(space, hs), "no instantiation yields this solution");
        }
    }
    return report;
}

}  // namespace boolsolve
