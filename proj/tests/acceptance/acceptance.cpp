// Acceptance suite: one line per criterion, exit status 1 if any fails.
#include "boolsolve/elimination.hpp"
#include "boolsolve/oracle.hpp"
#include "boolsolve/solve.hpp"
#include "support/generators.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>

namespace boolsolve {
namespace {

using testing::all_functions;
using testing::brute_entails;
using testing::brute_equivalent;
using testing::brute_solutions;
using testing::brute_valid;
using testing::FormulaGen;
using testing::GenOptions;

struct Outcome {
    bool pass = true;
    std::size_t checked = 0;
    std::string note;

    void require(bool ok, const std::string& what) {
        ++checked;
        if (!ok && pass) {
            pass = false;
            note = what;
        }
    }
};

const std::vector<std::string> kBasis = {"a", "b"};
const char* const kChain = "(a -> b) -> (p1 -> p2) & (a -> p2) & (p2 -> b)";
const char* const kBareChain = "(p1 -> p2) & (a -> p2) & (p2 -> b)";

SolutionProblem make(const Formula& f, std::vector<std::string> unknowns) {
    SolutionProblem sp;
    sp.formula = f;
    sp.unknowns = std::move(unknowns);
    return sp;
}

std::vector<std::string> first_unknowns(std::size_t n) {
    std::vector<std::string> all = {"p", "q"};
    all.resize(n);
    return all;
}

/// Random problems over unknowns p(, q) and base atoms a, b.
class ProblemSource {
public:
    explicit ProblemSource(unsigned seed) : gen_(seed) {}

    SolutionProblem next(std::size_t unknowns, int depth = 4) {
        GenOptions o;
        o.atoms = {"a", "b"};
        for (const auto& p : first_unknowns(unknowns)) o.atoms.push_back(p);
        o.max_depth = depth;
        o.binders = {"x"};
        return make(gen_(o), first_unknowns(unknowns));
    }

    SolutionProblem next_solvable(std::size_t unknowns, int depth = 4) {
        while (true) {
            SolutionProblem sp = next(unknowns, depth);
            if (brute_valid(Formula::exists_all(sp.unknowns, sp.formula))) return sp;
        }
    }

private:
    FormulaGen gen_;
};

bool brute_solvable(const SolutionProblem& sp, const std::vector<Formula>& candidates) {
    const std::size_t k = sp.unknowns.size();
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        std::vector<Formula> tuple;
        for (auto i : idx) tuple.push_back(candidates[i]);
        if (brute_valid(substitute(sp.formula, sp.unknowns, tuple))) return true;
        std::size_t j = k;
        while (j > 0) {
            if (++idx[j - 1] < candidates.size()) break;
            idx[j - 1] = 0;
            --j;
        }
        if (j == 0) return false;
    }
}

std::vector<std::vector<Formula>> tuples(const std::vector<Formula>& candidates, std::size_t k) {
    std::vector<std::vector<Formula>> out(1);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::vector<Formula>> next;
        for (const auto& t : out) {
            for (const auto& c : candidates) {
                next.push_back(t);
                next.back().push_back(c);
            }
        }
        out = std::move(next);
    }
    return out;
}

bool every_instance_solves(const SolutionProblem& sp, const std::vector<Formula>& components,
                           const std::vector<Formula>& candidates) {
    for (const auto& ts : tuples(candidates, sp.unknowns.size())) {
        std::vector<Formula> inst;
        for (const auto& c : components) inst.push_back(substitute(c, *sp.parameters, ts));
        if (!brute_valid(substitute(sp.formula, sp.unknowns, inst))) return false;
    }
    return true;
}

bool solves(const SolutionProblem& sp, const std::vector<Formula>& components) {
    return brute_valid(substitute(sp.formula, sp.unknowns, components)) &&
           check_particular(sp, components).verdict;
}

Outcome chain_classification() {
    Outcome o;
    const SolutionProblem sp = make(parse(kChain), {"p1", "p2"});
    const auto sols = enumerate_solutions(sp, {"a", "b"});
    std::set<std::pair<std::string, std::string>> found;
    for (const auto& s : sols) found.emplace(print(s.components[0]), print(s.components[1]));
    auto listed = [&](const char* g1, const char* g2) {
        const TruthTable t1 = truth_table(parse(g1), {"a", "b"});
        const TruthTable t2 = truth_table(parse(g2), {"a", "b"});
        return found.contains({print(formula_from_table(t1)), print(formula_from_table(t2))});
    };
    const std::pair<const char*, const char*> yes[] = {
        {"a", "a"}, {"a", "b"}, {"false", "a"}, {"b", "b"}, {"a & b", "a | b"}};
    const std::pair<const char*, const char*> no[] = {{"b", "a"},         {"a", "false"},
                                                      {"true", "true"},   {"true", "false"},
                                                      {"false", "true"},  {"false", "false"}};
    for (const auto& [g1, g2] : yes) o.require(listed(g1, g2), std::string("missing (") + g1 + ", " + g2 + ")");
    for (const auto& [g1, g2] : no) o.require(!listed(g1, g2), std::string("spurious (") + g1 + ", " + g2 + ")");
    // The whole set against an independent search.
    const auto brute = brute_solutions(sp, all_functions(kBasis));
    o.require(brute.size() == sols.size(), "solution count differs from brute force");
    for (std::size_t i = 0; i < std::min(brute.size(), sols.size()); ++i) {
        o.require(brute_equivalent(brute[i][0], sols[i].components[0]) &&
                      brute_equivalent(brute[i][1], sols[i].components[1]),
                  "enumeration order or content differs from brute force");
    }
    return o;
}

Outcome precondition_of_bare_chain() {
    Outcome o;
    const std::vector<std::string> ps = {"p1", "p2"};
    const SolutionProblem bare = make(parse(kBareChain), ps);
    o.require(!exists_solution(bare), "bare chain reported solvable");
    o.require(!brute_solvable(bare, all_functions(kBasis)), "brute force finds a solution of the bare chain");
    const Formula a = weakest_precondition(ps, bare.formula);
    o.require(a == formula_from_table(truth_table(parse("a -> b"), {"a", "b"})), "precondition is " + print(a));
    o.require(brute_equivalent(a, parse("a -> b")), "precondition not equivalent to a -> b");
    const SolutionProblem guarded = make(Formula::implies(a, bare.formula), ps);
    o.require(exists_solution(guarded), "guarded chain reported unsolvable");
    o.require(brute_solvable(guarded, all_functions(kBasis)), "brute force finds no solution of the guarded chain");
    return o;
}

// Every formula of depth at most `depth` over `atoms` with ¬ ∧ ∨ → ↔.
std::vector<Formula> all_formulas(const std::vector<std::string>& atoms, int depth) {
    std::vector<Formula> level;
    for (const auto& a : atoms) level.push_back(Formula::atom(a));
    for (int d = 1; d <= depth; ++d) {
        std::vector<Formula> next = level;
        for (const auto& f : level) next.push_back(Formula::negation(f));
        for (const auto& f : level) {
            for (const auto& g : level) {
                next.push_back(Formula::conj(f, g));
                next.push_back(Formula::disj(f, g));
                next.push_back(Formula::implies(f, g));
                next.push_back(Formula::iff(f, g));
            }
        }
        level = std::move(next);
    }
    return level;
}

Outcome existence_law() {
    Outcome o;
    auto check = [&](const SolutionProblem& sp, const std::vector<Formula>& candidates) {
        o.require(exists_solution(sp) == brute_solvable(sp, candidates), "disagreement on " + print(sp.formula));
    };
    // Exhaustive part: depth ≤ 2, every combination of 1-2 unknowns and 1-2 base atoms.
    for (std::size_t n = 1; n <= 2; ++n) {
        for (std::size_t m = 1; m <= 2; ++m) {
            std::vector<std::string> base(kBasis.begin(), kBasis.begin() + static_cast<long>(m));
            std::vector<std::string> atoms = base;
            for (const auto& p : first_unknowns(n)) atoms.push_back(p);
            const auto candidates = all_functions(base);
            for (const auto& f : all_formulas(atoms, 2)) check(make(f, first_unknowns(n)), candidates);
        }
    }
    // Sampled part: depth ≤ 4 with quantifiers.
    ProblemSource src(301);
    const auto candidates = all_functions(kBasis);
    for (int i = 0; i < 4000; ++i) check(src.next(1 + i % 2), candidates);
    return o;
}

Outcome solver_soundness() {
    Outcome o;
    ProblemSource src(401);
    const auto candidates = all_functions(kBasis);
    for (int i = 0; i < 1000; ++i) {
        const SolutionProblem sp = src.next_solvable(1 + i % 2);
        const SolutionProblem psp = with_parameters(sp);
        const std::string where = " on " + print(sp.formula);
        o.require(solves(sp, solve_on_second_order(sp, Strategy::Interval).components), "interval" + where);
        for (auto fn : {WitnessFn::FTrue, WitnessFn::DnfEhw, WitnessFn::AckermannThenFTrue}) {
            o.require(solves(sp, solve_by_witnesses(sp, fn).components), "witnesses" + where);
        }
        o.require(every_instance_solves(psp, solve_succ_elim(psp).components, candidates), "succ-elim" + where);
        o.require(every_instance_solves(psp, solve_on_second_order(psp, Strategy::Reproductive).components,
                                        candidates),
                  "unary composition" + where);
    }
    return o;
}

// Clause (b) of reproductivity, against brute-force solutions.
bool reproduces(const SolutionProblem& sp, const std::vector<Formula>& components,
                const std::vector<std::vector<Formula>>& sols) {
    for (const auto& h : sols) {
        for (std::size_t i = 0; i < components.size(); ++i) {
            if (!brute_equivalent(substitute(components[i], *sp.parameters, h), h[i])) return false;
        }
    }
    return true;
}

Outcome reproductivity() {
    Outcome o;
    ProblemSource src(503);
    const auto candidates = all_functions(kBasis);
    for (int i = 0; i < 300; ++i) {
        const SolutionProblem sp = with_parameters(src.next_solvable(1 + i % 2));
        const std::string where = " on " + print(sp.formula);
        const AtomSet basis(kBasis.begin(), kBasis.end());
        const auto sols = brute_solutions(sp, candidates);
        const Solution se = solve_succ_elim(sp);
        o.require(check_reproductive(sp, se.components, basis).verdict, "succ-elim" + where);
        o.require(reproduces(sp, se.components, sols), "succ-elim (brute)" + where);
        const Solution particular = solve_by_witnesses(sp, WitnessFn::FTrue);
        const Solution rig = rigorous_solution(sp, particular);
        o.require(check_reproductive(sp, rig.components, basis).verdict, "rigorous" + where);
        o.require(reproduces(sp, rig.components, sols), "rigorous (brute)" + where);
    }
    return o;
}

Outcome interval_law() {
    Outcome o;
    ProblemSource src(601);
    const auto candidates = all_functions(kBasis);
    for (int i = 0; i < 500; ++i) {
        const SolutionProblem sp = src.next_solvable(1);
        const Formula low = Formula::negation(substitute(sp.formula, "p", Formula::bot()));
        const Formula high = substitute(sp.formula, "p", Formula::top());
        std::set<std::uint64_t> in_range;
        for (std::uint64_t k = 0; k < candidates.size(); ++k) {
            if (brute_entails(low, candidates[k]) && brute_entails(candidates[k], high)) in_range.insert(k);
        }
        std::set<std::uint64_t> enumerated;
        for (const auto& codes : enumerate_solution_codes(sp, {"a", "b"})) enumerated.insert(codes.front());
        o.require(enumerated == in_range, "interval mismatch on " + print(sp.formula));
        const Formula pick = solve1_interval(sp.formula, "p");
        o.require(brute_entails(low, pick) && brute_entails(pick, high), "pick outside range on " + print(sp.formula));
    }
    return o;
}

Outcome witness_laws() {
    Outcome o;
    FormulaGen gen(701);
    GenOptions fo;
    fo.atoms = {"a", "b", "c", "p"};
    fo.binders = {"x", "a"};
    fo.max_depth = 5;
    GenOptions side;
    side.atoms = {"a", "b", "c"};
    side.max_depth = 2;
    const Formula p = Formula::atom("p");
    int ackermann = 0;
    for (int i = 0; i < 1000; ++i) {
        Formula f = gen(fo);
        // Every fourth formula is built in positive Ackermann form.
        if (i % 4 == 0) {
            const Formula rest = Formula::disj(Formula::negation(p), gen(side));
            f = Formula::conj(Formula::conj(Formula::implies(gen(side), p), rest), gen(side));
        }
        const Formula target = Formula::exists("p", f);
        const std::string ps[] = {"p"};
        for (const auto& w : {elim_witness("p", f), elim_witness_dnf("p", f)}) {
            const Formula ws[] = {w.witness};
            o.require(is_substitutible(ws, ps, w.body) && !free_atoms(w.witness).contains("p") &&
                          brute_equivalent(substitute(w.body, "p", w.witness), target) &&
                          brute_equivalent(w.residue, target),
                      "witness law fails on " + print(f));
        }
        if (const auto w = ackermann_rewrite("p", f)) {
            ++ackermann;
            o.require(brute_equivalent(w->residue, target), "ackermann residue on " + print(f));
        }
    }
    o.require(ackermann >= 250, "too few formulas in Ackermann form");

    DisjunctWitnesses dw;
    dw.disjuncts = {parse("p & a"), parse("~p & b")};
    dw.witnesses = {Formula::top(), Formula::bot()};
    const Formula g = ehw_combine("p", dw);
    o.require(brute_equivalent(g, parse("a | ~b")), "combined witness is " + print(g));
    o.require(brute_equivalent(substitute(parse("p & a | ~p & b"), "p", g), parse("a | b")), "combined residue");
    const auto w = elim_witness_dnf("p", parse("p & a | ~p & b"));
    o.require(brute_equivalent(w.residue, parse("a | b")), "dnf residue is " + print(w.residue));
    return o;
}

Outcome precondition_maximality() {
    Outcome o;
    ProblemSource src(801);
    const auto candidates = all_functions(kBasis);
    for (int i = 0; i < 300; ++i) {
        const SolutionProblem sp = src.next(1 + i % 2);
        const Formula a = weakest_precondition(sp.unknowns, sp.formula);
        const SolutionProblem guarded = make(Formula::implies(a, sp.formula), sp.unknowns);
        o.require(brute_solvable(guarded, candidates), "precondition does not guard " + print(sp.formula));
        for (const auto& b : candidates) {
            const SolutionProblem with_b = make(Formula::implies(b, sp.formula), sp.unknowns);
            if (!brute_solvable(with_b, candidates)) continue;
            o.require(brute_entails(b, a), "weaker antecedent " + print(b) + " for " + print(sp.formula));
        }
    }
    return o;
}

Outcome restricted_solving() {
    Outcome o;
    FormulaGen gen(901);
    const auto allowed = all_functions(kBasis);
    int solvable = 0;
    int unsolvable = 0;
    for (int i = 0; solvable < 200; ++i) {
        const std::size_t n = 1 + i % 2;
        GenOptions fo;
        fo.atoms = {"a", "b", "c"};
        for (const auto& p : first_unknowns(n)) fo.atoms.push_back(p);
        fo.binders = {"x"};
        SolutionProblem sp = make(gen(fo), first_unknowns(n));
        sp.forbidden = AtomSet{"c"};
        if (!brute_solvable(sp, allowed)) {
            ++unsolvable;
            bool threw = false;
            try {
                solve_restricted(sp);
            } catch (const NoSolution&) {
                threw = true;
            }
            o.require(threw, "restricted solution reported for " + print(sp.formula));
            continue;
        }
        ++solvable;
        const Solution s = solve_restricted(sp);
        for (const auto& g : s.components) {
            const auto projected = project_vocabulary(g, {"a", "b"});
            o.require(std::holds_alternative<Formula>(projected) && !free_atoms(g).contains("c"),
                      "component mentions c for " + print(sp.formula));
        }
        o.require(brute_valid(substitute(sp.formula, sp.unknowns, s.components)), "invalid for " + print(sp.formula));
    }
    o.require(unsolvable > 0, "no unsolvable restricted problems sampled");

    SolutionProblem defeq = with_parameters(make(parse("(a & (b <-> p)) <-> (b & (a <-> q))"), {"p", "q"}));
    const std::vector<AtomSet> per = {{"b"}, {"a"}};
    const Solution d = solve_restricted_two_stage(defeq, per);
    o.require(brute_equivalent(d.components[0], parse("a")) && brute_equivalent(d.components[1], parse("b")),
              "definitional equivalence gives " + print(d.components[0]) + ", " + print(d.components[1]));
    return o;
}

Outcome substitution_suite() {
    Outcome o;
    FormulaGen gen(1001);
    GenOptions fo;
    fo.atoms = {"a", "b", "p", "q"};
    fo.binders = {"x", "a"};
    fo.max_depth = 4;
    GenOptions so;
    so.atoms = {"a", "b", "c"};
    so.max_depth = 2;
    const std::vector<std::string> ps = {"p", "q"};
    const Formula p = Formula::atom("p");
    int pulled = 0;
    int distributed = 0;
    while (pulled < 1000 || distributed < 1000) {
        const Formula f = gen(fo);
        const std::vector<Formula> gs = {gen(so), gen(so)};
        if (pulled < 1000 && is_substitutible(gs, ps, f)) {
            ++pulled;
            const Formula fg = substitute(f, ps, gs);
            const Formula link = Formula::conj(Formula::iff(p, gs[0]), Formula::iff(Formula::atom("q"), gs[1]));
            o.require(brute_equivalent(fg, Formula::exists_all(ps, Formula::conj(f, link))), "pull-out ∃ " + print(f));
            const Formula ante = Formula::forall("p", Formula::forall("q", Formula::disj(f, Formula::negation(link))));
            o.require(brute_equivalent(fg, ante), "pull-out ∀ " + print(f));
            o.require(brute_entails(Formula::forall("p", Formula::forall("q", f)), fg), "lower bound " + print(f));
            o.require(brute_entails(fg, Formula::exists_all(ps, f)), "upper bound " + print(f));
        }
        const Formula alpha = gen(so);
        const Formula mixed = Formula::disj(Formula::conj(alpha, gs[0]), Formula::conj(Formula::negation(alpha), gs[1]));
        const std::vector<Formula> parts = {gs[0], gs[1], alpha};
        bool ok = true;
        const std::string one[] = {"p"};
        for (const auto& g : parts) {
            const Formula single[] = {g};
            ok = ok && is_substitutible(single, one, f);
        }
        if (distributed < 1000 && ok) {
            ++distributed;
            const Formula lhs = substitute(f, "p", mixed);
            const Formula rhs = Formula::disj(Formula::conj(alpha, substitute(f, "p", gs[0])),
                                              Formula::conj(Formula::negation(alpha), substitute(f, "p", gs[1])));
            o.require(brute_equivalent(lhs, rhs), "distribution " + print(f));
        }
    }
    return o;
}

struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
};

}  // namespace
}  // namespace boolsolve

int main() {
    using namespace boolsolve;
    const Criterion criteria[] = {
        {1, "solution classification of the conditional chain", chain_classification},
        {2, "elimination result as solvability precondition", precondition_of_bare_chain},
        {3, "existence law against exhaustive search", existence_law},
        {4, "solver soundness on random solvable problems", solver_soundness},
        {5, "reproductivity of successive elimination and rigorous solutions", reproductivity},
        {6, "interval law for unary problems", interval_law},
        {7, "elimination witness laws and disjunct combination", witness_laws},
        {8, "maximality of the weakest precondition", precondition_maximality},
        {9, "vocabulary-restricted solving", restricted_solving},
        {10, "pull-out and distribution equivalences", substitution_suite},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.note = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (out.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " ("
                  << out.checked << " checks, " << timing << ")";
        if (!out.pass) std::cout << ": " << out.note;
        std::cout << '\n';
        failures += out.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
