#include "boolsolve/errors.hpp"
#include "boolsolve/formula.hpp"
#include "boolsolve/semantics.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

namespace boolsolve {
namespace {

using testing::FormulaGen;
using testing::GenOptions;

Formula A(const char* n) { return Formula::atom(n); }

TEST(Parse, ConjunctionBindsTighterThanImplication) {
    EXPECT_EQ(parse("a & b -> c"), Formula::implies(Formula::conj(A("a"), A("b")), A("c")));
}

TEST(Parse, QuantifierScopeExtendsRight) {
    EXPECT_EQ(parse("exists p . p <-> a"), Formula::exists("p", Formula::iff(A("p"), A("a"))));
}

TEST(Parse, Associativity) {
    EXPECT_EQ(parse("a -> b -> c"), Formula::implies(A("a"), Formula::implies(A("b"), A("c"))));
    EXPECT_EQ(parse("a <-> b <-> c"), Formula::iff(Formula::iff(A("a"), A("b")), A("c")));
    EXPECT_EQ(parse("a | b | c"), Formula::disj(Formula::disj(A("a"), A("b")), A("c")));
}

TEST(Parse, ConstantsCommentsAndNegation) {
    EXPECT_EQ(parse("~~true # trailing\n& false"),
              Formula::conj(Formula::negation(Formula::negation(Formula::top())), Formula::bot()));
}

TEST(Parse, QuantifierInsideOperand) {
    EXPECT_EQ(parse("a & exists p . p | b"),
              Formula::conj(A("a"), Formula::exists("p", Formula::disj(A("p"), A("b")))));
}

TEST(Parse, ErrorsCarryPosition) {
    try {
        parse("a -> -> b");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1U);
        EXPECT_EQ(e.column(), 6U);
    }
    try {
        parse("a &\n  (b | )");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2U);
        EXPECT_EQ(e.column(), 8U);
    }
    EXPECT_THROW(parse("exists true . a"), ParseError);
    EXPECT_THROW(parse("forall exists . a"), ParseError);
    EXPECT_THROW(parse("Abc"), ParseError);
    EXPECT_THROW(parse("a ∧ b"), ParseError);
    EXPECT_THROW(parse(""), ParseError);
    EXPECT_THROW(parse("(a"), ParseError);
    EXPECT_THROW(parse("a b"), ParseError);
    EXPECT_THROW(parse("exists p p"), ParseError);
}

TEST(Print, MinimalParentheses) {
    EXPECT_EQ(print(Formula::implies(Formula::conj(A("a"), A("b")), A("c"))), "a & b -> c");
    EXPECT_EQ(print(Formula::negation(Formula::iff(A("a"), A("b")))), "~(a <-> b)");
    EXPECT_EQ(print(Formula::exists("p", A("p"))), "exists p . p");
    EXPECT_EQ(print(parse("(a -> b) -> c")), "(a -> b) -> c");
    EXPECT_EQ(print(parse("a | (b | c)")), "a | (b | c)");
    EXPECT_EQ(print(parse("(exists p . p) & a")), "(exists p . p) & a");
    EXPECT_EQ(print(parse("a & exists p . p")), "a & exists p . p");
    EXPECT_EQ(print(parse("~exists p . p")), "~exists p . p");
    EXPECT_EQ(print(parse("~(exists p . p) | a")), "~(exists p . p) | a");
}

TEST(Print, RoundTripRandom) {
    FormulaGen gen(11);
    GenOptions o;
    o.atoms = {"a", "b", "p", "q"};
    o.max_depth = 6;
    o.binders = {"p", "x"};
    for (int i = 0; i < 3000; ++i) {
        const Formula f = gen(o);
        ASSERT_EQ(parse(print(f)), f) << print(f);
    }
}

TEST(FreeAtoms, Examples) {
    EXPECT_EQ(free_atoms(parse("a & exists p . (p | b)")), (AtomSet{"a", "b"}));
    EXPECT_EQ(free_atoms(parse("exists p . p")), AtomSet{});
    EXPECT_EQ(free_atoms(parse("p | exists p . p")), AtomSet{"p"});
    EXPECT_EQ(bound_atoms(parse("p | exists p . forall q . p")), (AtomSet{"p", "q"}));
}

TEST(Polarity, Examples) {
    EXPECT_EQ(polarity_of(parse("p -> a"), "p"), Polarity::NegativeOnly);
    EXPECT_EQ(polarity_of(parse("p <-> a"), "p"), Polarity::Both);
    EXPECT_EQ(polarity_of(parse("a | b"), "p"), Polarity::Absent);
    EXPECT_EQ(polarity_of(parse("~(p -> a)"), "p"), Polarity::PositiveOnly);
    EXPECT_EQ(polarity_of(parse("(p -> a) & p"), "p"), Polarity::Both);
    EXPECT_EQ(polarity_of(parse("exists p . ~p"), "p"), Polarity::Absent);
    EXPECT_EQ(polarity_of(parse("a <-> b"), "p"), Polarity::Absent);
}

TEST(Polarity, AbsentIffNotFree) {
    FormulaGen gen(5);
    GenOptions o;
    o.binders = {"p"};
    for (int i = 0; i < 1000; ++i) {
        const Formula f = gen(o);
        EXPECT_EQ(polarity_of(f, "p") == Polarity::Absent, !free_atoms(f).contains("p")) << print(f);
    }
}

TEST(Substitutible, Examples) {
    const std::string p[] = {"p"};
    const Formula g1[] = {parse("a & b")};
    EXPECT_TRUE(is_substitutible(g1, p, parse("p -> q")));
    const Formula g2[] = {A("t")};
    EXPECT_FALSE(is_substitutible(g2, p, parse("exists t . (p & t)")));
    const Formula g3[] = {parse("p | a")};
    EXPECT_FALSE(is_substitutible(g3, p, parse("p")));
    EXPECT_TRUE(is_substitutible(g2, p, parse("exists t . t")));
    EXPECT_TRUE(is_substitutible(g2, p, parse("exists p . exists t . p & t")));
    const std::string pq[] = {"p", "q"};
    EXPECT_FALSE(is_substitutible(g1, pq, parse("p")));
}

TEST(Substitute, Examples) {
    EXPECT_EQ(substitute(parse("p -> q"), "p", parse("a & b")), parse("a & b -> q"));
    EXPECT_EQ(substitute(parse("p | exists p . p"), "p", A("a")), parse("a | exists p . p"));
    try {
        substitute(parse("exists t . (p & t)"), "p", A("t"));
        FAIL() << "expected NotSubstitutible";
    } catch (const NotSubstitutible& e) {
        EXPECT_EQ(e.condition(), 1);
        EXPECT_EQ(e.index(), 0U);
    }
    try {
        substitute(parse("p & q"), "q", parse("q | a"));
        FAIL() << "expected NotSubstitutible";
    } catch (const NotSubstitutible& e) {
        EXPECT_EQ(e.condition(), 2);
    }
}

TEST(Substitute, Simultaneous) {
    const std::string ps[] = {"p", "q"};
    const Formula gs[] = {A("q0"), A("p0")};
    EXPECT_EQ(substitute(parse("p & q"), ps, gs), parse("q0 & p0"));
    const Formula swap[] = {A("b"), A("a")};
    const std::string ab[] = {"a", "b"};
    EXPECT_THROW(substitute(parse("a -> b"), ab, swap), NotSubstitutible);
}

TEST(Substitute, IdentityLeavesFormulaUnchanged) {
    FormulaGen gen(21);
    GenOptions o;
    o.atoms = {"a", "p", "q"};
    o.binders = {"p", "a"};
    const std::vector<std::string> ps = {"p", "q"};
    const std::vector<Formula> same = atoms_of(ps);
    for (int i = 0; i < 1000; ++i) {
        const Formula f = gen(o);
        EXPECT_EQ(substitute(f, ps, same), f) << print(f);
    }
}

TEST(CleanVariant, Examples) {
    EXPECT_EQ(clean_variant(parse("exists p . (p & exists p . (p | a))")),
              parse("exists p . (p & exists p_1 . (p_1 | a))"));
    EXPECT_EQ(clean_variant(parse("a & b")), parse("a & b"));
    EXPECT_EQ(clean_variant(parse("p & exists p . p")), parse("p & exists p_1 . p_1"));
    EXPECT_EQ(clean_variant(parse("p_1 & exists p . p & exists p . p")),
              parse("p_1 & exists p . p & exists p_2 . p_2"));
    EXPECT_EQ(clean_variant(parse("exists t . t & a"), AtomSet{"t"}), parse("exists t_1 . t_1 & a"));
}

TEST(CleanVariant, CleanAndEquivalent) {
    FormulaGen gen(31);
    GenOptions o;
    o.atoms = {"a", "b", "p"};
    o.binders = {"p", "a"};
    o.max_depth = 5;
    int quantified = 0;
    for (int i = 0; i < 2000; ++i) {
        const Formula f = gen(o);
        if (free_atoms(f).size() > 3) continue;
        const Formula c = clean_variant(f);
        if (!is_quantifier_free(f)) ++quantified;
        EXPECT_TRUE(is_clean(c)) << print(f) << " => " << print(c);
        EXPECT_EQ(free_atoms(c), free_atoms(f));
        EXPECT_TRUE(testing::brute_equivalent(f, c)) << print(f) << " => " << print(c);
    }
    EXPECT_GT(quantified, 200);
}

TEST(FreshName, SmallestSuffix) {
    EXPECT_EQ(fresh_name("p", {}), "p");
    EXPECT_EQ(fresh_name("p", {"p"}), "p_1");
    EXPECT_EQ(fresh_name("p", {"p", "p_1", "p_3"}), "p_2");
}

TEST(Identifier, LexicalClass) {
    EXPECT_TRUE(is_identifier("a"));
    EXPECT_TRUE(is_identifier("p_1X"));
    EXPECT_FALSE(is_identifier("A"));
    EXPECT_FALSE(is_identifier("_a"));
    EXPECT_FALSE(is_identifier("1a"));
    EXPECT_FALSE(is_identifier("true"));
    EXPECT_FALSE(is_identifier("forall"));
    EXPECT_FALSE(is_identifier(""));
}

// Substituting g for p agrees with the pulled-out forms ∃p(F ∧ (p↔g)) and
// ∀p(F ∨ ¬(p↔g)), and lies between ∀p F and ∃p F.
TEST(Substitute, PullOutAndMonotoneChain) {
    FormulaGen gen(41);
    GenOptions fo;
    fo.atoms = {"a", "b", "p"};
    fo.binders = {"x"};
    GenOptions go;
    go.atoms = {"a", "b"};
    go.max_depth = 3;
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        const Formula f = gen(fo);
        const Formula g = gen(go);
        const Formula gs[] = {g};
        const std::string ps[] = {"p"};
        if (!is_substitutible(gs, ps, f)) continue;
        ++checked;
        const Formula fg = substitute(f, "p", g);
        const Formula link = Formula::iff(A("p"), g);
        EXPECT_TRUE(testing::brute_equivalent(fg, Formula::exists("p", Formula::conj(f, link))));
        EXPECT_TRUE(testing::brute_equivalent(
            fg, Formula::forall("p", Formula::disj(f, Formula::negation(link)))));
        EXPECT_TRUE(testing::brute_entails(Formula::forall("p", f), fg));
        EXPECT_TRUE(testing::brute_entails(fg, Formula::exists("p", f)));
    }
    EXPECT_GT(checked, 900);
}

}  // namespace
}  // namespace boolsolve
