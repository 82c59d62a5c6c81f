#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "l1/axioms.hpp"
#include "l1/error.hpp"
#include "l1/parser.hpp"
#include "l1/semantics.hpp"
#include "slow_oracle.hpp"

namespace {

using namespace l1;

TEST(Valuation, CounterOrderAndLookups) {
  const std::vector<Atom> dom = atoms(parse_formula("eps(a,b) | eps(b,a) | eps(a,a)"));
  const Valuation v = Valuation::from_index(dom, 0b101);
  EXPECT_TRUE(v.value(dom[0]));
  EXPECT_FALSE(v.value(dom[1]));
  EXPECT_TRUE(v.value(dom[2]));
  EXPECT_EQ(v.index(), 5u);
  EXPECT_EQ(v.true_atoms().size(), 2u);
  EXPECT_EQ(Valuation::from_true_atoms(dom, v.true_atoms()), v);
  EXPECT_THROW(v.value(Atom{NameVar("c"), NameVar("c")}), DomainError);
  EXPECT_THROW(evaluate(eps("c", "c"), v), DomainError);
}

TEST(Semantics, ConjunctionReferenceIsEquivalentToTheAxioms) {
  const Formula all = ax1().body() & ax2().body() & ax3().body();
  EXPECT_TRUE(is_tautology(iff(a_t().body(), all)).holds);
  EXPECT_TRUE(are_equivalent(a_t().body(), all).holds);
  EXPECT_TRUE(are_equivalent(a_t_minus_1().body(), ax2().body() & ax3().body()).holds);
}

TEST(Semantics, WitnessIsLowestFalsifyingIndex) {
  const Formula f = parse_formula("eps(a,b) -> eps(a,a)");
  const auto v = is_tautology(f);
  ASSERT_FALSE(v.holds);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->index(), 1u);  // ab true, aa false
  EXPECT_FALSE(evaluate(f, *v.witness));
}

TEST(Semantics, EntailmentOfAxiomInstances) {
  const std::vector<Formula> gamma{parse_formula("eps(a,b) -> eps(a,a)"),
                                   parse_formula("eps(a,a) -> eps(b,b)")};
  EXPECT_TRUE(entails(gamma, parse_formula("eps(a,b) -> eps(b,b)")).holds);
  const auto no = entails(gamma, parse_formula("eps(b,b) -> eps(a,b)"));
  ASSERT_FALSE(no.holds);
  for (const auto& g : gamma) EXPECT_TRUE(evaluate(g, *no.witness));
  EXPECT_TRUE(entails({}, parse_formula("eps(a,b) | !eps(a,b)")).holds);
}

TEST(Semantics, AtomCapRaisesBudgetExceeded) {
  std::mt19937 rng(7);
  const Formula big = gen::with_atoms(rng, 31);
  EXPECT_THROW(is_tautology(big), BudgetExceeded);
  SweepOptions small;
  small.max_atoms = 4;
  EXPECT_THROW(is_tautology(gen::with_atoms(rng, 5), small), BudgetExceeded);
}

TEST(SemanticsProperty, AgreesWithNaiveEvaluationUpToTenAtoms) {
  std::mt19937 rng(1234);
  for (int i = 0; i < 400; ++i) {
    const Formula f = i % 2 ? gen::formula(rng, 5) : gen::with_atoms(rng, 1 + i % 10);
    ASSERT_LE(atoms(f).size(), 16u);
    const auto v = is_tautology(f);
    const auto expected = oracle::first_falsifier(f);
    ASSERT_EQ(v.holds, expected < 0) << print_formula(f);
    if (!v.holds) ASSERT_EQ(static_cast<std::int64_t>(v.witness->index()), expected);
  }
}

TEST(SemanticsProperty, ParallelSweepMatchesSequential) {
  std::mt19937 rng(99);
  SweepOptions par;
  par.workers = 4;
  for (int i = 0; i < 60; ++i) {
    const Formula f = gen::with_atoms(rng, 8 + i % 12);
    const Formula g = (i % 3 == 0) ? (f | !f) : f;
    ASSERT_EQ(is_tautology(g), is_tautology(g, par)) << print_formula(g);
    const Formula h = gen::with_atoms(rng, 8 + i % 12);
    ASSERT_EQ(are_equivalent(g, h), are_equivalent(g, h, par));
  }
}

TEST(SemanticsProperty, EquivalenceIsSymmetricInVerdict) {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Formula a = gen::formula(rng, 4, {"a", "b"});
    const Formula b = gen::formula(rng, 4, {"a", "b"});
    ASSERT_EQ(are_equivalent(a, b).holds, are_equivalent(b, a).holds);
    ASSERT_EQ(are_equivalent(a, b).holds, oracle::equivalent(a, b));
  }
}

}  // namespace
