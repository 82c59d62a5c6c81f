#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "l1/axioms.hpp"
#include "l1/corpus.hpp"
#include "l1/decision.hpp"
#include "l1/error.hpp"
#include "l1/parser.hpp"
#include "slow_oracle.hpp"

namespace {

using namespace l1;

std::vector<NameVar> pool_of(std::size_t n) {
  std::vector<NameVar> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

std::vector<std::string> names_of(std::size_t n) {
  std::vector<std::string> out;
  for (const auto& v : pool_of(n)) out.push_back(v.id());
  return out;
}

TEST(Admissible, CountsForSmallPools) {
  // Oracle values for pools of 1, 2, 3 variables.
  EXPECT_EQ(admissible_valuations(pool_of(1)).size(), 2u);
  EXPECT_EQ(admissible_valuations(pool_of(2)).size(), 7u);
  EXPECT_EQ(admissible_valuations(pool_of(3)).size(), 36u);
  EXPECT_EQ(admissible_valuations(pool_of(4)).size(), oracle::admissible_count(names_of(4)));
}

TEST(Admissible, GridIsRowMajor) {
  const auto grid = atom_grid(pool_of(2));
  ASSERT_EQ(grid.size(), 4u);
  EXPECT_EQ(to_string(grid[1]), "eps(a,b)");
  EXPECT_EQ(to_string(grid[2]), "eps(b,a)");
}

TEST(Admissible, KanaiSimplificationGivesTheSameSet) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto full = admissible_valuations(pool_of(n), ExchangeAxiom::Ax3);
    const auto kanai = admissible_valuations(pool_of(n), ExchangeAxiom::Ax3s);
    EXPECT_EQ(full.masks(), kanai.masks()) << "pool " << n;
    EXPECT_EQ(oracle::admissible_count(names_of(n), true), kanai.size());
  }
}

TEST(Admissible, EveryMaskSatisfiesEveryAxiomInstance) {
  const auto set = admissible_valuations(pool_of(3));
  for (std::size_t i = 0; i < set.size(); ++i) {
    EXPECT_TRUE(is_admissible(set.valuation(i), set.pool()));
  }
  // The all-true valuation is admissible; a lone eps(a,b) is not.
  const auto grid = atom_grid(pool_of(2));
  EXPECT_TRUE(is_admissible(Valuation::from_index(grid, 0b1111), pool_of(2)));
  EXPECT_FALSE(is_admissible(Valuation::from_index(grid, 0b0010), pool_of(2)));
}

TEST(Admissible, RestrictionToASubPoolIsOntoTheSubPoolSet) {
  const auto big = admissible_valuations(pool_of(4));
  const auto small = admissible_valuations(pool_of(3));
  std::set<std::uint64_t> projected;
  for (std::size_t i = 0; i < big.size(); ++i) {
    const Valuation v = big.valuation(i);
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < small.grid().size(); ++k) {
      if (v.value(small.grid()[k])) mask |= std::uint64_t{1} << k;
    }
    projected.insert(mask);
  }
  EXPECT_EQ(std::vector<std::uint64_t>(projected.begin(), projected.end()), small.masks());
}

TEST(Admissible, PoolCap) {
  EXPECT_NO_THROW(admissible_valuations(pool_of(5)));
  EXPECT_THROW(admissible_valuations(pool_of(6)), BudgetExceeded);
}

TEST(Theoremhood, AxiomsAndConjunctionReferencesAreValid) {
  for (Axiom a : {Axiom::Ax1, Axiom::Ax2, Axiom::Ax3, Axiom::Ax3s}) {
    EXPECT_TRUE(is_l1_theorem(axiom(a).body()).is_theorem) << axiom_name(a);
  }
  EXPECT_TRUE(is_l1_theorem(a_t().body()).is_theorem);
  EXPECT_TRUE(is_l1_theorem(a_t_minus_1().body()).is_theorem);
}

TEST(Theoremhood, ConversionIsNotValid) {
  const auto v = is_l1_theorem(parse_formula("eps(a,b) -> eps(b,a)"));
  EXPECT_FALSE(v.is_theorem);
  ASSERT_TRUE(v.counter_valuation);
  // Oracle: the only admissible counterexample over {a, b} makes exactly
  // eps(a,a) and eps(a,b) true.
  std::vector<std::string> t;
  for (const auto& a : v.counter_valuation->true_atoms()) t.push_back(to_string(a));
  std::sort(t.begin(), t.end());
  EXPECT_EQ(t, (std::vector<std::string>{"eps(a,a)", "eps(a,b)"}));
  EXPECT_EQ(v.admissible_count, 7u);
  EXPECT_TRUE(is_admissible(*v.counter_valuation, v.pool));
}

TEST(Theoremhood, ClassicalTautologiesAreTheorems) {
  EXPECT_TRUE(is_l1_theorem(parse_formula("eps(a,b) | !eps(a,b)")).is_theorem);
  EXPECT_FALSE(is_l1_theorem(parse_formula("eps(a,b)")).is_theorem);
  EXPECT_TRUE(is_l1_theorem(parse_formula("eps(a,b) -> eps(a,a)")).is_theorem);
}

TEST(Theoremhood, CorpusAgreesWithNaiveDecider) {
  for (const auto& e : bundled_corpus().entries()) {
    if (e.arity() > 4) continue;
    EXPECT_EQ(is_l1_theorem(e.body()).is_theorem, oracle::l1_valid(e.body())) << e.name();
  }
}

TEST(TheoremhoodProperty, RandomFormulasAgreeWithNaiveDecider) {
  std::mt19937 rng(42);
  for (int i = 0; i < 150; ++i) {
    const Formula f = gen::formula(rng, 4, {"a", "b", "c"});
    ASSERT_EQ(is_l1_theorem(f).is_theorem, oracle::l1_valid(f)) << print_formula(f);
  }
}

}  // namespace
