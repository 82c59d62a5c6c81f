#include <gtest/gtest.h>

#include "l1/error.hpp"
#include "l1/formula.hpp"
#include "l1/parser.hpp"

namespace {

using namespace l1;

std::vector<std::string> ids(const std::vector<NameVar>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.id());
  return out;
}

TEST(NameVar, RejectsMalformedIdentifiers) {
  EXPECT_NO_THROW(NameVar("a"));
  EXPECT_NO_THROW(NameVar("x_12"));
  EXPECT_THROW(NameVar(""), DomainError);
  EXPECT_THROW(NameVar("A"), DomainError);
  EXPECT_THROW(NameVar("1a"), DomainError);
  EXPECT_THROW(NameVar("a-b"), DomainError);
}

TEST(Formula, NvFollowsFirstOccurrenceSubjectFirst) {
  // A_M8: a b c d in reading order.
  const Formula m8 = parse_formula(
      "eps(a,b) & eps(c,d) -> eps(a,a) & eps(c,c) & (eps(b,c) -> eps(a,d) & eps(b,a))");
  EXPECT_EQ(ids(nv(m8)), (std::vector<std::string>{"a", "b", "c", "d"}));
  EXPECT_EQ(ids(nv(parse_formula("eps(d,b) | eps(a,d)"))),
            (std::vector<std::string>{"d", "b", "a"}));
  EXPECT_EQ(count_nv(m8), 4u);
}

TEST(Formula, AtomsOfConjunctionReference) {
  // Oracle: atoms(A_t) = ab, aa, bc, ac, ba.
  const Formula at = parse_formula("eps(a,b) -> eps(a,a) & (eps(b,c) -> eps(a,c) & eps(b,a))");
  std::vector<std::string> got;
  for (const auto& a : atoms(at)) got.push_back(to_string(a));
  EXPECT_EQ(got, (std::vector<std::string>{"eps(a,b)", "eps(a,a)", "eps(b,c)", "eps(a,c)",
                                           "eps(b,a)"}));
}

TEST(Formula, DesugarUsesOnlyCoreConnectives) {
  const Formula f = iff(eps("a", "b") & eps("b", "c"), implies(eps("a", "c"), eps("b", "a")));
  std::function<bool(const Formula&)> core = [&](const Formula& g) {
    if (!g.is_core()) return false;
    if (g.is_atom()) return true;
    if (g.kind() == Formula::Kind::Not) return core(g.operand());
    return core(g.lhs()) && core(g.rhs());
  };
  EXPECT_FALSE(core(f));
  EXPECT_TRUE(core(f.desugar()));
  EXPECT_TRUE(core_equal(f, f.desugar()));
}

TEST(Formula, CoreEqualIdentifiesSugarWithItsExpansion) {
  const Formula a = eps("a", "b");
  const Formula b = eps("b", "a");
  EXPECT_TRUE(core_equal(implies(a, b), !a | b));
  EXPECT_TRUE(core_equal(a & b, !(!a | !b)));
  EXPECT_FALSE(core_equal(a & b, b & a));
  EXPECT_FALSE(implies(a, b) == (!a | b));
}

TEST(Formula, AccessorsRejectWrongKind) {
  const Formula a = eps("a", "b");
  EXPECT_THROW(a.operand(), DomainError);
  EXPECT_THROW(a.lhs(), DomainError);
  EXPECT_THROW((!a).atom(), DomainError);
  EXPECT_EQ((a | a).size(), 3u);
}

TEST(SchemaEntry, CarriesVariableTuple) {
  const SchemaEntry e("Ax2", parse_formula("eps(a,b) & eps(b,c) -> eps(a,c)"));
  EXPECT_EQ(e.arity(), 3u);
  EXPECT_EQ(ids(e.vars()), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(e, SchemaEntry("Ax2", parse_formula("eps(a,b) & eps(b,c) -> eps(a,c)")));
}

}  // namespace
