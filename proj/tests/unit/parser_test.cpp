#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "l1/error.hpp"
#include "l1/parser.hpp"

namespace {

using namespace l1;

TEST(Parser, PrecedenceNotAndOrImpliesIff) {
  const Formula a = eps("a", "b"), b = eps("b", "c"), c = eps("a", "c");
  EXPECT_EQ(parse_formula("!eps(a,b) & eps(b,c)"), !a & b);
  EXPECT_EQ(parse_formula("eps(a,b) | eps(b,c) & eps(a,c)"), a | (b & c));
  EXPECT_EQ(parse_formula("eps(a,b) & eps(b,c) -> eps(a,c)"), implies(a & b, c));
  EXPECT_EQ(parse_formula("eps(a,b) -> eps(b,c) <-> eps(a,c)"), iff(implies(a, b), c));
}

TEST(Parser, ImplicationAssociatesRight) {
  const Formula a = eps("a", "b"), b = eps("b", "c"), c = eps("a", "c");
  EXPECT_EQ(parse_formula("eps(a,b) -> eps(b,c) -> eps(a,c)"), implies(a, implies(b, c)));
  EXPECT_EQ(print_formula(implies(implies(a, b), c)), "(eps(a,b) -> eps(b,c)) -> eps(a,c)");
}

TEST(Parser, PrintsMinimalParentheses) {
  EXPECT_EQ(print_formula(parse_formula("((eps(a,b)) & (eps(b,c)))")), "eps(a,b) & eps(b,c)");
  EXPECT_EQ(print_formula(parse_formula("!(eps(a,b) | eps(b,a))")), "!(eps(a,b) | eps(b,a))");
}

TEST(Parser, ErrorsCarryOneBasedSpans) {
  try {
    parse_formula("eps(a,b) & ");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span().line, 1u);
    EXPECT_EQ(e.span().column, 12u);
  }
  try {
    parse_formula("eps(a,b) $ eps(b,c)");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span().column, 10u);
  }
  EXPECT_THROW(parse_formula(""), ParseError);
  EXPECT_THROW(parse_formula("eps(a)"), ParseError);
  EXPECT_THROW(parse_formula("foo(a,b)"), ParseError);
  EXPECT_THROW(parse_formula("eps(a,b))"), ParseError);
}

TEST(SchemaFile, ParsesEntriesAndComments) {
  const auto entries = parse_schema_file(
      "# header\n"
      "Ax1 := eps(a,b) -> eps(a,a)   # trailing\n"
      "\n"
      "A_t-1 := eps(a,b) & eps(b,c) -> eps(a,c) & eps(b,a)\n");
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].name(), "Ax1");
  EXPECT_EQ(entries[1].name(), "A_t-1");
  EXPECT_EQ(parse_schema_file(print_schema_file(entries)), entries);
}

TEST(SchemaFile, ReportsEveryBadLine) {
  try {
    parse_schema_file("A := eps(a,b)\nnot an entry\nA := eps(b,a)\nB := eps(a,\n");
    FAIL() << "no error";
  } catch (const SchemaFileError& e) {
    ASSERT_EQ(e.errors().size(), 3u);
    EXPECT_EQ(e.errors()[0].span().line, 2u);
    EXPECT_EQ(e.errors()[1].span().line, 3u);
    EXPECT_EQ(e.errors()[2].span().line, 4u);
  }
}

TEST(SchemaFile, NameSyntax) {
  EXPECT_TRUE(is_valid_schema_name("A_S3Nd"));
  EXPECT_TRUE(is_valid_schema_name("A_t-1"));
  EXPECT_TRUE(is_valid_schema_name("_x"));
  EXPECT_FALSE(is_valid_schema_name("1A"));
  EXPECT_FALSE(is_valid_schema_name("A B"));
  EXPECT_FALSE(is_valid_schema_name(""));
}

TEST(ParserProperty, PrintParseRoundTripToDepthEight) {
  std::mt19937 rng(20251016);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = gen::formula(rng, 8);
    const std::string text = print_formula(f);
    const Formula back = parse_formula(text);
    ASSERT_EQ(back, f) << text;
    ASSERT_EQ(print_formula(back), text);
  }
}

}  // namespace
