#include <gtest/gtest.h>

#include "l1/axioms.hpp"
#include "l1/corpus.hpp"
#include "l1/error.hpp"
#include "l1/parser.hpp"
#include "l1/report.hpp"

namespace {

using namespace l1;

const SchemaEntry& entry(const std::string& name) { return bundled_corpus().at(name); }

// Serialise, dump to text, parse the text, rebuild.
Json reparsed(const Json& j) { return Json::parse(j.dump()); }

TEST(Json, ValuationAndSubstitutionRoundTrip) {
  const auto v = is_l1_theorem(parse_formula("eps(a,b) -> eps(b,a)"));
  EXPECT_EQ(theorem_verdict_from_json(reparsed(to_json(v))), v);
  const Substitution s = parse_substitution("{a->a, b->b, d->c, e->d}");
  const Json js = to_json(s);
  EXPECT_EQ(js.dump(), R"({"a":"a","b":"b","d":"c","e":"d"})");
  EXPECT_EQ(substitution_from_json(reparsed(js)), s);
  EXPECT_EQ(schema_from_json(to_json(entry("A_M8"))), entry("A_M8"));
}

TEST(Json, TrivialityReportRoundTrip) {
  const auto r = triviality(entry("A_M8"), a_t());
  const Json j = to_json(r);
  EXPECT_EQ(j["kind"], "triviality");
  EXPECT_EQ(j["verdict"], "nontrivial");
  EXPECT_EQ(j["refutations"].size(), 24u);
  EXPECT_EQ(j["refutations"][0]["rho"], Json::parse("[1,2,3,4]"));
  const auto back = triviality_report_from_json(reparsed(j));
  EXPECT_EQ(back, r);
  EXPECT_EQ(certify(back), std::nullopt);
}

TEST(Json, QntReportRoundTrip) {
  for (const auto& [a, b] : {std::pair{"Star", "A_M8"}, std::pair{"DoubleStar", "A_M8"},
                             std::pair{"A_S1", "A_S2"}}) {
    const auto r = quasi_triviality(entry(a), entry(b));
    const auto back = qnt_report_from_json(reparsed(to_json(r)));
    EXPECT_EQ(back, r) << a << " " << b;
    EXPECT_EQ(to_json(back).dump(), to_json(r).dump());
  }
}

TEST(Json, CharacterizationRoundTrip) {
  for (const auto& name : {"A_S1", "A_S3", "A_ad1"}) {
    const auto r = is_characteristic(entry(name));
    const auto back = characterization_from_json(reparsed(to_json(r)));
    EXPECT_EQ(back, r) << name;
    EXPECT_EQ(certify(back), std::nullopt);
  }
}

TEST(Json, ShapeErrorsAreParseErrors) {
  EXPECT_THROW(valuation_from_json(Json::parse("{}")), ParseError);
  EXPECT_THROW(valuation_from_json(Json::parse(R"j({"domain":["eps(a,b)"],"true":["x"]})j")),
               ParseError);
  EXPECT_THROW(substitution_from_json(Json::parse("[1]")), ParseError);
  EXPECT_THROW(triviality_map_from_json(Json::parse(R"({"sigma":{},"rho":[0]})")), ParseError);
  EXPECT_THROW(qnt_report_from_json(Json::parse(R"({"left":1})")), ParseError);
}

TEST(Text, TrivialityReportListsEveryCase) {
  const std::string text = to_text(triviality(entry("A_M8"), a_t()));
  EXPECT_NE(text.find("A_M8: nontrivial w.r.t. A_t"), std::string::npos);
  EXPECT_NE(text.find("Case 24: "), std::string::npos);
  EXPECT_EQ(text.find("Case 25: "), std::string::npos);
}

TEST(Text, QntReportPrintsTheWitness) {
  const std::string text = to_text(quasi_triviality(entry("Star"), entry("A_M8")));
  EXPECT_NE(text.find("quasi-trivial"), std::string::npos);
  EXPECT_NE(text.find("{a->a, b->b, d->c, e->d}"), std::string::npos);
  EXPECT_NE(text.find("rho = (1 2 3 4)"), std::string::npos);
}

TEST(Text, Helpers) {
  const Formula f = parse_formula("eps(a,b) | eps(b,a)");
  EXPECT_EQ(format_valuation(Valuation::from_index(atoms(f), 1)), "t: eps(a,b) | f: eps(b,a)");
  EXPECT_EQ(format_rho({2, 0, 1}), "(3 1 2)");
}

TEST(Text, OutputIsDeterministic) {
  const auto a = to_text(conjecture_report());
  const auto b = to_text(conjecture_report());
  EXPECT_EQ(a, b);
  EXPECT_EQ(to_json(verify_paper()).dump(), to_json(verify_paper()).dump());
}

}  // namespace
