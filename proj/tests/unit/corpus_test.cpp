#include <algorithm>

#include <gtest/gtest.h>

#include "l1/axioms.hpp"
#include "l1/corpus.hpp"
#include "l1/error.hpp"
#include "l1/parser.hpp"
#include "l1/report.hpp"
#include "slow_oracle.hpp"

namespace {

using namespace l1;

TEST(Corpus, BundledCorpusHasThirtyCataloguedEntries) {
  const Corpus& c = bundled_corpus();
  ASSERT_EQ(c.size(), 30u);
  ASSERT_EQ(corpus_catalog().size(), 30u);
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(c.entries()[i].name(), corpus_catalog()[i].name);
  }
  EXPECT_EQ(conjecture_names().size(), 16u);
  EXPECT_EQ(established_names().size(), 5u);
}

TEST(Corpus, TranscriptionSpotChecks) {
  const Corpus& c = bundled_corpus();
  EXPECT_TRUE(core_equal(
      c.at("A_ad8").body(),
      parse_formula("eps(a,b) & eps(b,c) -> eps(a,a) & eps(b,b) & eps(a,c) & eps(b,a)")));
  EXPECT_TRUE(core_equal(c.at("A_t").body(), a_t().body()));
  EXPECT_TRUE(core_equal(c.at("A_t-1").body(), a_t_minus_1().body()));
  for (Axiom a : {Axiom::Ax1, Axiom::Ax2, Axiom::Ax3, Axiom::Ax3s}) {
    EXPECT_TRUE(core_equal(c.at(axiom_name(a)).body(), axiom(a).body()));
  }
  EXPECT_EQ(c.at("Star").arity(), 4u);
  EXPECT_EQ(c.at("DoubleStar").arity(), 5u);
  EXPECT_EQ(c.at("A_M8").arity(), 4u);
}

TEST(Corpus, RenamedLabelsKeepTheirPrintedAliases) {
  EXPECT_NE(catalog_entry("A_S2ex2")->printed_label.find("A_{S1ex2}"), std::string_view::npos);
  EXPECT_NE(catalog_entry("A_S2ex3")->printed_label.find("A_{S1ex3}"), std::string_view::npos);
  EXPECT_EQ(catalog_entry("Star")->printed_label, "(*)");
  EXPECT_EQ(catalog_entry("nope"), nullptr);
}

TEST(Corpus, ValidationAndLookup) {
  EXPECT_THROW(bundled_corpus().at("Nope"), DomainError);
  EXPECT_THROW(Corpus::parse("A := eps(a,y1)\n"), DomainError);
  EXPECT_THROW(Corpus::parse("A := eps(a,b)\nA := eps(b,a)\n"), ParseError);
  const Corpus c = bundled_corpus().with_replaced("A_S2", parse_formula("eps(a,b)"));
  EXPECT_EQ(print_formula(c.at("A_S2").body()), "eps(a,b)");
  EXPECT_THROW(bundled_corpus().with_replaced("Nope", parse_formula("eps(a,b)")), DomainError);
}

TEST(VerifyPaper, EveryItemPasses) {
  const auto r = verify_paper();
  for (const auto& i : r.items) {
    EXPECT_TRUE(i.passed) << i.id << ": " << i.claim;
    EXPECT_FALSE(i.evidence.empty()) << i.id;
  }
  EXPECT_TRUE(r.all_passed());
  EXPECT_GE(r.items.size(), 50u);
}

TEST(VerifyPaper, SubcaseItemCarriesTheValuation) {
  const auto r = verify_paper();
  auto it = std::find_if(r.items.begin(), r.items.end(),
                         [](const VerificationItem& i) { return i.id == "qnt-subcase-valuation"; });
  ASSERT_NE(it, r.items.end());
  EXPECT_TRUE(it->passed);
  std::string joined;
  for (const auto& e : it->evidence) joined += e + "\n";
  EXPECT_NE(joined.find("eps(c,b)"), std::string::npos) << joined;
}

TEST(VerifyPaper, CorruptingA_S2OnlyFailsItemsThatReadIt) {
  // Swap the roles of c and a in the final exchange conjunct.
  const Corpus corrupted = bundled_corpus().with_replaced(
      "A_S2", parse_formula("eps(a,b) & eps(c,d) -> eps(c,c) & (eps(b,c) -> eps(a,d) & eps(a,b))"));
  const auto r = verify_paper(corrupted);
  EXPECT_FALSE(r.all_passed());
  for (const auto& i : r.items) {
    const bool reads = std::find(i.schemata.begin(), i.schemata.end(), "A_S2") != i.schemata.end();
    if (!i.passed) EXPECT_TRUE(reads) << i.id << " failed without reading A_S2";
    if (!reads) EXPECT_TRUE(i.passed) << i.id;
  }
  auto failed = [&](const std::string& id) {
    auto it = std::find_if(r.items.begin(), r.items.end(),
                           [&](const VerificationItem& i) { return i.id == id; });
    return it != r.items.end() && !it->passed;
  };
  EXPECT_TRUE(failed("characteristic:A_S2"));
  EXPECT_TRUE(failed("proof:s2_from_axioms"));
}

TEST(VerifyPaper, WorkerCountDoesNotChangeTheReport) {
  EXPECT_EQ(to_json(verify_paper(bundled_corpus(), 1)).dump(),
            to_json(verify_paper(bundled_corpus(), 3)).dump());
}

TEST(Conjectures, EveryRowIsPopulatedAndCertifies) {
  const auto t = conjecture_report();
  EXPECT_EQ(t.established, established_names());
  ASSERT_EQ(t.rows.size(), conjecture_names().size());
  for (const auto& row : t.rows) {
    EXPECT_EQ(row.characterization.recovery.size(), 3u);
    EXPECT_TRUE(row.nontriviality) << row.schema.name();
    ASSERT_EQ(row.qnt.size(), 5u);
    for (const auto& q : row.qnt) EXPECT_TRUE(q) << row.schema.name();
    EXPECT_EQ(certify(row), std::nullopt) << row.schema.name();
  }
  EXPECT_EQ(t.rows.front().schema.name(), "A_k1");
}

TEST(Conjectures, AgreeWithNaiveRecomputation) {
  const auto t = conjecture_report();
  const Corpus& c = bundled_corpus();
  for (const auto& row : t.rows) {
    const Formula& body = row.schema.body();
    const auto& ch = row.characterization;
    EXPECT_EQ(ch.validity.is_theorem, oracle::l1_valid(body)) << row.schema.name();
    bool all = true;
    for (const auto& rec : ch.recovery) {
      const bool expected = oracle::recovers(body, axiom(rec.axiom).body(), 3) ||
                            oracle::recovers(body, axiom(rec.axiom).body(), 4);
      EXPECT_EQ(rec.recovered, expected) << row.schema.name() << " " << axiom_name(rec.axiom);
      all = all && expected;
    }
    EXPECT_EQ(ch.characteristic, all && oracle::l1_valid(body)) << row.schema.name();
    EXPECT_EQ(row.nontriviality->verdict == TrivialityVerdict::Trivial,
              oracle::trivial(body, a_t().body()))
        << row.schema.name();
    for (std::size_t k = 0; k < t.established.size(); ++k) {
      EXPECT_EQ(row.qnt[k]->verdict() == QntVerdict::QuasiTrivial,
                oracle::quasi_trivial(body, c.at(t.established[k]).body()))
          << row.schema.name() << " " << t.established[k];
    }
  }
}

}  // namespace
