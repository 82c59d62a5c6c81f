#pragma once

// The bundled schema corpus, the regression run over the published claims,
// and the sweep over the conjectured schemata.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "l1/characterization.hpp"
#include "l1/criteria.hpp"
#include "l1/formula.hpp"

namespace l1 {

enum class CorpusGroup { Axiom, Reference, Established, Variant, Conjecture };
std::string_view to_string(CorpusGroup g);

/// Metadata for a bundled entry.
struct CatalogEntry {
  std::string_view name;
  CorpusGroup group;
  /// Where the schema is introduced, in words.
  std::string_view origin;
  /// Label printed in the source when it differs from `name`.
  std::string_view printed_label;
};

std::span<const CatalogEntry> corpus_catalog();
const CatalogEntry* catalog_entry(std::string_view name);

class Corpus {
 public:
  /// Throws DomainError on duplicate names or reserved fresh variables.
  explicit Corpus(std::vector<SchemaEntry> entries);
  /// Parses a schema file, then validates as above.
  static Corpus parse(std::string_view text);

  const std::vector<SchemaEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const SchemaEntry* find(std::string_view name) const noexcept;
  /// Throws DomainError("unknown schema ...").
  const SchemaEntry& at(std::string_view name) const;
  std::vector<SchemaEntry> select(std::span<const std::string> names) const;
  /// Copy with one body replaced, for fault-injection runs.
  Corpus with_replaced(std::string_view name, Formula body) const;

 private:
  std::vector<SchemaEntry> entries_;
};

std::string_view bundled_corpus_text();
const Corpus& bundled_corpus();

/// A_M8, A_S1, A_S2, A_S3N, A_S3Nd.
const std::vector<std::string>& established_names();
/// Bundled entries in the conjecture group, in file order.
std::vector<std::string> conjecture_names();

struct VerificationItem {
  std::string id;
  std::string claim;
  /// Corpus entries the check reads.
  std::vector<std::string> schemata;
  bool passed = false;
  std::vector<std::string> evidence;
};

struct PaperVerdictReport {
  std::vector<VerificationItem> items;
  bool all_passed() const noexcept;
  std::size_t failures() const noexcept;
};

PaperVerdictReport verify_paper(const Corpus& corpus = bundled_corpus(), unsigned workers = 1);

struct ConjectureRow {
  SchemaEntry schema;
  CharacterizationReport characterization;
  /// Absent when the criterion is inapplicable.
  std::optional<TrivialityReport> nontriviality;
  /// Against each established schema, in established_names() order.
  std::vector<std::optional<QntReport>> qnt;
};

struct ConjectureTable {
  std::vector<std::string> established;
  std::vector<ConjectureRow> rows;
};

ConjectureTable conjecture_report(const Corpus& corpus = bundled_corpus());

/// Re-derives every witness in the row from scratch and reports the first
/// discrepancy; empty when the row certifies itself.
std::optional<std::string> certify(const ConjectureRow& row);

}  // namespace l1
