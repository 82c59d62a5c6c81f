#pragma once

// Triviality of a schema with respect to a reference schema, and
// quasi-triviality between two schemata. Every enumerated substitution
// either witnesses the equivalence or is refuted by a distinguishing
// valuation, so reports can be replayed without trusting the engine.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "l1/formula.hpp"
#include "l1/semantics.hpp"
#include "l1/substitution.hpp"

namespace l1 {

/// A substitution together with a valuation on which the substituted
/// schema and the comparison formula take different values.
struct Refutation {
  TrivialityMap map;
  Valuation valuation;

  friend bool operator==(const Refutation&, const Refutation&) = default;
};

enum class TrivialityVerdict { Trivial, Nontrivial };
std::string_view to_string(TrivialityVerdict v);

struct TrivialityReport {
  SchemaEntry subject;
  SchemaEntry reference;
  TrivialityVerdict verdict = TrivialityVerdict::Nontrivial;
  /// First map (in rho order) with sigma(subject) equivalent to reference.
  std::optional<TrivialityMap> witness;
  /// One per map enumerated before the witness; all n! when nontrivial.
  std::vector<Refutation> refutations;
  std::size_t maps_checked = 0;

  friend bool operator==(const TrivialityReport&, const TrivialityReport&) = default;
};

/// Throws CriterionInapplicable if arity(subject) < 3 or
/// arity(subject) < arity(reference).
TrivialityReport triviality(const SchemaEntry& subject, const SchemaEntry& reference,
                            const SweepOptions& options = {});

enum class QntVerdict { QuasiTrivial, QuasiNontrivial };
std::string_view to_string(QntVerdict v);
std::string_view to_string(QntCase c);

/// One direction of the quasi-triviality search.
struct QntBranch {
  QntCase direction = QntCase::BOntoA;
  QntVerdict verdict = QntVerdict::QuasiNontrivial;
  std::optional<TrivialityMap> witness;
  std::vector<Refutation> refutations;
  std::size_t maps_checked = 0;

  friend bool operator==(const QntBranch&, const QntBranch&) = default;
};

struct QntReport {
  SchemaEntry left;
  SchemaEntry right;
  /// The branch selected by the arities; decides the verdict.
  QntBranch primary;
  /// For equal arities, the search with the roles swapped (left's
  /// variables onto right's). Absent otherwise.
  std::optional<QntBranch> converse;
  /// Both schemata are nontrivial with respect to A_t, the standing
  /// hypothesis of the definition. Recorded, never enforced.
  bool left_nontrivial = false;
  bool right_nontrivial = false;

  QntVerdict verdict() const noexcept { return primary.verdict; }
  QntCase case_used() const noexcept { return primary.direction; }
  bool hypothesis_met() const noexcept { return left_nontrivial && right_nontrivial; }
  bool branches_agree() const noexcept {
    return !converse || converse->verdict == primary.verdict;
  }

  friend bool operator==(const QntReport&, const QntReport&) = default;
};

/// Throws CriterionInapplicable if either arity is below 3.
QntReport quasi_triviality(const SchemaEntry& left, const SchemaEntry& right,
                           const SweepOptions& options = {});

/// Sigma applied to the schema that receives it, for display and replay.
const SchemaEntry& substituted_side(const QntReport& report, const QntBranch& branch);
const SchemaEntry& compared_side(const QntReport& report, const QntBranch& branch);

struct QntMatrix {
  std::vector<SchemaEntry> entries;
  /// cells[i][j] compares entries[i] (left) with entries[j] (right); empty
  /// when the criterion is inapplicable. The diagonal is included.
  std::vector<std::vector<std::optional<QntReport>>> cells;
};

/// `workers` > 1 evaluates cells concurrently; results do not depend on it.
QntMatrix qnt_matrix(const std::vector<SchemaEntry>& entries, unsigned workers = 1);

/// A triple x, y, z with monotone arities, for the conditional
/// transitivity of quasi-triviality.
struct TransitivityCase {
  std::size_t x, y, z;
  bool premises_hold;
  bool conclusion_holds;
  bool violated() const noexcept { return premises_hold && !conclusion_holds; }
};

/// All index triples of applicable cells whose arities are monotone
/// (non-decreasing or non-increasing).
std::vector<TransitivityCase> transitivity_cases(const QntMatrix& matrix);

/// Replays a refutation: the two sides must differ on its valuation.
bool refutation_replays(const Refutation& r, const Formula& substituted,
                        const Formula& compared);

/// Replays every witness and refutation of a report; returns the first
/// discrepancy, or nothing when the report certifies itself.
std::optional<std::string> certify(const TrivialityReport& report);
std::optional<std::string> certify(const QntReport& report);

}  // namespace l1
