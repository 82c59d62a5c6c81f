#pragma once

// Whether a schema is a single axiom schema characteristic of L1: valid in
// the admissible semantics, and its substitution instances over a small
// variable pool tautologically yield each of Ax1, Ax2, Ax3.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "l1/axioms.hpp"
#include "l1/decision.hpp"
#include "l1/formula.hpp"
#include "l1/hilbert.hpp"
#include "l1/semantics.hpp"
#include "l1/substitution.hpp"

namespace l1 {

struct AxiomRecovery {
  Axiom axiom = Axiom::Ax1;
  bool recovered = false;
  /// Pool the result refers to: where recovery succeeded, or the largest
  /// pool tried.
  std::size_t pool_size = 0;
  /// |pool|^arity instances formed at that pool.
  std::size_t instance_count = 0;
  /// Substitutions whose instances entail the axiom; shrunk to a small set.
  std::vector<Substitution> witness;
  /// When not recovered: satisfies every instance at the largest pool and
  /// falsifies the axiom.
  std::optional<Valuation> countermodel;

  friend bool operator==(const AxiomRecovery&, const AxiomRecovery&) = default;
};

/// Pool {a, b, c} or {a, b, c, d}.
std::vector<NameVar> recovery_pool(std::size_t size);

/// All maps from the schema's variables into the pool, first variable most
/// significant, pool order a < b < c < d.
std::vector<Substitution> pool_instances(const SchemaEntry& schema, std::size_t pool_size);

/// Recovery at exactly one pool. Throws DomainError unless 3 <= pool <= 4.
AxiomRecovery recover_axiom(const SchemaEntry& schema, Axiom axiom, std::size_t pool_size);

/// Ax1, Ax2, Ax3 in order; pool 3 first, then larger pools up to max_pool.
std::vector<AxiomRecovery> recover_axioms(const SchemaEntry& schema, std::size_t max_pool = 4);

/// entails({sigma(schema) : sigma in witness}, axiom).
bool recovery_replays(const SchemaEntry& schema, const AxiomRecovery& recovery);

/// A checkable script from the schema as an assumption to the axiom.
ProofScript recovery_script(const SchemaEntry& schema, const AxiomRecovery& recovery);

struct CharacterizationReport {
  SchemaEntry subject;
  TheoremVerdict validity;
  std::vector<AxiomRecovery> recovery;
  bool characteristic = false;
  std::size_t max_pool = 4;
  /// Name of a bundled assumption-free script that checks and concludes
  /// the subject's body.
  std::optional<std::string> derivation;

  /// "provable (derivation checked)", "valid (admissible semantics)" or
  /// "not valid".
  std::string validity_label() const;

  friend bool operator==(const CharacterizationReport&, const CharacterizationReport&) = default;
};

/// Replays the validity counter-valuation and every recovery witness or
/// countermodel; returns the first discrepancy.
std::optional<std::string> certify(const CharacterizationReport& report);

/// Throws BudgetExceeded above 5 variables.
CharacterizationReport is_characteristic(const SchemaEntry& schema, std::size_t max_pool = 4);

}  // namespace l1
