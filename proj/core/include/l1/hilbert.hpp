#pragma once

// Line-by-line checker for Hilbert-style derivations.
//
// Script text:
//
//   # comment
//   @name      <label>
//   @proves    <schema name>          conclusion transcribes this schema
//   @assume    <name> := <formula>    schematic assumption
//   @hypothesis <name> := <formula>   local hypothesis (blocks SUBST)
//   @repaired  <text>                 the script is a reconstruction
//   @note      <text>
//   <formula> ; <JUSTIFICATION>
//
// Justifications: TAUT | AXIOM(Ax1|Ax2|Ax3|Ax3s[, {sigma}])
//   | SCHEMA(name[, {sigma}]) | HYP(name) | MP(i, j) | SUBST(i, {sigma})
//   | TAUTCONSEQ(i, j, ...). Line numbers are 1-based and count proof lines
// only. MP(i, j) needs line j to be (line i -> this line).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "l1/error.hpp"
#include "l1/formula.hpp"
#include "l1/semantics.hpp"
#include "l1/substitution.hpp"

namespace l1 {

struct Justification {
  enum class Rule { Taut, Axiom, Schema, Hypothesis, ModusPonens, Subst, TautConseq };

  Rule rule = Rule::Taut;
  /// Axiom, schema or hypothesis name.
  std::string name;
  Substitution sigma;
  /// 1-based references to earlier lines.
  std::vector<std::size_t> refs;
};

std::string to_string(const Justification& j);

struct ProofLine {
  Formula formula;
  Justification justification;
  SourceSpan span;
};

struct ProofScript {
  std::string name;
  std::optional<std::string> proves;
  /// Closed under substitution.
  std::vector<SchemaEntry> assumptions;
  /// Not closed under substitution; a script with hypotheses cannot use SUBST.
  std::vector<SchemaEntry> hypotheses;
  std::optional<std::string> repaired;
  std::vector<std::string> notes;
  std::vector<ProofLine> lines;

  /// Last line. Throws DomainError for an empty script.
  const Formula& conclusion() const;
};

/// Throws ParseError with the offending line and column.
ProofScript parse_proof_script(std::string_view text, std::string fallback_name = {});
std::string print_proof_script(const ProofScript& script);

struct LineCheck {
  std::size_t line = 0;
  bool ok = false;
  std::string rule;
  std::string detail;
  /// Sub-verdict for TAUT and TAUTCONSEQ lines.
  std::optional<SemanticsVerdict> semantics;
};

struct ProofCheckResult {
  std::string script;
  bool ok = false;
  std::optional<std::size_t> first_failure;
  std::string reason;
  std::vector<LineCheck> lines;
};

/// Checks every line; failures are reported, not thrown.
ProofCheckResult check_proof(const ProofScript& script);

struct BundledProof {
  std::string_view file;
  std::string_view text;
};

/// The derivation scripts shipped with the library.
std::span<const BundledProof> bundled_proof_texts();
std::vector<ProofScript> bundled_proof_scripts();
std::vector<ProofCheckResult> check_bundled_proofs();

}  // namespace l1
