#pragma once

// JSON and plain-text rendering of every report type. The JSON shape is
// documented in docs/json-reports.md; reports that carry witnesses also
// parse back.

#include <string>

#include <nlohmann/json.hpp>

#include "l1/characterization.hpp"
#include "l1/corpus.hpp"
#include "l1/criteria.hpp"
#include "l1/decision.hpp"
#include "l1/hilbert.hpp"
#include "l1/semantics.hpp"

namespace l1 {

/// Key order is preserved so output is stable and reads top-down.
using Json = nlohmann::ordered_json;

Json to_json(const Valuation& v);
Json to_json(const Substitution& s);
Json to_json(const TrivialityMap& m);
Json to_json(const SchemaEntry& e);
Json to_json(const SemanticsVerdict& v);
Json to_json(const TheoremVerdict& v);
Json to_json(const TrivialityReport& r);
Json to_json(const QntBranch& b);
Json to_json(const QntReport& r);
Json to_json(const QntMatrix& m);
Json to_json(const AxiomRecovery& r);
Json to_json(const CharacterizationReport& r);
Json to_json(const ProofCheckResult& r);
Json to_json(const PaperVerdictReport& r);
Json to_json(const ConjectureTable& t);

/// Inverses for the witness-carrying types. Throw ParseError (span 1:1) on a
/// shape mismatch.
Valuation valuation_from_json(const Json& j);
Substitution substitution_from_json(const Json& j);
TrivialityMap triviality_map_from_json(const Json& j);
SchemaEntry schema_from_json(const Json& j);
TheoremVerdict theorem_verdict_from_json(const Json& j);
TrivialityReport triviality_report_from_json(const Json& j);
QntReport qnt_report_from_json(const Json& j);
CharacterizationReport characterization_from_json(const Json& j);

/// `t: eps(a,b) eps(a,a) | f: eps(b,a)`
std::string format_valuation(const Valuation& v);
/// `(1 2 3 4)`, 1-based.
std::string format_rho(const std::vector<std::size_t>& rho);

std::string to_text(const SemanticsVerdict& v, const std::string& subject);
std::string to_text(const TheoremVerdict& v, const std::string& subject);
std::string to_text(const TrivialityReport& r);
std::string to_text(const QntReport& r);
std::string to_text(const QntMatrix& m);
std::string to_text(const CharacterizationReport& r);
std::string to_text(const ProofCheckResult& r);
std::string to_text(const PaperVerdictReport& r);
std::string to_text(const ConjectureTable& t);

}  // namespace l1
