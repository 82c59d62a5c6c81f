#include "l1/characterization.hpp"

#include <algorithm>

#include "l1/decision.hpp"
#include "l1/error.hpp"

namespace l1 {

namespace {

// Pair search is skipped above this many instances; greedy shrinking still
// runs.
constexpr std::size_t kPairSearchLimit = 300;

std::vector<Formula> instances_of(const SchemaEntry& schema,
                                  const std::vector<Substitution>& maps) {
  std::vector<Formula> out;
  out.reserve(maps.size());
  for (const auto& s : maps) out.push_back(apply(s, schema.body()));
  return out;
}

bool entails_all(const std::vector<Formula>& premises, const Formula& goal) {
  return entails(premises, goal).holds;
}

// Singletons, then pairs, then grow-and-prune over the instance list.
std::vector<std::size_t> shrink(const std::vector<Formula>& gamma, const Formula& goal) {
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (entails_all({gamma[i]}, goal)) return {i};
  }
  if (gamma.size() <= kPairSearchLimit) {
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      for (std::size_t j = i + 1; j < gamma.size(); ++j) {
        if (entails_all({gamma[i], gamma[j]}, goal)) return {i, j};
      }
    }
  }
  std::vector<std::size_t> kept;
  std::vector<Formula> current;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    kept.push_back(i);
    current.push_back(gamma[i]);
    if (entails_all(current, goal)) break;
  }
  for (std::size_t k = kept.size(); k-- > 0;) {
    std::vector<Formula> without;
    for (std::size_t m = 0; m < kept.size(); ++m) {
      if (m != k) without.push_back(gamma[kept[m]]);
    }
    if (entails_all(without, goal)) kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return kept;
}

std::optional<std::string> checked_derivation(const SchemaEntry& schema) {
  static const std::vector<std::pair<ProofScript, bool>> scripts = [] {
    std::vector<std::pair<ProofScript, bool>> out;
    for (auto& s : bundled_proof_scripts()) {
      const bool ok = s.assumptions.empty() && s.hypotheses.empty() && check_proof(s).ok;
      out.emplace_back(std::move(s), ok);
    }
    return out;
  }();
  for (const auto& [script, ok] : scripts) {
    if (ok && core_equal(script.conclusion(), schema.body())) return script.name;
  }
  return std::nullopt;
}

}  // namespace

std::vector<NameVar> recovery_pool(std::size_t size) {
  static const char* const kNames[] = {"a", "b", "c", "d"};
  if (size < 3 || size > 4) {
    throw DomainError("recovery pool must have 3 or 4 variables, got " + std::to_string(size));
  }
  std::vector<NameVar> pool;
  for (std::size_t i = 0; i < size; ++i) pool.emplace_back(kNames[i]);
  return pool;
}

std::vector<Substitution> pool_instances(const SchemaEntry& schema, std::size_t pool_size) {
  const auto pool = recovery_pool(pool_size);
  const auto& vars = schema.vars();
  std::vector<std::size_t> digits(vars.size(), 0);
  std::vector<Substitution> out;
  while (true) {
    std::vector<std::pair<NameVar, NameVar>> pairs;
    for (std::size_t i = 0; i < vars.size(); ++i) pairs.emplace_back(vars[i], pool[digits[i]]);
    out.emplace_back(std::move(pairs));
    std::size_t pos = vars.size();
    while (pos > 0 && ++digits[pos - 1] == pool.size()) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

AxiomRecovery recover_axiom(const SchemaEntry& schema, Axiom which, std::size_t pool_size) {
  const auto maps = pool_instances(schema, pool_size);
  const auto gamma = instances_of(schema, maps);
  const Formula& goal = axiom(which).body();

  AxiomRecovery r;
  r.axiom = which;
  r.pool_size = pool_size;
  r.instance_count = maps.size();
  SemanticsVerdict full = entails(gamma, goal);
  if (!full.holds) {
    r.countermodel = std::move(full.witness);
    return r;
  }
  r.recovered = true;
  for (std::size_t i : shrink(gamma, goal)) r.witness.push_back(maps[i]);
  return r;
}

std::vector<AxiomRecovery> recover_axioms(const SchemaEntry& schema, std::size_t max_pool) {
  if (max_pool < 3 || max_pool > 4) {
    throw DomainError("max pool must be 3 or 4, got " + std::to_string(max_pool));
  }
  std::vector<AxiomRecovery> out;
  for (Axiom a : {Axiom::Ax1, Axiom::Ax2, Axiom::Ax3}) {
    AxiomRecovery r = recover_axiom(schema, a, 3);
    for (std::size_t p = 4; !r.recovered && p <= max_pool; ++p) r = recover_axiom(schema, a, p);
    out.push_back(std::move(r));
  }
  return out;
}

bool recovery_replays(const SchemaEntry& schema, const AxiomRecovery& recovery) {
  if (!recovery.recovered || recovery.witness.empty()) return false;
  return entails_all(instances_of(schema, recovery.witness), axiom(recovery.axiom).body());
}

ProofScript recovery_script(const SchemaEntry& schema, const AxiomRecovery& recovery) {
  if (!recovery.recovered) {
    throw DomainError(std::string(axiom_name(recovery.axiom)) + " was not recovered from " +
                      schema.name());
  }
  ProofScript script;
  script.name = schema.name() + "_recovers_" + std::string(axiom_name(recovery.axiom));
  script.assumptions.push_back(schema);
  Justification conseq;
  conseq.rule = Justification::Rule::TautConseq;
  for (std::size_t i = 0; i < recovery.witness.size(); ++i) {
    Justification j;
    j.rule = Justification::Rule::Schema;
    j.name = schema.name();
    j.sigma = recovery.witness[i];
    script.lines.push_back({apply(j.sigma, schema.body()), std::move(j), {i + 1, 1}});
    conseq.refs.push_back(i + 1);
  }
  script.lines.push_back(
      {axiom(recovery.axiom).body(), std::move(conseq), {recovery.witness.size() + 1, 1}});
  return script;
}

std::string CharacterizationReport::validity_label() const {
  if (!validity.is_theorem) return "not valid";
  return derivation ? "provable (derivation checked)" : "valid (admissible semantics)";
}

CharacterizationReport is_characteristic(const SchemaEntry& schema, std::size_t max_pool) {
  CharacterizationReport report{schema, is_l1_theorem(schema.body()),
                                recover_axioms(schema, max_pool), false, max_pool,
                                std::nullopt};
  report.characteristic =
      report.validity.is_theorem &&
      std::all_of(report.recovery.begin(), report.recovery.end(),
                  [](const AxiomRecovery& r) { return r.recovered; });
  if (report.validity.is_theorem) report.derivation = checked_derivation(schema);
  return report;
}

std::optional<std::string> certify(const CharacterizationReport& report) {
  const auto& v = report.validity;
  if (v.is_theorem == v.counter_valuation.has_value()) {
    return std::string("validity verdict and counter-valuation disagree");
  }
  if (v.counter_valuation) {
    if (!is_admissible(*v.counter_valuation, v.pool)) {
      return std::string("counter-valuation is not admissible");
    }
    if (evaluate(report.subject.body(), *v.counter_valuation)) {
      return std::string("counter-valuation does not falsify the schema");
    }
  }
  bool all = true;
  for (const auto& r : report.recovery) {
    const std::string ax(axiom_name(r.axiom));
    all = all && r.recovered;
    if (r.recovered) {
      if (!recovery_replays(report.subject, r)) return ax + " witness set does not entail it";
      continue;
    }
    if (!r.countermodel) return ax + " failure carries no countermodel";
    try {
      for (const auto& s : pool_instances(report.subject, r.pool_size)) {
        if (!evaluate(apply(s, report.subject.body()), *r.countermodel)) {
          return ax + " countermodel falsifies instance " + print_substitution(s);
        }
      }
      if (evaluate(axiom(r.axiom).body(), *r.countermodel)) {
        return ax + " countermodel satisfies the axiom";
      }
    } catch (const DomainError& e) {
      return ax + " countermodel: " + e.what();
    }
  }
  if (report.characteristic != (v.is_theorem && all)) {
    return std::string("characteristic flag disagrees with its parts");
  }
  return std::nullopt;
}

}  // namespace l1
