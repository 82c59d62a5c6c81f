#include "l1/criteria.hpp"

#include <atomic>
#include <thread>

#include "l1/axioms.hpp"
#include "l1/error.hpp"

namespace l1 {

std::string_view to_string(TrivialityVerdict v) {
  return v == TrivialityVerdict::Trivial ? "trivial" : "nontrivial";
}

std::string_view to_string(QntVerdict v) {
  return v == QntVerdict::QuasiTrivial ? "quasi-trivial" : "quasi-nontrivial";
}

std::string_view to_string(QntCase c) {
  return c == QntCase::BOntoA ? "case1" : "case2";
}

namespace {

struct SearchResult {
  std::optional<TrivialityMap> witness;
  std::vector<Refutation> refutations;
  std::size_t checked = 0;
};

// Tries each map in order until sigma(target) is equivalent to `compared`.
SearchResult search(const std::vector<TrivialityMap>& maps, const Formula& target,
                    const Formula& compared, const SweepOptions& options) {
  SearchResult out;
  for (const TrivialityMap& m : maps) {
    ++out.checked;
    SemanticsVerdict v = are_equivalent(apply(m.sigma, target), compared, options);
    if (v.holds) {
      out.witness = m;
      break;
    }
    out.refutations.push_back({m, std::move(*v.witness)});
  }
  return out;
}

QntBranch run_branch(QntCase direction, const std::vector<TrivialityMap>& maps,
                     const SchemaEntry& left, const SchemaEntry& right,
                     const SweepOptions& options) {
  const bool b_onto_a = direction == QntCase::BOntoA;
  SearchResult r = search(maps, b_onto_a ? right.body() : left.body(),
                          b_onto_a ? left.body() : right.body(), options);
  QntBranch branch;
  branch.direction = direction;
  branch.verdict = r.witness ? QntVerdict::QuasiTrivial : QntVerdict::QuasiNontrivial;
  branch.witness = std::move(r.witness);
  branch.refutations = std::move(r.refutations);
  branch.maps_checked = r.checked;
  return branch;
}

bool nontrivial_at(const SchemaEntry& e, const SweepOptions& options) {
  return triviality(e, a_t(), options).verdict == TrivialityVerdict::Nontrivial;
}

QntReport quasi_triviality_with(const SchemaEntry& left, const SchemaEntry& right,
                                bool left_nt, bool right_nt, const SweepOptions& options) {
  QntMaps primary = qnt_maps(left, right);
  QntReport report{left, right, run_branch(primary.direction, primary.maps, left, right, options),
                   std::nullopt, left_nt, right_nt};
  if (left.arity() == right.arity()) {
    auto maps = triviality_maps(left.vars(), right.vars(), FreshPool::V);
    report.converse = run_branch(QntCase::AOntoB, maps, left, right, options);
  }
  return report;
}

}  // namespace

TrivialityReport triviality(const SchemaEntry& subject, const SchemaEntry& reference,
                            const SweepOptions& options) {
  if (subject.arity() < 3) {
    throw CriterionInapplicable("criterion inapplicable: " + subject.name() + " has " +
                                std::to_string(subject.arity()) +
                                " variables, at least 3 are required");
  }
  auto maps = triviality_maps(subject.vars(), reference.vars(), FreshPool::Y);
  SearchResult r = search(maps, subject.body(), reference.body(), options);
  TrivialityReport report{subject, reference,
                          r.witness ? TrivialityVerdict::Trivial : TrivialityVerdict::Nontrivial,
                          std::move(r.witness), std::move(r.refutations), r.checked};
  return report;
}

QntReport quasi_triviality(const SchemaEntry& left, const SchemaEntry& right,
                           const SweepOptions& options) {
  // Validate arities before the (costlier) hypothesis bookkeeping.
  (void)qnt_maps(left, right);
  return quasi_triviality_with(left, right, nontrivial_at(left, options),
                               nontrivial_at(right, options), options);
}

const SchemaEntry& substituted_side(const QntReport& report, const QntBranch& branch) {
  return branch.direction == QntCase::BOntoA ? report.right : report.left;
}

const SchemaEntry& compared_side(const QntReport& report, const QntBranch& branch) {
  return branch.direction == QntCase::BOntoA ? report.left : report.right;
}

QntMatrix qnt_matrix(const std::vector<SchemaEntry>& entries, unsigned workers) {
  const std::size_t n = entries.size();
  QntMatrix matrix{entries, std::vector<std::vector<std::optional<QntReport>>>(
                                n, std::vector<std::optional<QntReport>>(n))};
  std::vector<char> nontrivial(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].arity() >= 3) nontrivial[i] = nontrivial_at(entries[i], {}) ? 1 : 0;
  }

  auto cell = [&](std::size_t k) {
    const std::size_t i = k / n;
    const std::size_t j = k % n;
    if (entries[i].arity() < 3 || entries[j].arity() < 3) return;
    matrix.cells[i][j] =
        quasi_triviality_with(entries[i], entries[j], nontrivial[i] != 0, nontrivial[j] != 0, {});
  };

  if (workers <= 1) {
    for (std::size_t k = 0; k < n * n; ++k) cell(k);
    return matrix;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < n * n; k = next++) cell(k);
      });
    }
  }
  return matrix;
}

std::vector<TransitivityCase> transitivity_cases(const QntMatrix& matrix) {
  std::vector<TransitivityCase> out;
  const std::size_t n = matrix.entries.size();
  auto qt = [&](std::size_t i, std::size_t j) -> std::optional<bool> {
    const auto& c = matrix.cells[i][j];
    if (!c) return std::nullopt;
    return c->verdict() == QntVerdict::QuasiTrivial;
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t ax = matrix.entries[x].arity();
        const std::size_t ay = matrix.entries[y].arity();
        const std::size_t az = matrix.entries[z].arity();
        const bool monotone = (ax <= ay && ay <= az) || (ax >= ay && ay >= az);
        if (!monotone) continue;
        auto xy = qt(x, y);
        auto yz = qt(y, z);
        auto xz = qt(x, z);
        if (!xy || !yz || !xz) continue;
        out.push_back({x, y, z, *xy && *yz, *xz});
      }
    }
  }
  return out;
}

bool refutation_replays(const Refutation& r, const Formula& substituted,
                        const Formula& compared) {
  try {
    return evaluate(apply(r.map.sigma, substituted), r.valuation) !=
           evaluate(compared, r.valuation);
  } catch (const DomainError&) {
    return false;
  }
}

namespace {

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::optional<std::string> certify_search(const std::optional<TrivialityMap>& witness,
                                          const std::vector<Refutation>& refutations,
                                          std::size_t maps_checked, std::size_t arity,
                                          const Formula& substituted, const Formula& compared) {
  if (witness) {
    if (!are_equivalent(apply(witness->sigma, substituted), compared).holds) {
      return "witness " + print_substitution(witness->sigma) + " does not give an equivalence";
    }
    if (refutations.size() + 1 != maps_checked) return "refutation count mismatch";
  } else if (refutations.size() != factorial(arity) || maps_checked != refutations.size()) {
    return "expected " + std::to_string(factorial(arity)) + " refutations, found " +
           std::to_string(refutations.size());
  }
  for (const auto& r : refutations) {
    if (!r.map.sigma.is_injective()) {
      return "refuted map " + print_substitution(r.map.sigma) + " is not injective";
    }
    if (!refutation_replays(r, substituted, compared)) {
      return "refutation of " + print_substitution(r.map.sigma) + " does not replay";
    }
  }
  return std::nullopt;
}

std::optional<std::string> certify_branch(const QntReport& report, const QntBranch& b) {
  const SchemaEntry& sub = substituted_side(report, b);
  return certify_search(b.witness, b.refutations, b.maps_checked, sub.arity(), sub.body(),
                        compared_side(report, b).body());
}

}  // namespace

std::optional<std::string> certify(const TrivialityReport& report) {
  if ((report.verdict == TrivialityVerdict::Trivial) != report.witness.has_value()) {
    return std::string("verdict and witness disagree");
  }
  return certify_search(report.witness, report.refutations, report.maps_checked,
                        report.subject.arity(), report.subject.body(), report.reference.body());
}

std::optional<std::string> certify(const QntReport& report) {
  for (const QntBranch* b : {&report.primary, report.converse ? &*report.converse : nullptr}) {
    if (!b) continue;
    if ((b->verdict == QntVerdict::QuasiTrivial) != b->witness.has_value()) {
      return std::string("verdict and witness disagree in ") + std::string(to_string(b->direction));
    }
    if (auto err = certify_branch(report, *b)) return err;
  }
  return std::nullopt;
}

}  // namespace l1
