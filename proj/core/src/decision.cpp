#include "l1/decision.hpp"

#include <algorithm>

#include "l1/error.hpp"

namespace l1 {

namespace {

struct HornClause {
  std::uint64_t premises;
  std::size_t conclusion;
};

class AdmissibleEnumerator {
 public:
  AdmissibleEnumerator(std::size_t n, ExchangeAxiom exchange) : n_(n), buckets_(n * n) {
    auto idx = [n](std::size_t x, std::size_t y) { return x * n + y; };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        add({bit(idx(a, b)), idx(a, a)});
        if (exchange == ExchangeAxiom::Ax3s) add({bit(idx(a, b)) | bit(idx(b, b)), idx(b, a)});
        for (std::size_t c = 0; c < n; ++c) {
          const std::uint64_t premises = bit(idx(a, b)) | bit(idx(b, c));
          add({premises, idx(a, c)});
          if (exchange == ExchangeAxiom::Ax3) add({premises, idx(b, a)});
        }
      }
    }
  }

  std::vector<std::uint64_t> run() {
    out_.clear();
    if (n_ == 0) {
      out_.push_back(0);
      return out_;
    }
    descend(n_ * n_, 0);
    return out_;
  }

 private:
  static std::uint64_t bit(std::size_t k) { return std::uint64_t{1} << k; }

  void add(HornClause clause) {
    // Instances whose conclusion is a premise hold in every valuation.
    if (clause.premises & bit(clause.conclusion)) return;
    std::size_t lowest = clause.conclusion;
    for (std::size_t k = 0; k < n_ * n_; ++k) {
      if (clause.premises & bit(k)) {
        lowest = std::min(lowest, k);
        break;
      }
    }
    buckets_[lowest].push_back(clause);
  }

  // Atoms above `k` are fixed in `mask`; deciding high bits first with 0
  // before 1 visits valuations in ascending index order.
  void descend(std::size_t k, std::uint64_t mask) {
    if (k == 0) {
      out_.push_back(mask);
      return;
    }
    const std::size_t atom = k - 1;
    for (std::uint64_t value = 0; value < 2; ++value) {
      const std::uint64_t next = mask | (value << atom);
      bool ok = true;
      for (const HornClause& c : buckets_[atom]) {
        if ((next & c.premises) == c.premises && !(next & bit(c.conclusion))) {
          ok = false;
          break;
        }
      }
      if (ok) descend(atom, next);
    }
  }

  std::size_t n_;
  std::vector<std::vector<HornClause>> buckets_;
  std::vector<std::uint64_t> out_;
};

}  // namespace

std::vector<Atom> atom_grid(const std::vector<NameVar>& pool) {
  std::vector<Atom> grid;
  grid.reserve(pool.size() * pool.size());
  for (const auto& x : pool) {
    for (const auto& y : pool) grid.push_back({x, y});
  }
  return grid;
}

AdmissibleSet admissible_valuations(const std::vector<NameVar>& pool,
                                    ExchangeAxiom exchange) {
  if (pool.size() > kMaxPool) {
    throw BudgetExceeded("variable pool of " + std::to_string(pool.size()) +
                         " exceeds the admissible-valuation cap of " +
                         std::to_string(kMaxPool));
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (pool[i] == pool[j]) throw DomainError("pool repeats '" + pool[i].id() + "'");
    }
  }
  auto masks = AdmissibleEnumerator(pool.size(), exchange).run();
  return AdmissibleSet(pool, atom_grid(pool), std::move(masks));
}

TheoremVerdict is_l1_theorem(const Formula& formula) {
  TheoremVerdict verdict;
  verdict.pool = nv(formula);
  AdmissibleSet set = admissible_valuations(verdict.pool);
  verdict.admissible_count = set.size();
  CompiledFormula compiled(formula, set.grid());
  std::vector<std::uint64_t> scratch;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!compiled.eval_mask(set.masks()[i], scratch)) {
      verdict.is_theorem = false;
      verdict.counter_valuation = set.valuation(i);
      break;
    }
  }
  return verdict;
}

bool is_admissible(const Valuation& v, const std::vector<NameVar>& pool,
                   ExchangeAxiom exchange) {
  auto e = [&](const NameVar& x, const NameVar& y) { return v.value(Atom{x, y}); };
  for (const auto& x : pool) {
    for (const auto& y : pool) {
      if (e(x, y) && !e(x, x)) return false;
      for (const auto& z : pool) {
        const bool exch_premise = exchange == ExchangeAxiom::Ax3 ? e(y, z) : e(y, y);
        if (e(x, y) && e(y, z) && !e(x, z)) return false;
        if (e(x, y) && exch_premise && !e(y, x)) return false;
      }
    }
  }
  return true;
}

}  // namespace l1
