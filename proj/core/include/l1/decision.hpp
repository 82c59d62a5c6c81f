#pragma once

// Theoremhood by exhaustive enumeration of admissible valuations: truth
// assignments to the full atom grid over a variable pool that satisfy every
// instance of the three axiom schemata over that pool.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "l1/formula.hpp"
#include "l1/semantics.hpp"

namespace l1 {

/// Largest pool accepted by the enumerator (5 variables, 25 atoms).
inline constexpr std::size_t kMaxPool = 5;

/// Which exchange schema closes the admissibility filter.
enum class ExchangeAxiom { Ax3, Ax3s };

class AdmissibleSet {
 public:
  AdmissibleSet(std::vector<NameVar> pool, std::vector<Atom> grid,
                std::vector<std::uint64_t> masks)
      : pool_(std::move(pool)), grid_(std::move(grid)), masks_(std::move(masks)) {}

  const std::vector<NameVar>& pool() const noexcept { return pool_; }
  /// eps(p_i, p_j) at index i * |pool| + j.
  const std::vector<Atom>& grid() const noexcept { return grid_; }
  /// Bit k is the value of grid()[k]; ascending counter order.
  const std::vector<std::uint64_t>& masks() const noexcept { return masks_; }
  std::size_t size() const noexcept { return masks_.size(); }
  Valuation valuation(std::size_t i) const { return Valuation::from_index(grid_, masks_[i]); }

 private:
  std::vector<NameVar> pool_;
  std::vector<Atom> grid_;
  std::vector<std::uint64_t> masks_;
};

/// The atom grid in row-major pool order.
std::vector<Atom> atom_grid(const std::vector<NameVar>& pool);

/// Throws BudgetExceeded if the pool has more than kMaxPool variables.
AdmissibleSet admissible_valuations(const std::vector<NameVar>& pool,
                                    ExchangeAxiom exchange = ExchangeAxiom::Ax3);

/// Satisfies every axiom instance over `pool`. Throws DomainError if an
/// atom of the grid is missing from the valuation.
bool is_admissible(const Valuation& v, const std::vector<NameVar>& pool,
                   ExchangeAxiom exchange = ExchangeAxiom::Ax3);

struct TheoremVerdict {
  bool is_theorem = true;
  /// Present iff !is_theorem: admissible and falsifies the formula.
  std::optional<Valuation> counter_valuation;
  std::vector<NameVar> pool;
  /// Number of admissible valuations the verdict rests on.
  std::size_t admissible_count = 0;

  friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

/// Valid in every admissible valuation over nv(formula).
TheoremVerdict is_l1_theorem(const Formula& formula);

}  // namespace l1
