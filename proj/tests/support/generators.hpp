#pragma once

// Seeded random formulas for the property tests.

#include <random>
#include <string>
#include <vector>

#include "l1/formula.hpp"

namespace gen {

inline std::vector<std::string> default_vars() { return {"a", "b", "c", "d"}; }

/// Random surface formula of at most `depth` connective levels.
inline l1::Formula formula(std::mt19937& rng, int depth,
                           const std::vector<std::string>& vars = default_vars()) {
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 0 : 6);
  switch (kind(rng)) {
    case 0:
    case 1:
      return l1::eps(vars[pick(rng)], vars[pick(rng)]);
    case 2:
      return !formula(rng, depth - 1, vars);
    case 3:
      return formula(rng, depth - 1, vars) | formula(rng, depth - 1, vars);
    case 4:
      return formula(rng, depth - 1, vars) & formula(rng, depth - 1, vars);
    case 5:
      return l1::implies(formula(rng, depth - 1, vars), formula(rng, depth - 1, vars));
    default:
      return l1::iff(formula(rng, depth - 1, vars), formula(rng, depth - 1, vars));
  }
}

/// A formula with exactly `n` distinct atoms drawn from a large pool, plus
/// repeats.
inline l1::Formula with_atoms(std::mt19937& rng, std::size_t n) {
  std::vector<l1::Formula> leaves;
  for (std::size_t i = 0; i < n; ++i) {
    leaves.push_back(l1::eps("x" + std::to_string(i), "x" + std::to_string(i % 3)));
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> op(0, 3);
  l1::Formula acc = leaves[0];
  for (std::size_t i = 1; i < n + n / 2; ++i) {
    const l1::Formula leaf = i < n ? leaves[i] : leaves[pick(rng)];
    switch (op(rng)) {
      case 0: acc = acc | leaf; break;
      case 1: acc = acc & !leaf; break;
      case 2: acc = l1::implies(acc, leaf); break;
      default: acc = l1::iff(leaf, acc); break;
    }
  }
  return acc;
}

}  // namespace gen
