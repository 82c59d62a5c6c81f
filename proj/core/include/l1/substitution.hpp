#pragma once

// Uniform simultaneous substitution of name variables and the enumerators
// of candidate substitutions used by the comparison criteria.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "l1/formula.hpp"

namespace l1 {

/// Finite map on name variables; unmapped variables are fixed. Pairs keep
/// insertion order for printing, equality ignores it.
class Substitution {
 public:
  Substitution() = default;
  /// Throws DomainError if a source variable repeats.
  explicit Substitution(std::vector<std::pair<NameVar, NameVar>> pairs);

  const std::vector<std::pair<NameVar, NameVar>>& pairs() const noexcept { return pairs_; }
  bool empty() const noexcept { return pairs_.empty(); }

  /// Image of `v` (identity outside the domain).
  const NameVar& operator()(const NameVar& v) const;

  /// Injective on its domain.
  bool is_injective() const;
  /// Inverse of an injective substitution.
  Substitution inverse() const;

  friend bool operator==(const Substitution& a, const Substitution& b);

 private:
  std::vector<std::pair<NameVar, NameVar>> pairs_;
};

/// Every atom eps(u,v) becomes eps(s(u), s(v)); all variables are replaced
/// at once, so images are never substituted again.
Formula apply(const Substitution& sigma, const Formula& formula);

/// `{a->b, c->d}`
std::string print_substitution(const Substitution& sigma);
/// Accepts the printed form; `{}` is the identity. Throws ParseError.
Substitution parse_substitution(std::string_view text);

/// A bijection from a schema's variables onto reference variables padded
/// with fresh variables. `rho` is 0-based: source position rho[i] maps to
/// target i.
struct TrivialityMap {
  Substitution sigma;
  std::vector<std::size_t> rho;

  friend bool operator==(const TrivialityMap&, const TrivialityMap&) = default;
};

/// Fresh pools: y1, y2, ... for triviality, u1, ... and v1, ... for the two
/// quasi-triviality cases.
enum class FreshPool : char { Y = 'y', U = 'u', V = 'v' };

/// `prefix` followed by a positive decimal index.
bool is_reserved_fresh_name(std::string_view id) noexcept;

/// All n! bijections sigma with sigma(source[rho[i]]) = target_i, where the
/// targets are `reference` followed by n - r fresh variables, in
/// lexicographic order of rho. Throws CriterionInapplicable if n < r and
/// DomainError if a fresh name collides with either tuple.
std::vector<TrivialityMap> triviality_maps(const std::vector<NameVar>& source,
                                           const std::vector<NameVar>& reference,
                                           FreshPool pool = FreshPool::Y);

/// Which schema receives the substitution.
enum class QntCase {
  /// arity(A) <= arity(B): B's variables go onto A's plus u-fresh.
  BOntoA,
  /// arity(A) > arity(B): A's variables go onto B's plus v-fresh.
  AOntoB,
};

struct QntMaps {
  QntCase direction;
  std::vector<TrivialityMap> maps;
};

/// Throws CriterionInapplicable when either arity is below 3.
QntMaps qnt_maps(const SchemaEntry& a, const SchemaEntry& b);

}  // namespace l1
