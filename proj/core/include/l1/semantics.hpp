#pragma once

// Truth-table engine over epsilon atoms.
//
// Valuations over an ordered atom list are numbered as binary counters:
// bit i of the index is the truth value of atom i. Every sweep returns the
// lowest-index valuation that breaks the property, independent of how the
// index range is split across workers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "l1/formula.hpp"

namespace l1 {

class Valuation {
 public:
  Valuation() = default;
  /// `truth[i]` is the value of `domain[i]`.
  Valuation(std::vector<Atom> domain, std::vector<bool> truth);

  /// Valuation number `index` in counter order over `domain`.
  static Valuation from_index(std::vector<Atom> domain, std::uint64_t index);
  /// Every atom of `domain` in `true_atoms` is true, the rest false.
  static Valuation from_true_atoms(std::vector<Atom> domain,
                                   std::span<const Atom> true_atoms);

  const std::vector<Atom>& domain() const noexcept { return domain_; }
  bool contains(const Atom& atom) const noexcept;
  /// Throws DomainError for atoms outside the domain.
  bool value(const Atom& atom) const;
  std::vector<Atom> true_atoms() const;
  std::vector<Atom> false_atoms() const;
  std::uint64_t index() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::vector<Atom> domain_;
  std::vector<bool> truth_;
};

/// holds == true iff witness is empty.
struct SemanticsVerdict {
  bool holds = true;
  std::optional<Valuation> witness;

  friend bool operator==(const SemanticsVerdict&, const SemanticsVerdict&) = default;
};

struct SweepOptions {
  /// Worker threads for the valuation sweep; 0 means hardware concurrency.
  unsigned workers = 1;
  /// Hard cap on the number of atoms of one sweep (2^max_atoms valuations).
  std::size_t max_atoms = 30;
};

/// Throws DomainError if an atom of `formula` is outside `valuation`.
bool evaluate(const Formula& formula, const Valuation& valuation);

SemanticsVerdict is_tautology(const Formula& formula, const SweepOptions& options = {});

/// Tautology check of a <-> b over atoms(a) followed by the new atoms of b.
SemanticsVerdict are_equivalent(const Formula& a, const Formula& b,
                                const SweepOptions& options = {});

/// Every valuation making all premises true makes `goal` true. Atoms are
/// ordered premise by premise, then the goal.
SemanticsVerdict entails(std::span<const Formula> premises, const Formula& goal,
                         const SweepOptions& options = {});

/// Postfix program over the desugared core, evaluated 64 valuations at a
/// time (one bit per valuation) or on a single bitmask valuation.
class CompiledFormula {
 public:
  /// Throws DomainError if `formula` has an atom outside `domain`.
  CompiledFormula(const Formula& formula, std::span<const Atom> domain);

  /// `atom_words[i]` carries atom i across 64 valuations.
  std::uint64_t eval_words(std::span<const std::uint64_t> atom_words,
                           std::vector<std::uint64_t>& scratch) const;
  /// Bit i of `mask` is the value of atom i.
  bool eval_mask(std::uint64_t mask, std::vector<std::uint64_t>& scratch) const;

 private:
  enum class Code : std::uint8_t { Atom, Not, Or };
  struct Op {
    Code code;
    std::uint32_t atom;
  };
  std::vector<Op> ops_;
};

}  // namespace l1
