#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. Nothing here shares code with the engines beyond the formula
// tree itself: evaluation walks the surface syntax, atoms are kept in a
// plain vector, substitutions rebuild the tree, and every enumeration is
// redone from scratch on each call.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "l1/formula.hpp"

namespace oracle {

using AtomKey = std::pair<std::string, std::string>;

/// Distinct atoms of all formulas, first occurrence order.
std::vector<AtomKey> atom_list(const std::vector<l1::Formula>& formulas);

/// Bit i of `bits` is the value of atoms[i].
bool eval(const l1::Formula& f, const std::vector<AtomKey>& atoms, std::uint64_t bits);

/// Variables in first-occurrence order, subject before predicate.
std::vector<std::string> vars(const l1::Formula& f);

l1::Formula rename(const l1::Formula& f, const std::map<std::string, std::string>& m);

bool tautology(const l1::Formula& f);
/// Lowest counter index over atom_list({f}) falsifying f, or -1.
std::int64_t first_falsifier(const l1::Formula& f);
bool equivalent(const l1::Formula& a, const l1::Formula& b);
bool entails(const std::vector<l1::Formula>& premises, const l1::Formula& goal);

/// Every assignment to the pool's atom grid satisfying all axiom instances.
/// `kanai` swaps the exchange axiom for its simplified form.
std::size_t admissible_count(const std::vector<std::string>& pool, bool kanai = false);
bool l1_valid(const l1::Formula& f);

/// Some bijection of the subject's variables onto the reference's variables
/// plus fresh padding makes the two equivalent.
bool trivial(const l1::Formula& subject, const l1::Formula& reference);
/// Substitution goes onto the schema with fewer variables (the left one on
/// ties).
bool quasi_trivial(const l1::Formula& left, const l1::Formula& right);

/// Instances of `schema` over pool {a, b, c[, d]} entail `goal`.
bool recovers(const l1::Formula& schema, const l1::Formula& goal, std::size_t pool_size);

}  // namespace oracle
