#pragma once

// Name variables, epsilon atoms and the formula algebra.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace l1 {

/// A name variable. Identifiers match [a-z][a-z0-9_]*.
class NameVar {
 public:
  explicit NameVar(std::string id);

  const std::string& id() const noexcept { return id_; }

  friend bool operator==(const NameVar&, const NameVar&) = default;
  friend auto operator<=>(const NameVar&, const NameVar&) = default;

  static bool is_valid_identifier(std::string_view id) noexcept;

 private:
  std::string id_;
};

/// The ordered atom eps(subject, predicate).
struct Atom {
  NameVar subject;
  NameVar predicate;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

std::string to_string(const Atom& atom);

/// Immutable formula tree. And, Implies and Iff are surface sugar; every
/// semantic operation works on `desugar()`.
class Formula {
 public:
  enum class Kind : std::uint8_t { Epsilon, Not, Or, And, Implies, Iff };

  static Formula epsilon(NameVar subject, NameVar predicate);
  static Formula epsilon(Atom atom);
  static Formula negation(Formula operand);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);

  Kind kind() const noexcept;
  bool is_atom() const noexcept { return kind() == Kind::Epsilon; }
  bool is_core() const noexcept {
    return kind() == Kind::Epsilon || kind() == Kind::Not || kind() == Kind::Or;
  }

  /// Precondition: is_atom().
  const Atom& atom() const;
  /// Precondition: kind() == Not.
  const Formula& operand() const;
  /// Precondition: binary kind.
  const Formula& lhs() const;
  const Formula& rhs() const;

  /// Rewrites into the {!, |} core: A&B = !(!A|!B), A->B = !A|B,
  /// A<->B = (A->B)&(B->A).
  Formula desugar() const;

  /// Structural equality of surface trees.
  friend bool operator==(const Formula& a, const Formula& b);

  /// Node count of the surface tree.
  std::size_t size() const noexcept;

 private:
  struct Node;
  static Formula binary(Kind kind, Formula lhs, Formula rhs);
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Structural equality after desugaring both sides.
bool core_equal(const Formula& a, const Formula& b);

/// Variables in order of first occurrence (depth-first, left to right,
/// subject before predicate).
std::vector<NameVar> nv(const Formula& formula);

std::size_t count_nv(const Formula& formula);

/// Distinct atoms in order of first occurrence.
std::vector<Atom> atoms(const Formula& formula);

/// Appends atoms of `formula` not already present in `out`.
void collect_atoms(const Formula& formula, std::vector<Atom>& out);

/// A named formula together with its variable tuple.
class SchemaEntry {
 public:
  SchemaEntry(std::string name, Formula body);

  const std::string& name() const noexcept { return name_; }
  const Formula& body() const noexcept { return body_; }
  const std::vector<NameVar>& vars() const noexcept { return vars_; }
  std::size_t arity() const noexcept { return vars_.size(); }

  friend bool operator==(const SchemaEntry& a, const SchemaEntry& b) {
    return a.name_ == b.name_ && a.body_ == b.body_;
  }

 private:
  std::string name_;
  Formula body_;
  std::vector<NameVar> vars_;
};

/// Convenience builders for tests and built-in axioms.
inline Formula eps(std::string_view subject, std::string_view predicate) {
  return Formula::epsilon(NameVar(std::string(subject)),
                          NameVar(std::string(predicate)));
}
inline Formula operator!(const Formula& a) { return Formula::negation(a); }
inline Formula operator|(const Formula& a, const Formula& b) {
  return Formula::disjunction(a, b);
}
inline Formula operator&(const Formula& a, const Formula& b) {
  return Formula::conjunction(a, b);
}
inline Formula implies(const Formula& a, const Formula& b) {
  return Formula::implication(a, b);
}
inline Formula iff(const Formula& a, const Formula& b) {
  return Formula::equivalence(a, b);
}

}  // namespace l1
