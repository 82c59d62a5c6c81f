#include "l1/formula.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "l1/error.hpp"

namespace l1 {

NameVar::NameVar(std::string id) : id_(std::move(id)) {
  if (!is_valid_identifier(id_)) {
    throw DomainError("invalid name variable '" + id_ + "'");
  }
}

bool NameVar::is_valid_identifier(std::string_view id) noexcept {
  if (id.empty() || id.front() < 'a' || id.front() > 'z') return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::string to_string(const Atom& atom) {
  return "eps(" + atom.subject.id() + "," + atom.predicate.id() + ")";
}

struct Formula::Node {
  Kind kind = Kind::Epsilon;
  std::optional<Atom> atom;
  // One child for Not, two for the binary kinds.
  std::vector<Formula> children;
  std::size_t size = 1;
};

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

Formula Formula::epsilon(NameVar subject, NameVar predicate) {
  return epsilon(Atom{std::move(subject), std::move(predicate)});
}

Formula Formula::epsilon(Atom atom) {
  auto node = std::make_shared<Node>();
  node->atom = std::move(atom);
  return Formula(std::move(node));
}

Formula Formula::negation(Formula operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->size = operand.size() + 1;
  node->children.push_back(std::move(operand));
  return Formula(std::move(node));
}

Formula Formula::binary(Kind kind, Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->size = lhs.size() + rhs.size() + 1;
  node->children.reserve(2);
  node->children.push_back(std::move(lhs));
  node->children.push_back(std::move(rhs));
  return Formula(std::move(node));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return binary(Kind::Or, std::move(lhs), std::move(rhs));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return binary(Kind::And, std::move(lhs), std::move(rhs));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return binary(Kind::Implies, std::move(lhs), std::move(rhs));
}

Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return binary(Kind::Iff, std::move(lhs), std::move(rhs));
}

const Atom& Formula::atom() const {
  if (kind() != Kind::Epsilon) throw DomainError("formula is not an atom");
  return *node_->atom;
}

const Formula& Formula::operand() const {
  if (kind() != Kind::Not) throw DomainError("formula is not a negation");
  return node_->children[0];
}

const Formula& Formula::lhs() const {
  if (kind() == Kind::Epsilon || kind() == Kind::Not) {
    throw DomainError("formula is not binary");
  }
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (kind() == Kind::Epsilon || kind() == Kind::Not) {
    throw DomainError("formula is not binary");
  }
  return node_->children[1];
}

std::size_t Formula::size() const noexcept { return node_->size; }

Formula Formula::desugar() const {
  switch (kind()) {
    case Kind::Epsilon:
      return *this;
    case Kind::Not: {
      Formula inner = operand().desugar();
      return inner == operand() ? *this : negation(std::move(inner));
    }
    case Kind::Or: {
      Formula l = lhs().desugar();
      Formula r = rhs().desugar();
      if (l == lhs() && r == rhs()) return *this;
      return disjunction(std::move(l), std::move(r));
    }
    case Kind::And:
      return negation(disjunction(negation(lhs().desugar()),
                                  negation(rhs().desugar())));
    case Kind::Implies:
      return disjunction(negation(lhs().desugar()), rhs().desugar());
    case Kind::Iff:
      return conjunction(implication(lhs(), rhs()), implication(rhs(), lhs()))
          .desugar();
  }
  return *this;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Formula::Kind::Epsilon:
      return a.atom() == b.atom();
    case Formula::Kind::Not:
      return a.operand() == b.operand();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

bool core_equal(const Formula& a, const Formula& b) {
  return a.desugar() == b.desugar();
}

namespace {

template <typename Visit>
void for_each_atom(const Formula& f, Visit&& visit) {
  switch (f.kind()) {
    case Formula::Kind::Epsilon:
      visit(f.atom());
      return;
    case Formula::Kind::Not:
      for_each_atom(f.operand(), visit);
      return;
    default:
      for_each_atom(f.lhs(), visit);
      for_each_atom(f.rhs(), visit);
      return;
  }
}

}  // namespace

std::vector<NameVar> nv(const Formula& formula) {
  std::vector<NameVar> out;
  auto add = [&out](const NameVar& v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  for_each_atom(formula, [&](const Atom& a) {
    add(a.subject);
    add(a.predicate);
  });
  return out;
}

std::size_t count_nv(const Formula& formula) { return nv(formula).size(); }

void collect_atoms(const Formula& formula, std::vector<Atom>& out) {
  for_each_atom(formula, [&out](const Atom& a) {
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  });
}

std::vector<Atom> atoms(const Formula& formula) {
  std::vector<Atom> out;
  collect_atoms(formula, out);
  return out;
}

SchemaEntry::SchemaEntry(std::string name, Formula body)
    : name_(std::move(name)), body_(std::move(body)), vars_(nv(body_)) {}

}  // namespace l1
