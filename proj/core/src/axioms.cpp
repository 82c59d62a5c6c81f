#include "l1/axioms.hpp"

namespace l1 {

const SchemaEntry& ax1() {
  static const SchemaEntry e("Ax1", implies(eps("a", "b"), eps("a", "a")));
  return e;
}

const SchemaEntry& ax2() {
  static const SchemaEntry e("Ax2", implies(eps("a", "b") & eps("b", "c"), eps("a", "c")));
  return e;
}

const SchemaEntry& ax3() {
  static const SchemaEntry e("Ax3", implies(eps("a", "b") & eps("b", "c"), eps("b", "a")));
  return e;
}

const SchemaEntry& ax3s() {
  static const SchemaEntry e("Ax3s", implies(eps("a", "b") & eps("b", "b"), eps("b", "a")));
  return e;
}

const SchemaEntry& axiom(Axiom which) {
  switch (which) {
    case Axiom::Ax1: return ax1();
    case Axiom::Ax2: return ax2();
    case Axiom::Ax3: return ax3();
    case Axiom::Ax3s: return ax3s();
  }
  return ax1();
}

std::string_view axiom_name(Axiom which) {
  switch (which) {
    case Axiom::Ax1: return "Ax1";
    case Axiom::Ax2: return "Ax2";
    case Axiom::Ax3: return "Ax3";
    case Axiom::Ax3s: return "Ax3s";
  }
  return "";
}

std::optional<Axiom> axiom_from_name(std::string_view name) {
  for (Axiom a : {Axiom::Ax1, Axiom::Ax2, Axiom::Ax3, Axiom::Ax3s}) {
    if (axiom_name(a) == name) return a;
  }
  return std::nullopt;
}

const SchemaEntry& a_t() {
  static const SchemaEntry e(
      "A_t", implies(eps("a", "b"),
                     eps("a", "a") & implies(eps("b", "c"), eps("a", "c") & eps("b", "a"))));
  return e;
}

const SchemaEntry& a_t_minus_1() {
  static const SchemaEntry e(
      "A_t-1", implies(eps("a", "b") & eps("b", "c"), eps("a", "c") & eps("b", "a")));
  return e;
}

}  // namespace l1
