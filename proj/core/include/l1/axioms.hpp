#pragma once

// Built-in axiom schemata and the two conjunction reference schemata.

#include <optional>
#include <string_view>

#include "l1/formula.hpp"

namespace l1 {

enum class Axiom { Ax1, Ax2, Ax3, Ax3s };

/// eps(a,b) -> eps(a,a)
const SchemaEntry& ax1();
/// eps(a,b) & eps(b,c) -> eps(a,c)
const SchemaEntry& ax2();
/// eps(a,b) & eps(b,c) -> eps(b,a)
const SchemaEntry& ax3();
/// eps(a,b) & eps(b,b) -> eps(b,a)
const SchemaEntry& ax3s();

const SchemaEntry& axiom(Axiom which);
std::string_view axiom_name(Axiom which);
std::optional<Axiom> axiom_from_name(std::string_view name);

/// eps(a,b) -> eps(a,a) & (eps(b,c) -> eps(a,c) & eps(b,a)); propositionally
/// equivalent to Ax1 & Ax2 & Ax3.
const SchemaEntry& a_t();
/// eps(a,b) & eps(b,c) -> eps(a,c) & eps(b,a); equivalent to Ax2 & Ax3.
const SchemaEntry& a_t_minus_1();

}  // namespace l1
