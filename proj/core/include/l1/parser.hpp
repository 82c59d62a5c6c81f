#pragma once

// Text syntax for formulas and schema files.
//
//   formula := iff
//   iff     := imp ("<->" imp)*
//   imp     := or ("->" imp)?
//   or      := and ("|" and)*
//   and     := not ("&" not)*
//   not     := "!" not | "(" formula ")" | "eps(" var "," var ")"
//
// Schema files hold one `name := formula` entry per line; `#` starts a
// comment that runs to the end of the line.

#include <string>
#include <string_view>
#include <vector>

#include "l1/error.hpp"
#include "l1/formula.hpp"

namespace l1 {

/// Parses a single formula. Throws ParseError with a 1-based span.
Formula parse_formula(std::string_view text);

/// Canonical text with minimal parentheses.
std::string print_formula(const Formula& formula);

/// All per-line problems found in a schema file.
class SchemaFileError : public ParseError {
 public:
  explicit SchemaFileError(std::vector<ParseError> errors);

  const std::vector<ParseError>& errors() const noexcept { return errors_; }

 private:
  std::vector<ParseError> errors_;
};

/// Entries in file order. Throws SchemaFileError on syntax errors or
/// duplicate names.
std::vector<SchemaEntry> parse_schema_file(std::string_view text);

/// Inverse of parse_schema_file.
std::string print_schema_file(const std::vector<SchemaEntry>& entries);

bool is_valid_schema_name(std::string_view name) noexcept;

}  // namespace l1
