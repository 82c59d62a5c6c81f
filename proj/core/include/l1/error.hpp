#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace l1 {

/// 1-based position in a source text.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, const std::string& message)
      : Error(std::to_string(span.line) + ":" + std::to_string(span.column) +
              ": " + message),
        span_(span),
        message_(message) {}

  const SourceSpan& span() const noexcept { return span_; }
  const std::string& message() const noexcept { return message_; }

 private:
  SourceSpan span_;
  std::string message_;
};

/// An atom, variable or schema lookup outside the object's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A sweep would exceed the configured enumeration cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The triviality / quasi-triviality definitions do not apply to the inputs.
class CriterionInapplicable : public Error {
 public:
  using Error::Error;
};

}  // namespace l1
