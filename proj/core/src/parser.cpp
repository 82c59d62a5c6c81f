#include "l1/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

namespace l1 {

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Bang, Amp, Pipe, Arrow, DoubleArrow, End };

std::string describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Bang: return "'!'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::DoubleArrow: return "'<->'";
    case Tok::End: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind;
  std::string_view text;
  SourceSpan span;
};

class Lexer {
 public:
  Lexer(std::string_view text, SourceSpan origin) : text_(text), origin_(origin) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance(1);
    }
    SourceSpan at = span();
    if (pos_ >= text_.size()) return {Tok::End, {}, at};
    char c = text_[pos_];
    auto single = [&](Tok t) {
      Token tok{t, text_.substr(pos_, 1), at};
      advance(1);
      return tok;
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case ',': return single(Tok::Comma);
      case '!': return single(Tok::Bang);
      case '&': return single(Tok::Amp);
      case '|': return single(Tok::Pipe);
      default: break;
    }
    if (text_.substr(pos_, 2) == "->") {
      Token tok{Tok::Arrow, text_.substr(pos_, 2), at};
      advance(2);
      return tok;
    }
    if (text_.substr(pos_, 3) == "<->") {
      Token tok{Tok::DoubleArrow, text_.substr(pos_, 3), at};
      advance(3);
      return tok;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::islower(static_cast<unsigned char>(text_[end])) ||
              std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
        ++end;
      }
      Token tok{Tok::Ident, text_.substr(pos_, end - pos_), at};
      advance(end - pos_);
      return tok;
    }
    throw ParseError(at, std::string("unknown token '") + c + "'");
  }

 private:
  SourceSpan span() const {
    return {origin_.line, origin_.column + column_};
  }
  void advance(std::size_t n) {
    // Columns count bytes; the grammar is ASCII.
    pos_ += n;
    column_ += n;
  }

  std::string_view text_;
  SourceSpan origin_;
  std::size_t pos_ = 0;
  std::size_t column_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, SourceSpan origin) : lexer_(text, origin) {
    current_ = lexer_.next();
  }

  Formula parse_all() {
    if (current_.kind == Tok::End) throw ParseError(current_.span, "empty input");
    Formula f = parse_iff();
    if (current_.kind != Tok::End) {
      throw ParseError(current_.span, "unexpected " + describe(current_.kind) +
                                          ", expected end of input");
    }
    return f;
  }

 private:
  void bump() { current_ = lexer_.next(); }

  Token expect(Tok kind) {
    if (current_.kind != kind) {
      throw ParseError(current_.span, "expected " + describe(kind) + ", found " +
                                          describe(current_.kind));
    }
    Token t = current_;
    bump();
    return t;
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (current_.kind == Tok::DoubleArrow) {
      bump();
      f = Formula::equivalence(f, parse_imp());
    }
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (current_.kind == Tok::Arrow) {
      bump();
      return Formula::implication(f, parse_imp());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (current_.kind == Tok::Pipe) {
      bump();
      f = Formula::disjunction(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_not();
    while (current_.kind == Tok::Amp) {
      bump();
      f = Formula::conjunction(f, parse_not());
    }
    return f;
  }

  Formula parse_not() {
    switch (current_.kind) {
      case Tok::Bang:
        bump();
        return Formula::negation(parse_not());
      case Tok::LParen: {
        bump();
        Formula f = parse_iff();
        expect(Tok::RParen);
        return f;
      }
      case Tok::Ident: {
        if (current_.text != "eps") {
          throw ParseError(current_.span, "expected 'eps', found '" +
                                              std::string(current_.text) + "'");
        }
        bump();
        expect(Tok::LParen);
        Token subject = expect(Tok::Ident);
        expect(Tok::Comma);
        Token predicate = expect(Tok::Ident);
        expect(Tok::RParen);
        return Formula::epsilon(NameVar(std::string(subject.text)),
                                NameVar(std::string(predicate.text)));
      }
      default:
        throw ParseError(current_.span,
                         "expected a formula, found " + describe(current_.kind));
    }
  }

  Lexer lexer_;
  Token current_{Tok::End, {}, {}};
};

Formula parse_at(std::string_view text, SourceSpan origin) {
  return Parser(text, origin).parse_all();
}

int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Implies: return 2;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::And: return 4;
    case Formula::Kind::Not: return 5;
    case Formula::Kind::Epsilon: return 6;
  }
  return 0;
}

void print_into(const Formula& f, std::string& out);

void print_wrapped(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  print_into(f, out);
  if (parens) out += ')';
}

void print_into(const Formula& f, std::string& out) {
  const int p = precedence(f.kind());
  switch (f.kind()) {
    case Formula::Kind::Epsilon:
      out += to_string(f.atom());
      return;
    case Formula::Kind::Not:
      out += '!';
      print_wrapped(f.operand(), precedence(f.operand().kind()) < p, out);
      return;
    default:
      break;
  }
  const int lp = precedence(f.lhs().kind());
  const int rp = precedence(f.rhs().kind());
  // Implication associates to the right, everything else to the left.
  const bool right_assoc = f.kind() == Formula::Kind::Implies;
  print_wrapped(f.lhs(), right_assoc ? lp <= p : lp < p, out);
  switch (f.kind()) {
    case Formula::Kind::Or: out += " | "; break;
    case Formula::Kind::And: out += " & "; break;
    case Formula::Kind::Implies: out += " -> "; break;
    case Formula::Kind::Iff: out += " <-> "; break;
    default: break;
  }
  print_wrapped(f.rhs(), right_assoc ? rp < p : rp <= p, out);
}

std::vector<ParseError> sorted(std::vector<ParseError> errors) {
  std::stable_sort(errors.begin(), errors.end(),
                   [](const ParseError& a, const ParseError& b) {
                     return a.span().line < b.span().line;
                   });
  return errors;
}

std::string join_messages(const std::vector<ParseError>& errors) {
  std::string s;
  for (const auto& e : errors) {
    if (!s.empty()) s += '\n';
    s += e.what();
  }
  return s;
}

}  // namespace

Formula parse_formula(std::string_view text) { return parse_at(text, {1, 1}); }

std::string print_formula(const Formula& formula) {
  std::string out;
  print_into(formula, out);
  return out;
}

SchemaFileError::SchemaFileError(std::vector<ParseError> errors)
    : ParseError(errors.empty() ? SourceSpan{} : errors.front().span(),
                 join_messages(errors)),
      errors_(std::move(errors)) {}

bool is_valid_schema_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front())) && name.front() != '_') {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

std::vector<SchemaEntry> parse_schema_file(std::string_view text) {
  std::vector<SchemaEntry> entries;
  std::vector<ParseError> errors;
  std::set<std::string, std::less<>> seen;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }

    try {
      auto sep = line.find(":=");
      if (sep == std::string_view::npos) {
        throw ParseError({line_no, first + 1}, "expected 'name := formula'");
      }
      std::string_view name = line.substr(first, sep - first);
      while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) {
        name.remove_suffix(1);
      }
      if (!is_valid_schema_name(name)) {
        throw ParseError({line_no, first + 1},
                         "invalid schema name '" + std::string(name) + "'");
      }
      Formula body = parse_at(line.substr(sep + 2), {line_no, sep + 3});
      if (!seen.insert(std::string(name)).second) {
        throw ParseError({line_no, first + 1},
                         "duplicate schema name '" + std::string(name) + "'");
      }
      entries.emplace_back(std::string(name), std::move(body));
    } catch (const ParseError& e) {
      errors.push_back(e);
    } catch (const DomainError& e) {
      errors.emplace_back(SourceSpan{line_no, first + 1}, e.what());
    }
    if (end == text.size()) break;
  }

  if (!errors.empty()) throw SchemaFileError(sorted(std::move(errors)));
  return entries;
}

std::string print_schema_file(const std::vector<SchemaEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    out += e.name();
    out += " := ";
    out += print_formula(e.body());
    out += '\n';
  }
  return out;
}

}  // namespace l1
