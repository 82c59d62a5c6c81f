#include "l1/hilbert.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "l1/axioms.hpp"
#include "embedded.hpp"
#include "l1/parser.hpp"

namespace l1 {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view rule_keyword(Justification::Rule rule) {
  switch (rule) {
    case Justification::Rule::Taut: return "TAUT";
    case Justification::Rule::Axiom: return "AXIOM";
    case Justification::Rule::Schema: return "SCHEMA";
    case Justification::Rule::Hypothesis: return "HYP";
    case Justification::Rule::ModusPonens: return "MP";
    case Justification::Rule::Subst: return "SUBST";
    case Justification::Rule::TautConseq: return "TAUTCONSEQ";
  }
  return "";
}

// Splits the argument list at top-level commas (commas inside {...} belong
// to a substitution).
std::vector<std::pair<std::string_view, std::size_t>> split_args(std::string_view args) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= args.size(); ++i) {
    if (i == args.size() || (args[i] == ',' && depth == 0)) {
      std::string_view piece = args.substr(start, i - start);
      std::size_t lead = 0;
      while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
      out.emplace_back(trim(piece), start + lead);
      start = i + 1;
    } else if (args[i] == '{') {
      ++depth;
    } else if (args[i] == '}') {
      --depth;
    }
  }
  if (out.size() == 1 && out.front().first.empty()) out.clear();
  return out;
}

Justification parse_justification(std::string_view text, SourceSpan at) {
  std::size_t lead = 0;
  while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
  at.column += lead;
  text = trim(text);

  std::size_t open = text.find('(');
  std::string_view keyword = trim(text.substr(0, open));
  std::string_view args;
  std::size_t args_col = 0;
  if (open != std::string_view::npos) {
    if (text.back() != ')') throw ParseError(at, "justification is missing ')'");
    args = text.substr(open + 1, text.size() - open - 2);
    args_col = open + 1;
  }

  Justification j;
  bool known = false;
  for (auto rule : {Justification::Rule::Taut, Justification::Rule::Axiom,
                    Justification::Rule::Schema, Justification::Rule::Hypothesis,
                    Justification::Rule::ModusPonens, Justification::Rule::Subst,
                    Justification::Rule::TautConseq}) {
    if (rule_keyword(rule) == keyword) {
      j.rule = rule;
      known = true;
    }
  }
  if (!known) throw ParseError(at, "unknown justification '" + std::string(keyword) + "'");

  auto parts = split_args(args);
  auto arg_span = [&](std::size_t i) {
    return SourceSpan{at.line, at.column + args_col + parts[i].second};
  };
  auto line_ref = [&](std::size_t i) {
    std::size_t value = 0;
    auto s = parts[i].first;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value == 0) {
      throw ParseError(arg_span(i), "expected a line number, found '" + std::string(s) + "'");
    }
    return value;
  };
  auto sigma = [&](std::size_t i) {
    try {
      return parse_substitution(parts[i].first);
    } catch (const ParseError& e) {
      throw ParseError({at.line, arg_span(i).column + e.span().column - 1}, e.message());
    }
  };
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo || parts.size() > hi) {
      throw ParseError(at, std::string(keyword) + " takes " + std::to_string(lo) +
                               (lo == hi ? "" : "-" + std::to_string(hi)) + " argument(s)");
    }
  };

  switch (j.rule) {
    case Justification::Rule::Taut:
      arity(0, 0);
      break;
    case Justification::Rule::Axiom:
    case Justification::Rule::Schema:
      arity(1, 2);
      j.name = std::string(parts[0].first);
      if (parts.size() == 2) j.sigma = sigma(1);
      if (j.rule == Justification::Rule::Axiom && !axiom_from_name(j.name)) {
        throw ParseError(arg_span(0), "unknown axiom '" + j.name + "'");
      }
      break;
    case Justification::Rule::Hypothesis:
      arity(1, 1);
      j.name = std::string(parts[0].first);
      break;
    case Justification::Rule::ModusPonens:
      arity(2, 2);
      j.refs = {line_ref(0), line_ref(1)};
      break;
    case Justification::Rule::Subst:
      arity(2, 2);
      j.refs = {line_ref(0)};
      j.sigma = sigma(1);
      break;
    case Justification::Rule::TautConseq:
      for (std::size_t i = 0; i < parts.size(); ++i) j.refs.push_back(line_ref(i));
      break;
  }
  return j;
}

SchemaEntry parse_named_formula(std::string_view rest, SourceSpan at) {
  auto sep = rest.find(":=");
  if (sep == std::string_view::npos) throw ParseError(at, "expected 'name := formula'");
  std::string name(trim(rest.substr(0, sep)));
  if (!is_valid_schema_name(name)) throw ParseError(at, "invalid name '" + name + "'");
  try {
    return SchemaEntry(name, parse_formula(rest.substr(sep + 2)));
  } catch (const ParseError& e) {
    throw ParseError({at.line, at.column + sep + 2 + e.span().column - 1}, e.message());
  }
}

}  // namespace

std::string to_string(const Justification& j) {
  std::string out(rule_keyword(j.rule));
  auto refs = [&] {
    std::string s;
    for (std::size_t i = 0; i < j.refs.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(j.refs[i]);
    }
    return s;
  };
  switch (j.rule) {
    case Justification::Rule::Taut:
      break;
    case Justification::Rule::Axiom:
    case Justification::Rule::Schema:
      out += "(" + j.name + ", " + print_substitution(j.sigma) + ")";
      break;
    case Justification::Rule::Hypothesis:
      out += "(" + j.name + ")";
      break;
    case Justification::Rule::ModusPonens:
    case Justification::Rule::TautConseq:
      out += "(" + refs() + ")";
      break;
    case Justification::Rule::Subst:
      out += "(" + refs() + ", " + print_substitution(j.sigma) + ")";
      break;
  }
  return out;
}

const Formula& ProofScript::conclusion() const {
  if (lines.empty()) throw DomainError("proof script '" + name + "' has no lines");
  return lines.back().formula;
}

ProofScript parse_proof_script(std::string_view text, std::string fallback_name) {
  ProofScript script;
  script.name = std::move(fallback_name);
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t indent = 0;
    while (indent < raw.size() && std::isspace(static_cast<unsigned char>(raw[indent]))) ++indent;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    const SourceSpan at{line_no, indent + 1};

    if (line.front() == '@') {
      std::size_t ws = line.find_first_of(" \t");
      std::string_view key = line.substr(1, ws == std::string_view::npos ? line.size() : ws - 1);
      std::string_view rest = ws == std::string_view::npos ? "" : trim(line.substr(ws));
      const SourceSpan rest_at{line_no, indent + 1 + (line.size() - rest.size())};
      if (key == "name") {
        script.name = std::string(rest);
      } else if (key == "proves") {
        script.proves = std::string(rest);
      } else if (key == "assume") {
        script.assumptions.push_back(parse_named_formula(rest, rest_at));
      } else if (key == "hypothesis") {
        script.hypotheses.push_back(parse_named_formula(rest, rest_at));
      } else if (key == "repaired") {
        script.repaired = std::string(rest);
      } else if (key == "note") {
        script.notes.emplace_back(rest);
      } else {
        throw ParseError(at, "unknown directive '@" + std::string(key) + "'");
      }
      continue;
    }

    auto semi = line.find(';');
    if (semi == std::string_view::npos) {
      throw ParseError(at, "expected 'formula ; JUSTIFICATION'");
    }
    Formula f = [&] {
      try {
        return parse_formula(line.substr(0, semi));
      } catch (const ParseError& e) {
        throw ParseError({line_no, indent + e.span().column}, e.message());
      }
    }();
    Justification j = parse_justification(line.substr(semi + 1), {line_no, indent + semi + 2});
    script.lines.push_back({std::move(f), std::move(j), at});
  }
  return script;
}

std::string print_proof_script(const ProofScript& script) {
  std::string out;
  if (!script.name.empty()) out += "@name " + script.name + "\n";
  if (script.proves) out += "@proves " + *script.proves + "\n";
  for (const auto& a : script.assumptions) {
    out += "@assume " + a.name() + " := " + print_formula(a.body()) + "\n";
  }
  for (const auto& h : script.hypotheses) {
    out += "@hypothesis " + h.name() + " := " + print_formula(h.body()) + "\n";
  }
  if (script.repaired) out += "@repaired " + *script.repaired + "\n";
  for (const auto& n : script.notes) out += "@note " + n + "\n";
  for (const auto& l : script.lines) {
    out += print_formula(l.formula) + " ; " + to_string(l.justification) + "\n";
  }
  return out;
}

namespace {

const SchemaEntry* find_entry(const std::vector<SchemaEntry>& entries, std::string_view name) {
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const SchemaEntry& e) { return e.name() == name; });
  return it == entries.end() ? nullptr : &*it;
}

LineCheck check_line(const ProofScript& script, std::size_t index) {
  const ProofLine& line = script.lines[index];
  const Justification& j = line.justification;
  LineCheck check;
  check.line = index + 1;
  check.rule = to_string(j);

  for (std::size_t ref : j.refs) {
    if (ref == 0 || ref > index) {
      check.detail = "reference to line " + std::to_string(ref) + " is not an earlier line";
      return check;
    }
  }
  auto cited = [&](std::size_t ref) -> const Formula& { return script.lines[ref - 1].formula; };
  auto expect_equal = [&](const Formula& expected, const std::string& what) {
    check.ok = core_equal(line.formula, expected);
    if (!check.ok) check.detail = "line differs from " + what + ": " + print_formula(expected);
  };

  switch (j.rule) {
    case Justification::Rule::Taut: {
      check.semantics = is_tautology(line.formula);
      check.ok = check.semantics->holds;
      if (!check.ok) check.detail = "not a tautology";
      break;
    }
    case Justification::Rule::Axiom: {
      const SchemaEntry& ax = axiom(*axiom_from_name(j.name));
      expect_equal(apply(j.sigma, ax.body()), "the axiom instance");
      break;
    }
    case Justification::Rule::Schema: {
      const SchemaEntry* s = find_entry(script.assumptions, j.name);
      if (!s) {
        check.detail = "no assumed schema named '" + j.name + "'";
        break;
      }
      expect_equal(apply(j.sigma, s->body()), "the schema instance");
      break;
    }
    case Justification::Rule::Hypothesis: {
      const SchemaEntry* h = find_entry(script.hypotheses, j.name);
      if (!h) {
        check.detail = "no hypothesis named '" + j.name + "'";
        break;
      }
      expect_equal(h->body(), "the hypothesis");
      break;
    }
    case Justification::Rule::ModusPonens: {
      const Formula major = cited(j.refs[1]).desugar();
      const Formula expected =
          Formula::disjunction(Formula::negation(cited(j.refs[0]).desugar()), line.formula.desugar());
      check.ok = major == expected;
      if (!check.ok) {
        check.detail = "line " + std::to_string(j.refs[1]) + " is not (line " +
                       std::to_string(j.refs[0]) + " -> this line)";
      }
      break;
    }
    case Justification::Rule::Subst: {
      if (!script.hypotheses.empty()) {
        check.detail = "substitution is unsound with local hypotheses";
        break;
      }
      expect_equal(apply(j.sigma, cited(j.refs[0])),
                   "the substituted line " + std::to_string(j.refs[0]));
      break;
    }
    case Justification::Rule::TautConseq: {
      std::vector<Formula> premises;
      for (std::size_t ref : j.refs) premises.push_back(cited(ref));
      check.semantics = entails(premises, line.formula);
      check.ok = check.semantics->holds;
      if (!check.ok) check.detail = "not a tautological consequence of the cited lines";
      break;
    }
  }
  return check;
}

}  // namespace

ProofCheckResult check_proof(const ProofScript& script) {
  ProofCheckResult result;
  result.script = script.name;
  if (script.lines.empty()) {
    result.reason = "empty script";
    return result;
  }
  for (std::size_t i = 0; i < script.lines.size(); ++i) {
    LineCheck c;
    try {
      c = check_line(script, i);
    } catch (const Error& e) {
      c.line = i + 1;
      c.rule = to_string(script.lines[i].justification);
      c.ok = false;
      c.detail = e.what();
    }
    if (!c.ok && !result.first_failure) {
      result.first_failure = c.line;
      result.reason = "line " + std::to_string(c.line) + " (" + c.rule + "): " + c.detail;
    }
    result.lines.push_back(std::move(c));
  }
  result.ok = !result.first_failure.has_value();
  return result;
}

std::span<const BundledProof> bundled_proof_texts() { return embedded::proofs(); }

std::vector<ProofScript> bundled_proof_scripts() {
  std::vector<ProofScript> out;
  for (const auto& p : bundled_proof_texts()) {
    std::string stem(p.file);
    if (auto dot = stem.rfind('.'); dot != std::string::npos) stem.erase(dot);
    out.push_back(parse_proof_script(p.text, stem));
  }
  return out;
}

std::vector<ProofCheckResult> check_bundled_proofs() {
  std::vector<ProofCheckResult> out;
  for (const auto& s : bundled_proof_scripts()) out.push_back(check_proof(s));
  return out;
}

}  // namespace l1
