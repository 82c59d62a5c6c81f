#include "l1/substitution.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "l1/error.hpp"

namespace l1 {

Substitution::Substitution(std::vector<std::pair<NameVar, NameVar>> pairs)
    : pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs_.size(); ++j) {
      if (pairs_[i].first == pairs_[j].first) {
        throw DomainError("substitution maps '" + pairs_[i].first.id() + "' twice");
      }
    }
  }
}

const NameVar& Substitution::operator()(const NameVar& v) const {
  for (const auto& [from, to] : pairs_) {
    if (from == v) return to;
  }
  return v;
}

bool Substitution::is_injective() const {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs_.size(); ++j) {
      if (pairs_[i].second == pairs_[j].second) return false;
    }
  }
  return true;
}

Substitution Substitution::inverse() const {
  if (!is_injective()) throw DomainError("substitution is not injective");
  std::vector<std::pair<NameVar, NameVar>> inv;
  inv.reserve(pairs_.size());
  for (const auto& [from, to] : pairs_) inv.emplace_back(to, from);
  return Substitution(std::move(inv));
}

bool operator==(const Substitution& a, const Substitution& b) {
  // Identity pairs are no-ops, so compare the effective maps.
  auto effective = [](const Substitution& s) {
    std::vector<std::pair<NameVar, NameVar>> v;
    for (const auto& p : s.pairs()) {
      if (p.first != p.second) v.push_back(p);
    }
    std::sort(v.begin(), v.end());
    return v;
  };
  return effective(a) == effective(b);
}

Formula apply(const Substitution& sigma, const Formula& formula) {
  switch (formula.kind()) {
    case Formula::Kind::Epsilon: {
      const Atom& a = formula.atom();
      return Formula::epsilon(sigma(a.subject), sigma(a.predicate));
    }
    case Formula::Kind::Not:
      return Formula::negation(apply(sigma, formula.operand()));
    case Formula::Kind::Or:
      return Formula::disjunction(apply(sigma, formula.lhs()), apply(sigma, formula.rhs()));
    case Formula::Kind::And:
      return Formula::conjunction(apply(sigma, formula.lhs()), apply(sigma, formula.rhs()));
    case Formula::Kind::Implies:
      return Formula::implication(apply(sigma, formula.lhs()), apply(sigma, formula.rhs()));
    case Formula::Kind::Iff:
      return Formula::equivalence(apply(sigma, formula.lhs()), apply(sigma, formula.rhs()));
  }
  return formula;
}

std::string print_substitution(const Substitution& sigma) {
  std::string out = "{";
  bool first = true;
  for (const auto& [from, to] : sigma.pairs()) {
    if (!first) out += ", ";
    first = false;
    out += from.id();
    out += "->";
    out += to.id();
  }
  out += "}";
  return out;
}

Substitution parse_substitution(std::string_view text) {
  std::size_t pos = 0;
  auto span = [&] { return SourceSpan{1, pos + 1}; };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](std::string_view tok) {
    skip();
    if (text.substr(pos, tok.size()) != tok) {
      throw ParseError(span(), "expected '" + std::string(tok) + "'");
    }
    pos += tok.size();
  };
  auto ident = [&] {
    skip();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::islower(static_cast<unsigned char>(text[pos])) ||
            std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    std::string id(text.substr(start, pos - start));
    if (!NameVar::is_valid_identifier(id)) {
      throw ParseError({1, start + 1}, "expected a name variable");
    }
    return NameVar(id);
  };

  expect("{");
  std::vector<std::pair<NameVar, NameVar>> pairs;
  skip();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
  } else {
    while (true) {
      NameVar from = ident();
      expect("->");
      NameVar to = ident();
      pairs.emplace_back(std::move(from), std::move(to));
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect("}");
      break;
    }
  }
  skip();
  if (pos != text.size()) throw ParseError(span(), "trailing input after substitution");
  try {
    return Substitution(std::move(pairs));
  } catch (const DomainError& e) {
    throw ParseError({1, 1}, e.what());
  }
}

bool is_reserved_fresh_name(std::string_view id) noexcept {
  if (id.size() < 2) return false;
  if (id[0] != 'y' && id[0] != 'u' && id[0] != 'v') return false;
  if (id[1] == '0') return false;
  return std::all_of(id.begin() + 1, id.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::vector<TrivialityMap> triviality_maps(const std::vector<NameVar>& source,
                                           const std::vector<NameVar>& reference,
                                           FreshPool pool) {
  const std::size_t n = source.size();
  const std::size_t r = reference.size();
  if (n < r) {
    throw CriterionInapplicable("schema has " + std::to_string(n) +
                                " variables but the reference has " + std::to_string(r));
  }
  std::vector<NameVar> targets = reference;
  for (std::size_t i = 1; i <= n - r; ++i) {
    NameVar fresh(std::string(1, static_cast<char>(pool)) + std::to_string(i));
    if (std::find(source.begin(), source.end(), fresh) != source.end() ||
        std::find(reference.begin(), reference.end(), fresh) != reference.end()) {
      throw DomainError("fresh variable '" + fresh.id() + "' collides with a schema variable");
    }
    targets.push_back(std::move(fresh));
  }

  std::vector<TrivialityMap> maps;
  std::vector<std::size_t> rho(n);
  std::iota(rho.begin(), rho.end(), std::size_t{0});
  do {
    // Pairs follow the source order so printed maps read like nv(A).
    std::vector<std::pair<NameVar, NameVar>> pairs;
    pairs.reserve(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
      auto i = static_cast<std::size_t>(std::find(rho.begin(), rho.end(), pos) - rho.begin());
      pairs.emplace_back(source[pos], targets[i]);
    }
    maps.push_back({Substitution(std::move(pairs)), rho});
  } while (std::next_permutation(rho.begin(), rho.end()));
  return maps;
}

QntMaps qnt_maps(const SchemaEntry& a, const SchemaEntry& b) {
  if (a.arity() < 3 || b.arity() < 3) {
    throw CriterionInapplicable("quasi-triviality needs at least 3 variables on both sides (" +
                                a.name() + ": " + std::to_string(a.arity()) + ", " +
                                b.name() + ": " + std::to_string(b.arity()) + ")");
  }
  if (a.arity() <= b.arity()) {
    return {QntCase::BOntoA, triviality_maps(b.vars(), a.vars(), FreshPool::U)};
  }
  return {QntCase::AOntoB, triviality_maps(a.vars(), b.vars(), FreshPool::V)};
}

}  // namespace l1
