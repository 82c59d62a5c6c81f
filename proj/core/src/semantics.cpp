#include "l1/semantics.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <thread>

#include "l1/error.hpp"

namespace l1 {

// ---------------------------------------------------------------- Valuation

Valuation::Valuation(std::vector<Atom> domain, std::vector<bool> truth)
    : domain_(std::move(domain)), truth_(std::move(truth)) {
  if (domain_.size() != truth_.size()) {
    throw DomainError("valuation domain and truth vector differ in length");
  }
}

Valuation Valuation::from_index(std::vector<Atom> domain, std::uint64_t index) {
  std::vector<bool> truth(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) truth[i] = ((index >> i) & 1U) != 0;
  return Valuation(std::move(domain), std::move(truth));
}

Valuation Valuation::from_true_atoms(std::vector<Atom> domain,
                                     std::span<const Atom> true_atoms) {
  std::vector<bool> truth(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    truth[i] = std::find(true_atoms.begin(), true_atoms.end(), domain[i]) !=
               true_atoms.end();
  }
  return Valuation(std::move(domain), std::move(truth));
}

bool Valuation::contains(const Atom& atom) const noexcept {
  return std::find(domain_.begin(), domain_.end(), atom) != domain_.end();
}

bool Valuation::value(const Atom& atom) const {
  auto it = std::find(domain_.begin(), domain_.end(), atom);
  if (it == domain_.end()) {
    throw DomainError("atom " + to_string(atom) + " is outside the valuation domain");
  }
  return truth_[static_cast<std::size_t>(it - domain_.begin())];
}

std::vector<Atom> Valuation::true_atoms() const {
  std::vector<Atom> out;
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (truth_[i]) out.push_back(domain_[i]);
  }
  return out;
}

std::vector<Atom> Valuation::false_atoms() const {
  std::vector<Atom> out;
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (!truth_[i]) out.push_back(domain_[i]);
  }
  return out;
}

std::uint64_t Valuation::index() const {
  if (domain_.size() > 64) throw DomainError("valuation index needs more than 64 bits");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (truth_[i]) idx |= std::uint64_t{1} << i;
  }
  return idx;
}

bool evaluate(const Formula& formula, const Valuation& valuation) {
  switch (formula.kind()) {
    case Formula::Kind::Epsilon:
      return valuation.value(formula.atom());
    case Formula::Kind::Not:
      return !evaluate(formula.operand(), valuation);
    case Formula::Kind::Or:
      return evaluate(formula.lhs(), valuation) || evaluate(formula.rhs(), valuation);
    case Formula::Kind::And:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      return evaluate(formula.desugar(), valuation);
  }
  return false;
}

// ---------------------------------------------------------- CompiledFormula

CompiledFormula::CompiledFormula(const Formula& formula, std::span<const Atom> domain) {
  auto emit = [&](auto&& self, const Formula& f) -> void {
    switch (f.kind()) {
      case Formula::Kind::Epsilon: {
        auto it = std::find(domain.begin(), domain.end(), f.atom());
        if (it == domain.end()) {
          throw DomainError("atom " + to_string(f.atom()) + " is outside the sweep domain");
        }
        ops_.push_back({Code::Atom, static_cast<std::uint32_t>(it - domain.begin())});
        return;
      }
      case Formula::Kind::Not:
        self(self, f.operand());
        ops_.push_back({Code::Not, 0});
        return;
      case Formula::Kind::Or:
        self(self, f.lhs());
        self(self, f.rhs());
        ops_.push_back({Code::Or, 0});
        return;
      default:
        throw DomainError("compile expects a desugared formula");
    }
  };
  emit(emit, formula.desugar());
}

std::uint64_t CompiledFormula::eval_words(std::span<const std::uint64_t> atom_words,
                                          std::vector<std::uint64_t>& scratch) const {
  scratch.clear();
  for (const Op& op : ops_) {
    switch (op.code) {
      case Code::Atom:
        scratch.push_back(atom_words[op.atom]);
        break;
      case Code::Not:
        scratch.back() = ~scratch.back();
        break;
      case Code::Or: {
        std::uint64_t r = scratch.back();
        scratch.pop_back();
        scratch.back() |= r;
        break;
      }
    }
  }
  return scratch.back();
}

bool CompiledFormula::eval_mask(std::uint64_t mask,
                                std::vector<std::uint64_t>& scratch) const {
  scratch.clear();
  for (const Op& op : ops_) {
    switch (op.code) {
      case Code::Atom:
        scratch.push_back((mask >> op.atom) & 1U);
        break;
      case Code::Not:
        scratch.back() ^= 1U;
        break;
      case Code::Or: {
        std::uint64_t r = scratch.back();
        scratch.pop_back();
        scratch.back() |= r;
        break;
      }
    }
  }
  return scratch.back() != 0;
}

// -------------------------------------------------------------------- sweep

namespace {

constexpr std::array<std::uint64_t, 6> kLowPatterns = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};

/// Calls `bad(words)` for each 64-valuation block of a `k`-atom sweep and
/// returns the lowest valuation index whose bit is set.
template <typename BadFn>
std::optional<std::uint64_t> sweep_first(std::size_t k, unsigned workers, BadFn bad) {
  const std::uint64_t blocks = k <= 6 ? 1 : (std::uint64_t{1} << (k - 6));
  const std::uint64_t valid =
      k >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << k)) - 1;

  auto scan = [&](std::uint64_t begin, std::uint64_t end,
                  const std::atomic<std::uint64_t>& best) -> std::optional<std::uint64_t> {
    std::vector<std::uint64_t> words(k);
    for (std::size_t i = 0; i < k && i < 6; ++i) words[i] = kLowPatterns[i];
    std::vector<std::uint64_t> scratch;
    for (std::uint64_t b = begin; b < end; ++b) {
      if (b > best.load(std::memory_order_relaxed)) break;
      for (std::size_t i = 6; i < k; ++i) {
        words[i] = ((b >> (i - 6)) & 1U) ? ~std::uint64_t{0} : 0;
      }
      std::uint64_t hit = bad(std::span<const std::uint64_t>(words), scratch) & valid;
      if (hit != 0) {
        return b * 64 + static_cast<std::uint64_t>(__builtin_ctzll(hit));
      }
    }
    return std::nullopt;
  };

  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));

  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  if (workers <= 1) return scan(0, blocks, best);

  std::vector<std::optional<std::uint64_t>> found(workers);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (blocks + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(blocks, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        found[w] = scan(begin, end, best);
        if (found[w]) {
          std::uint64_t block = *found[w] / 64;
          std::uint64_t cur = best.load();
          while (block < cur && !best.compare_exchange_weak(cur, block)) {
          }
        }
      });
    }
  }
  // Chunks are ordered, so the first non-empty chunk holds the minimum.
  for (const auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

void check_budget(std::size_t k, const SweepOptions& options) {
  if (k > options.max_atoms) {
    throw BudgetExceeded("sweep over " + std::to_string(k) + " atoms exceeds the cap of " +
                         std::to_string(options.max_atoms));
  }
}

SemanticsVerdict verdict_from(std::optional<std::uint64_t> hit, std::vector<Atom> domain) {
  if (!hit) return {};
  return {false, Valuation::from_index(std::move(domain), *hit)};
}

}  // namespace

SemanticsVerdict is_tautology(const Formula& formula, const SweepOptions& options) {
  std::vector<Atom> domain = atoms(formula);
  check_budget(domain.size(), options);
  CompiledFormula f(formula, domain);
  auto hit = sweep_first(domain.size(), options.workers,
                         [&](std::span<const std::uint64_t> w, std::vector<std::uint64_t>& s) {
                           return ~f.eval_words(w, s);
                         });
  return verdict_from(hit, std::move(domain));
}

SemanticsVerdict are_equivalent(const Formula& a, const Formula& b,
                                const SweepOptions& options) {
  std::vector<Atom> domain = atoms(a);
  collect_atoms(b, domain);
  check_budget(domain.size(), options);
  CompiledFormula fa(a, domain);
  CompiledFormula fb(b, domain);
  auto hit = sweep_first(domain.size(), options.workers,
                         [&](std::span<const std::uint64_t> w, std::vector<std::uint64_t>& s) {
                           return fa.eval_words(w, s) ^ fb.eval_words(w, s);
                         });
  return verdict_from(hit, std::move(domain));
}

SemanticsVerdict entails(std::span<const Formula> premises, const Formula& goal,
                         const SweepOptions& options) {
  std::vector<Atom> domain;
  for (const Formula& p : premises) collect_atoms(p, domain);
  collect_atoms(goal, domain);
  check_budget(domain.size(), options);
  std::vector<CompiledFormula> compiled;
  compiled.reserve(premises.size());
  for (const Formula& p : premises) compiled.emplace_back(p, domain);
  CompiledFormula g(goal, domain);
  auto hit = sweep_first(domain.size(), options.workers,
                         [&](std::span<const std::uint64_t> w, std::vector<std::uint64_t>& s) {
                           std::uint64_t all = ~g.eval_words(w, s);
                           for (const auto& p : compiled) {
                             if (all == 0) break;
                             all &= p.eval_words(w, s);
                           }
                           return all;
                         });
  return verdict_from(hit, std::move(domain));
}

}  // namespace l1
