#include "l1/corpus.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "embedded.hpp"
#include "l1/axioms.hpp"
#include "l1/decision.hpp"
#include "l1/error.hpp"
#include "l1/hilbert.hpp"
#include "l1/parser.hpp"

namespace l1 {

std::string_view to_string(CorpusGroup g) {
  switch (g) {
    case CorpusGroup::Axiom: return "axiom";
    case CorpusGroup::Reference: return "reference";
    case CorpusGroup::Established: return "established";
    case CorpusGroup::Variant: return "variant";
    case CorpusGroup::Conjecture: return "conjecture";
  }
  return "";
}

namespace {

using G = CorpusGroup;

constexpr std::array<CatalogEntry, 30> kCatalog = {{
    {"Ax1", G::Axiom, "axiom schemata of L1 (quasi-reflexivity)", ""},
    {"Ax2", G::Axiom, "axiom schemata of L1 (transitivity)", ""},
    {"Ax3", G::Axiom, "axiom schemata of L1 (exchangeability)", ""},
    {"Ax3s", G::Axiom, "Kanai's simplified exchange axiom", ""},
    {"A_t", G::Reference, "trivial reference schema for Ax1-Ax3", ""},
    {"A_t-1", G::Reference, "trivial reference schema for Ax2 and Ax3", "A_{t-1}"},
    {"A_M8", G::Established, "the 1995 single axiom schema", ""},
    {"A_S1", G::Established, "simplified schemata based on A_M8", ""},
    {"A_S2", G::Established, "simplified schemata based on A_M8", ""},
    {"A_S3", G::Established, "schema yielding transitivity and exchangeability", ""},
    {"A_S3N", G::Established, "simplified schemata based on A_M8", ""},
    {"A_S3Nd", G::Established, "simplified schemata based on A_M8", ""},
    {"Star", G::Variant, "first quasi-trivial example for A_M8", "(*)"},
    {"DoubleStar", G::Variant, "second quasi-trivial example for A_M8", "(**)"},
    {"A_k1", G::Conjecture, "conjectures, A_k-type schemata", ""},
    {"A_k2", G::Conjecture, "conjectures, A_k-type schemata", ""},
    {"A_k3", G::Conjecture, "conjectures, A_k-type schemata", ""},
    {"A_ad1", G::Conjecture, "conjectures, additional schemata part I", ""},
    {"A_ad2", G::Conjecture, "conjectures, additional schemata part I", ""},
    {"A_ad6", G::Conjecture, "conjectures, additional schemata part I", ""},
    {"A_ad6_2", G::Conjecture, "conjectures, additional schemata part I", "A_{ad6-2}"},
    {"A_ad7", G::Conjecture, "conjectures, additional schemata part I", ""},
    {"A_ad7_2", G::Conjecture, "conjectures, additional schemata part I", "A_{ad7-2}"},
    {"A_ad8", G::Conjecture, "conjectures, additional schemata part I", ""},
    {"A_S1ex1", G::Conjecture, "conjectures, additional schemata part II", ""},
    {"A_S1ex2", G::Conjecture, "conjectures, additional schemata part II", ""},
    {"A_S1ex3", G::Conjecture, "conjectures, additional schemata part II", ""},
    {"A_S2ex1", G::Conjecture, "conjectures, additional schemata part II", ""},
    {"A_S2ex2", G::Conjecture, "conjectures, additional schemata part II",
     "A_{S1ex2} (second use of the label)"},
    {"A_S2ex3", G::Conjecture, "conjectures, additional schemata part II",
     "A_{S1ex3} (second use of the label)"},
}};

}  // namespace

std::span<const CatalogEntry> corpus_catalog() { return kCatalog; }

const CatalogEntry* catalog_entry(std::string_view name) {
  for (const auto& e : kCatalog) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

Corpus::Corpus(std::vector<SchemaEntry> entries) : entries_(std::move(entries)) {
  std::set<std::string> seen;
  for (const auto& e : entries_) {
    if (!seen.insert(e.name()).second) throw DomainError("duplicate schema name '" + e.name() + "'");
    for (const auto& v : e.vars()) {
      if (is_reserved_fresh_name(v.id())) {
        throw DomainError("schema '" + e.name() + "' uses reserved variable '" + v.id() + "'");
      }
    }
  }
}

Corpus Corpus::parse(std::string_view text) { return Corpus(parse_schema_file(text)); }

const SchemaEntry* Corpus::find(std::string_view name) const noexcept {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const SchemaEntry& e) { return e.name() == name; });
  return it == entries_.end() ? nullptr : &*it;
}

const SchemaEntry& Corpus::at(std::string_view name) const {
  if (const SchemaEntry* e = find(name)) return *e;
  throw DomainError("unknown schema '" + std::string(name) + "'");
}

std::vector<SchemaEntry> Corpus::select(std::span<const std::string> names) const {
  std::vector<SchemaEntry> out;
  for (const auto& n : names) out.push_back(at(n));
  return out;
}

Corpus Corpus::with_replaced(std::string_view name, Formula body) const {
  std::vector<SchemaEntry> copy;
  bool found = false;
  for (const auto& e : entries_) {
    if (e.name() == name) {
      copy.emplace_back(e.name(), body);
      found = true;
    } else {
      copy.push_back(e);
    }
  }
  if (!found) throw DomainError("unknown schema '" + std::string(name) + "'");
  return Corpus(std::move(copy));
}

std::string_view bundled_corpus_text() { return embedded::corpus(); }

const Corpus& bundled_corpus() {
  static const Corpus corpus = Corpus::parse(bundled_corpus_text());
  return corpus;
}

const std::vector<std::string>& established_names() {
  static const std::vector<std::string> names = {"A_M8", "A_S1", "A_S2", "A_S3N", "A_S3Nd"};
  return names;
}

std::vector<std::string> conjecture_names() {
  std::vector<std::string> out;
  for (const auto& e : bundled_corpus().entries()) {
    const CatalogEntry* c = catalog_entry(e.name());
    if (c && c->group == CorpusGroup::Conjecture) out.push_back(e.name());
  }
  return out;
}

bool PaperVerdictReport::all_passed() const noexcept { return failures() == 0; }

std::size_t PaperVerdictReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      items.begin(), items.end(), [](const VerificationItem& i) { return !i.passed; }));
}

// ------------------------------------------------------------ verify_paper

namespace {

std::string show(const Valuation& v) {
  std::string out = "false:";
  for (const auto& a : v.false_atoms()) out += " " + to_string(a);
  if (v.false_atoms().empty()) out += " (none)";
  return out;
}

// Valuation over `domain` with only the listed atoms false.
Valuation all_true_except(std::vector<Atom> domain, const std::vector<Atom>& falses) {
  std::vector<bool> truth(domain.size(), true);
  for (std::size_t i = 0; i < domain.size(); ++i) {
    truth[i] = std::find(falses.begin(), falses.end(), domain[i]) == falses.end();
  }
  return Valuation(std::move(domain), std::move(truth));
}

Atom atom(const char* s, const char* p) { return Atom{NameVar(s), NameVar(p)}; }

bool is_identity_rho(const std::vector<std::size_t>& rho) {
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (rho[i] != i) return false;
  }
  return true;
}

class Runner {
 public:
  Runner(const Corpus& corpus, unsigned workers) : corpus_(corpus), workers_(workers) {}

  // Runs `body`; exceptions turn into a failed item.
  template <typename Body>
  void item(std::string id, std::string claim, std::vector<std::string> schemata, Body body) {
    VerificationItem it{std::move(id), std::move(claim), std::move(schemata), false, {}};
    try {
      it.passed = body(it.evidence);
    } catch (const Error& e) {
      it.passed = false;
      it.evidence.push_back(std::string("error: ") + e.what());
    }
    report_.items.push_back(std::move(it));
  }

  const SchemaEntry& at(std::string_view n) const { return corpus_.at(n); }
  unsigned workers() const { return workers_; }
  const Corpus& corpus() const { return corpus_; }
  PaperVerdictReport take() { return std::move(report_); }

 private:
  const Corpus& corpus_;
  unsigned workers_;
  PaperVerdictReport report_;
};

bool nontrivial_with_replay(const TrivialityReport& r, std::size_t expected_maps,
                            std::vector<std::string>& ev) {
  ev.push_back(std::string(to_string(r.verdict)) + " w.r.t. " + r.reference.name() + ", " +
               std::to_string(r.refutations.size()) + " refutations");
  auto cert = certify(r);
  if (cert) ev.push_back("certification failed: " + *cert);
  return r.verdict == TrivialityVerdict::Nontrivial && r.refutations.size() == expected_maps &&
         !cert;
}

void conjunction_items(Runner& run) {
  run.item("conjunction-reference", "A_t is equivalent to Ax1 & Ax2 & Ax3",
           {"A_t", "Ax1", "Ax2", "Ax3"}, [&](auto& ev) {
             auto v = is_tautology(iff(run.at("A_t").body(), run.at("Ax1").body() &
                                                                  run.at("Ax2").body() &
                                                                  run.at("Ax3").body()));
             ev.push_back(v.witness ? "distinguishing valuation " + show(*v.witness)
                                    : std::string("biconditional holds on all valuations"));
             return v.holds;
           });
  run.item("conjunction-reference-t1", "A_t-1 is equivalent to Ax2 & Ax3",
           {"A_t-1", "Ax2", "Ax3"}, [&](auto& ev) {
             auto v = is_tautology(
                 iff(run.at("A_t-1").body(), run.at("Ax2").body() & run.at("Ax3").body()));
             ev.push_back(v.witness ? "distinguishing valuation " + show(*v.witness)
                                    : std::string("biconditional holds on all valuations"));
             return v.holds;
           });
  run.item("a_t-trivial", "A_t is trivial with respect to itself via the identity", {"A_t"},
           [&](auto& ev) {
             auto r = triviality(run.at("A_t"), run.at("A_t"));
             bool ok = r.verdict == TrivialityVerdict::Trivial && r.witness &&
                       is_identity_rho(r.witness->rho) && !certify(r);
             if (r.witness) ev.push_back("witness " + print_substitution(r.witness->sigma));
             return ok;
           });
}

void m8_items(Runner& run) {
  run.item("m8-nontrivial", "A_M8 is nontrivial with respect to A_t (24 cases)",
           {"A_M8", "A_t"}, [&](auto& ev) {
             auto r = triviality(run.at("A_M8"), run.at("A_t"));
             bool ok = nontrivial_with_replay(r, 24, ev);
             // The identity-position map fixes c; falsify eps(c,c) only.
             const auto& first = r.refutations.empty() ? nullptr : &r.refutations.front();
             if (first) {
               Formula s = apply(first->map.sigma, run.at("A_M8").body());
               std::vector<Atom> dom = atoms(s);
               collect_atoms(run.at("A_t").body(), dom);
               Valuation v = all_true_except(dom, {atom("c", "c")});
               const bool differ = evaluate(s, v) != evaluate(run.at("A_t").body(), v);
               ev.push_back("map " + print_substitution(first->map.sigma) +
                            " with only eps(c,c) false distinguishes: " +
                            (differ ? "yes" : "no"));
               ok = ok && differ;
             }
             return ok;
           });
  run.item("m8-valid", "A_M8 is valid", {"A_M8"}, [&](auto& ev) {
    auto v = is_l1_theorem(run.at("A_M8").body());
    ev.push_back(std::to_string(v.admissible_count) + " admissible valuations checked");
    return v.is_theorem;
  });
  run.item("m8-remark-renaming",
           "renaming a,b,c,d to a,c,b,d in A_M8 gives the printed rearranged form", {"A_M8"},
           [&](auto& ev) {
             Formula got = apply(parse_substitution("{a->a, b->c, c->b, d->d}"),
                                 run.at("A_M8").body());
             Formula want = parse_formula(
                 "eps(a,c) & eps(b,d) -> eps(a,a) & eps(b,b) & (eps(c,b) -> eps(a,d) & eps(c,a))");
             ev.push_back(print_formula(got));
             return core_equal(got, want);
           });
}

bool qt_with_expected_sigma(const QntReport& r, const QntBranch& branch, const Substitution& expected,
                         std::vector<std::string>& ev) {
  ev.push_back(std::string(to_string(branch.direction)) + ": " +
               std::string(to_string(branch.verdict)));
  if (!branch.witness) return false;
  ev.push_back("witness " + print_substitution(branch.witness->sigma) + ", rho " +
               (is_identity_rho(branch.witness->rho) ? "id" : "not id"));
  const bool expected_ok =
      are_equivalent(apply(expected, substituted_side(r, branch).body()),
                     compared_side(r, branch).body())
          .holds;
  ev.push_back("printed substitution " + print_substitution(expected) +
               (expected_ok ? " gives an equivalence" : " fails"));
  return expected_ok && is_identity_rho(branch.witness->rho);
}

void variant_items(Runner& run) {
  run.item("star-quasi-trivial", "Star is quasi-trivial with respect to A_M8",
           {"Star", "A_M8"}, [&](auto& ev) {
             auto r = quasi_triviality(run.at("Star"), run.at("A_M8"));
             // Equal arities: the printed substitution acts on Star, which is
             // the converse branch.
             bool ok = r.verdict() == QntVerdict::QuasiTrivial && r.converse &&
                       qt_with_expected_sigma(r, *r.converse,
                                           parse_substitution("{a->a, b->b, d->c, e->d}"), ev) &&
                       r.converse->witness->sigma ==
                           parse_substitution("{a->a, b->b, d->c, e->d}") &&
                       !certify(r);
             return ok;
           });
  run.item("double-star-quasi-trivial", "DoubleStar is quasi-trivial with respect to A_M8",
           {"DoubleStar", "A_M8"}, [&](auto& ev) {
             auto r = quasi_triviality(run.at("DoubleStar"), run.at("A_M8"));
             const auto expected = parse_substitution("{a->a, b->b, d->c, e->d, c->v1}");
             bool ok = r.verdict() == QntVerdict::QuasiTrivial &&
                       r.case_used() == QntCase::AOntoB &&
                       qt_with_expected_sigma(r, r.primary, expected, ev) &&
                       r.primary.witness->sigma == expected && !certify(r);
             return ok;
           });
}

void structure_items(Runner& run) {
  std::vector<SchemaEntry> applicable;
  std::vector<std::string> names;
  for (const auto& e : run.corpus().entries()) {
    if (e.arity() >= 3) {
      applicable.push_back(e);
      names.push_back(e.name());
    }
  }
  const QntMatrix m = qnt_matrix(applicable, run.workers());
  const std::size_t n = applicable.size();

  run.item("qt-reflexive", "every schema is quasi-trivial with respect to itself", names,
           [&](auto& ev) {
             std::size_t bad = 0;
             for (std::size_t i = 0; i < n; ++i) {
               const auto& c = m.cells[i][i];
               if (!c || c->verdict() != QntVerdict::QuasiTrivial ||
                   !is_identity_rho(c->primary.witness->rho)) {
                 ++bad;
                 ev.push_back(applicable[i].name() + " is not quasi-trivial with itself");
               }
             }
             ev.push_back(std::to_string(n) + " diagonal cells checked");
             return bad == 0;
           });
  run.item("qnt-symmetric", "quasi-nontriviality is symmetric", names, [&](auto& ev) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (m.cells[i][j]->verdict() != m.cells[j][i]->verdict()) {
          ++bad;
          ev.push_back(applicable[i].name() + "/" + applicable[j].name() + " asymmetric");
        }
      }
    }
    ev.push_back(std::to_string(n * (n - 1) / 2) + " unordered pairs checked");
    return bad == 0;
  });
  run.item("qt-bridge", "quasi-triviality with A_t coincides with triviality", names,
           [&](auto& ev) {
             const SchemaEntry& at = run.at("A_t");
             std::size_t bad = 0;
             for (const auto& x : applicable) {
               const bool qt = quasi_triviality(x, at).verdict() == QntVerdict::QuasiTrivial;
               const bool tr = triviality(x, at).verdict == TrivialityVerdict::Trivial;
               if (qt != tr) {
                 ++bad;
                 ev.push_back(x.name() + " disagrees");
               }
             }
             ev.push_back(std::to_string(applicable.size()) + " schemata checked");
             return bad == 0;
           });
  run.item("qt-transitive", "quasi-triviality is transitive along monotone arities", names,
           [&](auto& ev) {
             auto cases = transitivity_cases(m);
             std::size_t live = 0;
             std::size_t violated = 0;
             for (const auto& c : cases) {
               live += c.premises_hold ? 1 : 0;
               if (c.violated()) {
                 ++violated;
                 ev.push_back(applicable[c.x].name() + ", " + applicable[c.y].name() + ", " +
                              applicable[c.z].name() + " violates transitivity");
               }
             }
             ev.push_back(std::to_string(cases.size()) + " monotone triples, " +
                          std::to_string(live) + " with both premises, " +
                          std::to_string(cases.size() - live) + " vacuous");
             return violated == 0;
           });
  run.item("reports-certify", "every matrix cell replays its witnesses", names, [&](auto& ev) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (auto err = certify(*m.cells[i][j])) {
          ++bad;
          ev.push_back(applicable[i].name() + "/" + applicable[j].name() + ": " + *err);
        }
      }
    }
    ev.push_back(std::to_string(n * n) + " cells replayed");
    return bad == 0;
  });
}

void s3_items(Runner& run) {
  run.item("s3-valid", "A_S3 is valid", {"A_S3"}, [&](auto& ev) {
    auto v = is_l1_theorem(run.at("A_S3").body());
    ev.push_back(std::to_string(v.admissible_count) + " admissible valuations checked");
    return v.is_theorem;
  });
  run.item("s3-nontrivial-t1", "A_S3 is nontrivial with respect to A_t-1", {"A_S3", "A_t-1"},
           [&](auto& ev) {
             return nontrivial_with_replay(triviality(run.at("A_S3"), run.at("A_t-1")), 24, ev);
           });
  run.item("s3-yields-ax2-ax3", "Ax2 and Ax3 follow from instances of A_S3", {"A_S3"},
           [&](auto& ev) {
             bool ok = true;
             for (Axiom a : {Axiom::Ax2, Axiom::Ax3}) {
               auto r = recover_axiom(run.at("A_S3"), a, 3);
               ok = ok && r.recovered && recovery_replays(run.at("A_S3"), r);
               std::string ws;
               for (const auto& s : r.witness) ws += " " + print_substitution(s);
               ev.push_back(std::string(axiom_name(a)) + (r.recovered ? " from" + ws : " not recovered"));
             }
             return ok;
           });
}

void established_items(Runner& run) {
  for (const auto& name : established_names()) {
    run.item("characteristic:" + name, name + " is characteristic of L1 at pool {a,b,c}", {name},
             [&](auto& ev) {
               auto r = is_characteristic(run.at(name), 3);
               ev.push_back(r.validity_label());
               bool small = true;
               for (const auto& rec : r.recovery) {
                 std::string ws;
                 for (const auto& s : rec.witness) ws += " " + print_substitution(s);
                 ev.push_back(std::string(axiom_name(rec.axiom)) +
                              (rec.recovered ? " from" + ws : " not recovered"));
                 small = small && rec.witness.size() <= 2;
               }
               auto cert = certify(r);
               if (cert) ev.push_back("certification failed: " + *cert);
               return r.characteristic && small && !cert;
             });
  }
  for (const auto& name : established_names()) {
    if (name == "A_M8") continue;
    run.item("nontrivial:" + name, name + " is nontrivial with respect to A_t", {name, "A_t"},
             [&](auto& ev) {
               return nontrivial_with_replay(triviality(run.at(name), run.at("A_t")), 24, ev);
             });
  }
}

void matrix_items(Runner& run) {
  const auto& names = established_names();
  auto entries = run.corpus().select(names);
  QntMatrix m = qnt_matrix(entries, run.workers());
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (i == j) continue;
      run.item("qnt:" + names[i] + "/" + names[j],
               names[i] + " is quasi-nontrivial with respect to " + names[j],
               {names[i], names[j]}, [&](auto& ev) {
                 const QntReport& r = *m.cells[i][j];
                 ev.push_back(std::string(to_string(r.verdict())) + " (" +
                              std::string(to_string(r.case_used())) + ", " +
                              std::to_string(r.primary.refutations.size()) + " refutations)");
                 if (!r.branches_agree()) ev.push_back("the converse branch disagrees");
                 auto cert = certify(r);
                 if (cert) ev.push_back("certification failed: " + *cert);
                 return r.verdict() == QntVerdict::QuasiNontrivial && r.branches_agree() &&
                        r.hypothesis_met() && !cert;
               });
    }
  }
  run.item("qnt-subcase-valuation",
           "A_S1 vs A_S2 under {a->c, b->d, c->a, d->b} is refuted with eps(c,b) or eps(d,c) false",
           {"A_S1", "A_S2"}, [&](auto& ev) {
             const auto sigma = parse_substitution("{a->c, b->d, c->a, d->b}");
             const auto s1 = std::find(names.begin(), names.end(), "A_S1") - names.begin();
             const auto s2 = std::find(names.begin(), names.end(), "A_S2") - names.begin();
             const QntReport& r = *m.cells[static_cast<std::size_t>(s1)][static_cast<std::size_t>(s2)];
             bool found = false;
             for (const auto& ref : r.primary.refutations) {
               if (!(ref.map.sigma == sigma)) continue;
               found = !ref.valuation.value(atom("c", "b")) || !ref.valuation.value(atom("d", "c"));
               ev.push_back("report refutation " + show(ref.valuation));
             }
             Formula sub = apply(sigma, run.at("A_S2").body());
             std::vector<Atom> dom = atoms(sub);
             collect_atoms(run.at("A_S1").body(), dom);
             Valuation printed = all_true_except(dom, {atom("c", "b")});
             const bool replays = evaluate(run.at("A_S1").body(), printed) && !evaluate(sub, printed);
             ev.push_back(std::string("printed valuation (only eps(c,b) false) ") +
                          (replays ? "replays" : "does not replay"));
             return found && replays;
           });
}

void proof_items(Runner& run) {
  for (const auto& script : bundled_proof_scripts()) {
    std::vector<std::string> refs;
    for (const auto& a : script.assumptions) refs.push_back(a.name());
    if (script.proves) refs.push_back(*script.proves);
    std::sort(refs.begin(), refs.end());
    refs.erase(std::unique(refs.begin(), refs.end()), refs.end());
    run.item("proof:" + script.name, "derivation " + script.name + " checks", refs,
             [&](auto& ev) {
               auto res = check_proof(script);
               ev.push_back(std::to_string(script.lines.size()) + " lines" +
                            (res.ok ? ", all verified" : ", " + res.reason));
               if (script.repaired) ev.push_back("reconstructed: " + *script.repaired);
               bool ok = res.ok;
               // Assumptions and conclusions must match the corpus transcription.
               for (const auto& a : script.assumptions) {
                 if (!core_equal(a.body(), run.at(a.name()).body())) {
                   ev.push_back("assumption " + a.name() + " differs from the corpus");
                   ok = false;
                 }
               }
               if (script.proves && !core_equal(script.conclusion(), run.at(*script.proves).body())) {
                 ev.push_back("conclusion differs from " + *script.proves);
                 ok = false;
               }
               if (!script.proves) {
                 const Formula all3 = ax1().body() & ax2().body() & ax3().body();
                 if (!entails(std::vector<Formula>{script.conclusion()}, all3).holds) {
                   ev.push_back("conclusion does not yield Ax1 & Ax2 & Ax3");
                   ok = false;
                 }
               }
               if (script.name == "s3_yields_t1") {
                 const bool both =
                     entails(std::vector<Formula>{script.conclusion()}, ax2().body() & ax3().body())
                         .holds;
                 ev.push_back(std::string("conclusion entails Ax2 & Ax3: ") + (both ? "yes" : "no"));
                 ok = ok && both;
               }
               return ok;
             });
  }
}

}  // namespace

PaperVerdictReport verify_paper(const Corpus& corpus, unsigned workers) {
  Runner run(corpus, workers);
  conjunction_items(run);
  m8_items(run);
  variant_items(run);
  structure_items(run);
  s3_items(run);
  established_items(run);
  matrix_items(run);
  proof_items(run);
  return run.take();
}

// -------------------------------------------------------------- conjectures

ConjectureTable conjecture_report(const Corpus& corpus) {
  ConjectureTable table;
  table.established = established_names();
  const auto est = corpus.select(table.established);
  const SchemaEntry& at = corpus.at("A_t");
  for (const auto& name : conjecture_names()) {
    const SchemaEntry* e = corpus.find(name);
    if (!e) continue;
    ConjectureRow row{*e, is_characteristic(*e), std::nullopt, {}};
    try {
      row.nontriviality = triviality(*e, at);
    } catch (const CriterionInapplicable&) {
    }
    for (const auto& b : est) {
      try {
        row.qnt.emplace_back(quasi_triviality(*e, b));
      } catch (const CriterionInapplicable&) {
        row.qnt.emplace_back(std::nullopt);
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::optional<std::string> certify(const ConjectureRow& row) {
  if (auto err = certify(row.characterization)) return row.schema.name() + ": " + *err;
  if (row.nontriviality) {
    if (auto err = certify(*row.nontriviality)) return row.schema.name() + " vs A_t: " + *err;
  }
  for (const auto& q : row.qnt) {
    if (!q) continue;
    if (auto err = certify(*q)) return row.schema.name() + " vs " + q->right.name() + ": " + *err;
  }
  return std::nullopt;
}

}  // namespace l1
