// l1ont: command line front end for the L1 schema toolkit.
//
// Exit status: 0 when the verdict was computed (or every check passed),
// 1 when a verification item or proof line failed, 2 on usage, parse,
// lookup or applicability errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "l1/axioms.hpp"
#include "l1/characterization.hpp"
#include "l1/corpus.hpp"
#include "l1/criteria.hpp"
#include "l1/decision.hpp"
#include "l1/error.hpp"
#include "l1/hilbert.hpp"
#include "l1/parser.hpp"
#include "l1/report.hpp"
#include "l1/semantics.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  bool json = false;
  std::string corpus_file;
  unsigned workers = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw l1::DomainError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const l1::Corpus& corpus(const Options& o) {
  static std::optional<l1::Corpus> loaded;
  if (o.corpus_file.empty()) return l1::bundled_corpus();
  if (!loaded) loaded = l1::Corpus::parse(read_file(o.corpus_file));
  return *loaded;
}

// A corpus name, or else a formula whose variables make up the schema.
l1::SchemaEntry schema_arg(const Options& o, const std::string& arg) {
  if (l1::is_valid_schema_name(arg)) return corpus(o).at(arg);
  return l1::SchemaEntry("input", l1::parse_formula(arg));
}

l1::Formula formula_arg(const Options& o, const std::string& arg) {
  if (l1::is_valid_schema_name(arg)) return corpus(o).at(arg).body();
  return l1::parse_formula(arg);
}

void emit(const Options& o, const l1::Json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_taut(const Options& o, const std::string& arg) {
  const l1::Formula f = formula_arg(o, arg);
  l1::SweepOptions sweep;
  sweep.workers = o.workers;
  const auto v = l1::is_tautology(f, sweep);
  l1::Json j{{"kind", "tautology"}, {"formula", l1::print_formula(f)}};
  j.update(l1::to_json(v));
  std::string text = l1::print_formula(f) + "\n" +
                     (v.holds ? "tautology\n"
                              : "not a tautology\n  falsified by: " +
                                    l1::format_valuation(*v.witness) + "\n");
  emit(o, j, text);
  return kOk;
}

int cmd_theorem(const Options& o, const std::string& arg) {
  const l1::Formula f = formula_arg(o, arg);
  const auto v = l1::is_l1_theorem(f);
  l1::Json j{{"kind", "theorem"}, {"formula", l1::print_formula(f)}};
  j.update(l1::to_json(v));
  emit(o, j, l1::to_text(v, l1::print_formula(f)));
  return kOk;
}

l1::SchemaEntry reference_arg(const Options& o, const std::string& ref) {
  if (ref == "A_t") return l1::a_t();
  if (ref == "A_t-1") return l1::a_t_minus_1();
  return schema_arg(o, ref);
}

int cmd_nontrivial(const Options& o, const std::string& arg, const std::string& ref) {
  l1::SweepOptions sweep;
  sweep.workers = o.workers;
  const auto r = l1::triviality(schema_arg(o, arg), reference_arg(o, ref), sweep);
  emit(o, l1::to_json(r), l1::to_text(r));
  return kOk;
}

int cmd_qnt(const Options& o, const std::string& a, const std::string& b) {
  l1::SweepOptions sweep;
  sweep.workers = o.workers;
  const auto r = l1::quasi_triviality(schema_arg(o, a), schema_arg(o, b), sweep);
  emit(o, l1::to_json(r), l1::to_text(r));
  return kOk;
}

int cmd_matrix(const Options& o, const std::vector<std::string>& names) {
  std::vector<l1::SchemaEntry> entries;
  if (!names.empty()) {
    entries = corpus(o).select(names);
  } else if (o.corpus_file.empty()) {
    entries = corpus(o).select(l1::established_names());
  } else {
    entries = corpus(o).entries();
  }
  const auto m = l1::qnt_matrix(entries, o.workers);
  emit(o, l1::to_json(m), l1::to_text(m));
  return kOk;
}

int cmd_characteristic(const Options& o, const std::string& arg, std::size_t max_pool) {
  const auto r = l1::is_characteristic(schema_arg(o, arg), max_pool);
  emit(o, l1::to_json(r), l1::to_text(r));
  return kOk;
}

int cmd_check_proof(const Options& o, const std::vector<std::string>& files) {
  std::vector<l1::ProofScript> scripts;
  if (files.empty()) {
    scripts = l1::bundled_proof_scripts();
  } else {
    for (const auto& f : files) {
      if (!std::filesystem::exists(f)) {
        bool found = false;
        for (auto& s : l1::bundled_proof_scripts()) {
          if (s.name == f) {
            scripts.push_back(std::move(s));
            found = true;
          }
        }
        if (!found) throw l1::DomainError("no proof file or bundled script named '" + f + "'");
        continue;
      }
      scripts.push_back(
          l1::parse_proof_script(read_file(f), std::filesystem::path(f).stem().string()));
    }
  }
  l1::Json j = l1::Json::array();
  std::string text;
  bool ok = true;
  for (const auto& s : scripts) {
    const auto r = l1::check_proof(s);
    ok = ok && r.ok;
    j.push_back(l1::to_json(r));
    text += l1::to_text(r);
  }
  emit(o, scripts.size() == 1 ? j[0] : j, text);
  return ok ? kOk : kFailed;
}

int cmd_verify_paper(const Options& o) {
  const auto r = l1::verify_paper(corpus(o), o.workers);
  emit(o, l1::to_json(r), l1::to_text(r));
  return r.all_passed() ? kOk : kFailed;
}

int cmd_conjectures(const Options& o) {
  const auto t = l1::conjecture_report(corpus(o));
  bool ok = true;
  std::string problems;
  for (const auto& row : t.rows) {
    if (auto err = l1::certify(row)) {
      ok = false;
      problems += "certification failed for " + row.schema.name() + ": " + *err + "\n";
    }
  }
  emit(o, l1::to_json(t), l1::to_text(t));
  std::cerr << problems;
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures and criteria for single axiom schemata of L1"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_flag("--json", o.json, "Print the JSON report instead of text");
  app.add_option("--corpus", o.corpus_file, "Schema file used for name lookups");
  app.add_option("-j,--workers", o.workers, "Worker threads for sweeps")
      ->check(CLI::Range(1u, 256u));

  std::string formula, schema, ref = "A_t", left, right;
  std::vector<std::string> names, files;
  std::size_t max_pool = 4;

  auto* taut = app.add_subcommand("taut", "Classical tautology check");
  taut->add_option("formula", formula, "Formula or corpus name")->required();
  auto* theorem = app.add_subcommand("theorem", "Theoremhood in L1 (admissible semantics)");
  theorem->add_option("formula", formula, "Formula or corpus name")->required();
  auto* nontrivial = app.add_subcommand("nontrivial", "Triviality against a reference schema");
  nontrivial->add_option("schema", schema, "Corpus name or formula")->required();
  nontrivial->add_option("--ref", ref, "A_t, A_t-1 or a corpus name");
  auto* qnt = app.add_subcommand("qnt", "Quasi-triviality of A with respect to B");
  qnt->add_option("A", left)->required();
  qnt->add_option("B", right)->required();
  auto* matrix = app.add_subcommand("matrix", "Quasi-triviality matrix");
  matrix->add_option("names", names, "Entries (default: the established five, or the whole --corpus)");
  auto* characteristic =
      app.add_subcommand("characteristic", "Validity and axiom recovery for one schema");
  characteristic->add_option("schema", schema)->required();
  characteristic->add_option("--max-pool", max_pool, "Largest recovery pool")
      ->check(CLI::Range(3, 4));
  auto* check = app.add_subcommand("check-proof", "Check proof scripts (default: all bundled)");
  check->add_option("files", files, "Script files or bundled script names");
  auto* verify = app.add_subcommand("verify-paper", "Run every published claim");
  auto* conjectures = app.add_subcommand("conjectures", "Sweep the conjectured schemata");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*taut) return cmd_taut(o, formula);
    if (*theorem) return cmd_theorem(o, formula);
    if (*nontrivial) return cmd_nontrivial(o, schema, ref);
    if (*qnt) return cmd_qnt(o, left, right);
    if (*matrix) return cmd_matrix(o, names);
    if (*characteristic) return cmd_characteristic(o, schema, max_pool);
    if (*check) return cmd_check_proof(o, files);
    if (*verify) return cmd_verify_paper(o);
    if (*conjectures) return cmd_conjectures(o);
  } catch (const l1::SchemaFileError& e) {
    for (const auto& err : e.errors()) std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const l1::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
