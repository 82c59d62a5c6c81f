#include "l1/report.hpp"

#include <sstream>

#include "l1/error.hpp"
#include "l1/parser.hpp"

namespace l1 {

namespace {

[[noreturn]] void shape_error(const std::string& what) {
  throw ParseError({1, 1}, "report JSON: " + what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) shape_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception&) {
    shape_error(std::string("field '") + key + "' has the wrong type");
  }
}

Atom atom_from_string(const std::string& s) {
  Formula f = parse_formula(s);
  if (!f.is_atom()) shape_error("'" + s + "' is not an atom");
  return f.atom();
}

Json atoms_json(const std::vector<Atom>& atoms) {
  Json out = Json::array();
  for (const auto& a : atoms) out.push_back(to_string(a));
  return out;
}

Json names_json(const std::vector<NameVar>& vars) {
  Json out = Json::array();
  for (const auto& v : vars) out.push_back(v.id());
  return out;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

Json refutations_json(const std::vector<Refutation>& refs) {
  Json out = Json::array();
  for (const auto& r : refs) {
    Json item = to_json(r.map);
    item["valuation"] = to_json(r.valuation);
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<Refutation> refutations_from_json(const Json& j) {
  if (!j.is_array()) shape_error("refutations must be an array");
  std::vector<Refutation> out;
  for (const auto& item : j) {
    out.push_back({triviality_map_from_json(item), valuation_from_json(field(item, "valuation"))});
  }
  return out;
}

std::optional<TrivialityMap> optional_map(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return triviality_map_from_json(j);
}

QntCase case_from(const std::string& s) {
  if (s == "case1") return QntCase::BOntoA;
  if (s == "case2") return QntCase::AOntoB;
  shape_error("unknown case '" + s + "'");
}

QntVerdict qnt_verdict_from(const std::string& s) {
  if (s == "quasi-trivial") return QntVerdict::QuasiTrivial;
  if (s == "quasi-nontrivial") return QntVerdict::QuasiNontrivial;
  shape_error("unknown verdict '" + s + "'");
}

QntBranch branch_from_json(const Json& j) {
  QntBranch b;
  b.direction = case_from(get<std::string>(j, "case"));
  b.verdict = qnt_verdict_from(get<std::string>(j, "verdict"));
  b.maps_checked = get<std::size_t>(j, "maps_checked");
  b.witness = optional_map(field(j, "witness"));
  b.refutations = refutations_from_json(field(j, "refutations"));
  return b;
}

}  // namespace

// --------------------------------------------------------------------- JSON

Json to_json(const Valuation& v) {
  return Json{{"domain", atoms_json(v.domain())}, {"true", atoms_json(v.true_atoms())}};
}

Json to_json(const Substitution& s) {
  Json out = Json::object();
  for (const auto& [from, to] : s.pairs()) out[from.id()] = to.id();
  return out;
}

Json to_json(const TrivialityMap& m) {
  Json rho = Json::array();
  for (std::size_t r : m.rho) rho.push_back(r + 1);
  return Json{{"sigma", to_json(m.sigma)}, {"rho", std::move(rho)}};
}

Json to_json(const SchemaEntry& e) {
  return Json{{"name", e.name()}, {"formula", print_formula(e.body())}, {"nv", names_json(e.vars())}};
}

Json to_json(const SemanticsVerdict& v) {
  return Json{{"holds", v.holds}, {"witness", optional_json(v.witness)}};
}

Json to_json(const TheoremVerdict& v) {
  return Json{{"valid", v.is_theorem},
              {"pool", names_json(v.pool)},
              {"admissible_count", v.admissible_count},
              {"counter_valuation", optional_json(v.counter_valuation)}};
}

Json to_json(const TrivialityReport& r) {
  return Json{{"kind", "triviality"},
              {"subject", to_json(r.subject)},
              {"reference", to_json(r.reference)},
              {"verdict", to_string(r.verdict)},
              {"maps_checked", r.maps_checked},
              {"witness", optional_json(r.witness)},
              {"refutations", refutations_json(r.refutations)}};
}

Json to_json(const QntBranch& b) {
  return Json{{"case", to_string(b.direction)},
              {"verdict", to_string(b.verdict)},
              {"maps_checked", b.maps_checked},
              {"witness", optional_json(b.witness)},
              {"refutations", refutations_json(b.refutations)}};
}

Json to_json(const QntReport& r) {
  return Json{{"kind", "quasi-triviality"},
              {"left", to_json(r.left)},
              {"right", to_json(r.right)},
              {"verdict", to_string(r.verdict())},
              {"case", to_string(r.case_used())},
              {"substituted", substituted_side(r, r.primary).name()},
              {"left_nontrivial", r.left_nontrivial},
              {"right_nontrivial", r.right_nontrivial},
              {"hypothesis_met", r.hypothesis_met()},
              {"branches_agree", r.branches_agree()},
              {"primary", to_json(r.primary)},
              {"converse", optional_json(r.converse)}};
}

Json to_json(const QntMatrix& m) {
  Json names = Json::array();
  for (const auto& e : m.entries) names.push_back(e.name());
  Json cells = Json::array();
  for (const auto& row : m.cells) {
    Json out = Json::array();
    for (const auto& c : row) out.push_back(optional_json(c));
    cells.push_back(std::move(out));
  }
  return Json{{"kind", "qnt-matrix"}, {"entries", std::move(names)}, {"cells", std::move(cells)}};
}

Json to_json(const AxiomRecovery& r) {
  Json witness = Json::array();
  for (const auto& s : r.witness) witness.push_back(to_json(s));
  return Json{{"axiom", axiom_name(r.axiom)},
              {"recovered", r.recovered},
              {"pool_size", r.pool_size},
              {"instance_count", r.instance_count},
              {"witness", std::move(witness)},
              {"countermodel", optional_json(r.countermodel)}};
}

Json to_json(const CharacterizationReport& r) {
  Json recovery = Json::array();
  for (const auto& a : r.recovery) recovery.push_back(to_json(a));
  return Json{{"kind", "characterization"},
              {"subject", to_json(r.subject)},
              {"characteristic", r.characteristic},
              {"validity_label", r.validity_label()},
              {"validity", to_json(r.validity)},
              {"derivation", r.derivation ? Json(*r.derivation) : Json(nullptr)},
              {"max_pool", r.max_pool},
              {"recovery", std::move(recovery)}};
}

Json to_json(const ProofCheckResult& r) {
  Json lines = Json::array();
  for (const auto& l : r.lines) {
    Json line{{"line", l.line}, {"ok", l.ok}, {"rule", l.rule}};
    if (!l.detail.empty()) line["detail"] = l.detail;
    if (l.semantics) line["semantics"] = to_json(*l.semantics);
    lines.push_back(std::move(line));
  }
  return Json{{"kind", "proof-check"},
              {"script", r.script},
              {"ok", r.ok},
              {"first_failure", r.first_failure ? Json(*r.first_failure) : Json(nullptr)},
              {"reason", r.reason},
              {"lines", std::move(lines)}};
}

Json to_json(const PaperVerdictReport& r) {
  Json items = Json::array();
  for (const auto& i : r.items) {
    items.push_back(Json{{"id", i.id},
                         {"claim", i.claim},
                         {"schemata", i.schemata},
                         {"passed", i.passed},
                         {"evidence", i.evidence}});
  }
  return Json{{"kind", "verify-paper"},
              {"passed", r.items.size() - r.failures()},
              {"failed", r.failures()},
              {"items", std::move(items)}};
}

Json to_json(const ConjectureTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json qnt = Json::array();
    for (const auto& q : row.qnt) qnt.push_back(optional_json(q));
    rows.push_back(Json{{"schema", to_json(row.schema)},
                        {"characterization", to_json(row.characterization)},
                        {"nontriviality", optional_json(row.nontriviality)},
                        {"qnt", std::move(qnt)}});
  }
  return Json{{"kind", "conjectures"}, {"established", t.established}, {"rows", std::move(rows)}};
}

Valuation valuation_from_json(const Json& j) {
  std::vector<Atom> domain;
  for (const auto& a : get<std::vector<std::string>>(j, "domain")) domain.push_back(atom_from_string(a));
  std::vector<Atom> truths;
  for (const auto& a : get<std::vector<std::string>>(j, "true")) truths.push_back(atom_from_string(a));
  return Valuation::from_true_atoms(std::move(domain), truths);
}

Substitution substitution_from_json(const Json& j) {
  if (!j.is_object()) shape_error("substitution must be an object");
  std::vector<std::pair<NameVar, NameVar>> pairs;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string()) shape_error("substitution images must be strings");
    pairs.emplace_back(NameVar(it.key()), NameVar(it.value().get<std::string>()));
  }
  return Substitution(std::move(pairs));
}

TrivialityMap triviality_map_from_json(const Json& j) {
  TrivialityMap m{substitution_from_json(field(j, "sigma")), {}};
  for (std::size_t r : get<std::vector<std::size_t>>(j, "rho")) {
    if (r == 0) shape_error("rho is 1-based");
    m.rho.push_back(r - 1);
  }
  return m;
}

SchemaEntry schema_from_json(const Json& j) {
  return SchemaEntry(get<std::string>(j, "name"), parse_formula(get<std::string>(j, "formula")));
}

TheoremVerdict theorem_verdict_from_json(const Json& j) {
  TheoremVerdict v;
  v.is_theorem = get<bool>(j, "valid");
  for (const auto& n : get<std::vector<std::string>>(j, "pool")) v.pool.emplace_back(n);
  v.admissible_count = get<std::size_t>(j, "admissible_count");
  if (const Json& c = field(j, "counter_valuation"); !c.is_null()) {
    v.counter_valuation = valuation_from_json(c);
  }
  return v;
}

TrivialityReport triviality_report_from_json(const Json& j) {
  TrivialityReport r{schema_from_json(field(j, "subject")),
                     schema_from_json(field(j, "reference")),
                     TrivialityVerdict::Nontrivial,
                     std::nullopt,
                     {},
                     0};
  const auto verdict = get<std::string>(j, "verdict");
  if (verdict != "trivial" && verdict != "nontrivial") shape_error("unknown verdict '" + verdict + "'");
  r.verdict = verdict == "trivial" ? TrivialityVerdict::Trivial : TrivialityVerdict::Nontrivial;
  r.maps_checked = get<std::size_t>(j, "maps_checked");
  r.witness = optional_map(field(j, "witness"));
  r.refutations = refutations_from_json(field(j, "refutations"));
  return r;
}

QntReport qnt_report_from_json(const Json& j) {
  QntReport r{schema_from_json(field(j, "left")), schema_from_json(field(j, "right")),
              branch_from_json(field(j, "primary")), std::nullopt};
  if (const Json& c = field(j, "converse"); !c.is_null()) r.converse = branch_from_json(c);
  r.left_nontrivial = get<bool>(j, "left_nontrivial");
  r.right_nontrivial = get<bool>(j, "right_nontrivial");
  return r;
}

CharacterizationReport characterization_from_json(const Json& j) {
  CharacterizationReport r{schema_from_json(field(j, "subject")),
                           theorem_verdict_from_json(field(j, "validity")), {}, false, 4,
                           std::nullopt};
  r.characteristic = get<bool>(j, "characteristic");
  r.max_pool = get<std::size_t>(j, "max_pool");
  if (const Json& d = field(j, "derivation"); !d.is_null()) r.derivation = d.get<std::string>();
  for (const auto& a : field(j, "recovery")) {
    AxiomRecovery rec;
    auto which = axiom_from_name(get<std::string>(a, "axiom"));
    if (!which) shape_error("unknown axiom");
    rec.axiom = *which;
    rec.recovered = get<bool>(a, "recovered");
    rec.pool_size = get<std::size_t>(a, "pool_size");
    rec.instance_count = get<std::size_t>(a, "instance_count");
    for (const auto& s : field(a, "witness")) rec.witness.push_back(substitution_from_json(s));
    if (const Json& c = field(a, "countermodel"); !c.is_null()) rec.countermodel = valuation_from_json(c);
    r.recovery.push_back(std::move(rec));
  }
  return r;
}

// --------------------------------------------------------------------- text

std::string format_valuation(const Valuation& v) {
  std::string out = "t:";
  for (const auto& a : v.true_atoms()) out += " " + to_string(a);
  out += " | f:";
  for (const auto& a : v.false_atoms()) out += " " + to_string(a);
  return out;
}

std::string format_rho(const std::vector<std::size_t>& rho) {
  std::string out = "(";
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(rho[i] + 1);
  }
  return out + ")";
}

namespace {

char tv(bool b) { return b ? 't' : 'f'; }

// One line per map, numbered as cases.
void case_lines(std::ostringstream& os, const std::vector<Refutation>& refs,
                const SchemaEntry& substituted, const SchemaEntry& compared,
                const std::string& indent) {
  std::size_t k = 0;
  for (const auto& r : refs) {
    const Formula s = apply(r.map.sigma, substituted.body());
    os << indent << "Case " << ++k << ": sigma = " << print_substitution(r.map.sigma)
       << ", rho = " << format_rho(r.map.rho) << "; v = " << format_valuation(r.valuation)
       << "; v(sigma(" << substituted.name() << ")) = " << tv(evaluate(s, r.valuation)) << ", v("
       << compared.name() << ") = " << tv(evaluate(compared.body(), r.valuation)) << "\n";
  }
}

void branch_text(std::ostringstream& os, const QntReport& r, const QntBranch& b,
                 const std::string& label) {
  const SchemaEntry& sub = substituted_side(r, b);
  const SchemaEntry& cmp = compared_side(r, b);
  os << label << " (" << to_string(b.direction) << ", sigma applied to " << sub.name() << "): "
     << to_string(b.verdict) << ", " << b.maps_checked << " maps examined\n";
  if (b.witness) {
    os << "  witness: sigma = " << print_substitution(b.witness->sigma)
       << ", rho = " << format_rho(b.witness->rho) << "\n"
       << "  sigma(" << sub.name() << ") = " << print_formula(apply(b.witness->sigma, sub.body()))
       << "\n";
  }
  case_lines(os, b.refutations, sub, cmp, "  ");
}

}  // namespace

std::string to_text(const SemanticsVerdict& v, const std::string& subject) {
  std::ostringstream os;
  if (v.holds) {
    os << subject << ": holds\n";
  } else {
    os << subject << ": fails\n  counter-valuation: " << format_valuation(*v.witness) << "\n";
  }
  return os.str();
}

std::string to_text(const TheoremVerdict& v, const std::string& subject) {
  std::ostringstream os;
  os << subject << ": " << (v.is_theorem ? "valid (admissible semantics)" : "not valid") << "\n";
  os << "  pool:";
  for (const auto& p : v.pool) os << " " << p.id();
  os << "; " << v.admissible_count << " admissible valuations\n";
  if (v.counter_valuation) {
    os << "  counter-valuation: " << format_valuation(*v.counter_valuation) << "\n";
  }
  return os.str();
}

std::string to_text(const TrivialityReport& r) {
  std::ostringstream os;
  os << r.subject.name() << ": " << to_string(r.verdict) << " w.r.t. " << r.reference.name()
     << "\n";
  os << r.refutations.size() << " of " << r.maps_checked << " substitutions refuted\n";
  if (r.witness) {
    os << "witness: sigma = " << print_substitution(r.witness->sigma)
       << ", rho = " << format_rho(r.witness->rho) << "\n";
  }
  case_lines(os, r.refutations, r.subject, r.reference, "");
  return os.str();
}

std::string to_text(const QntReport& r) {
  std::ostringstream os;
  os << r.left.name() << " vs " << r.right.name() << ": " << to_string(r.verdict()) << "\n";
  os << "hypothesis (both nontrivial w.r.t. A_t): " << (r.hypothesis_met() ? "met" : "not met")
     << "\n";
  branch_text(os, r, r.primary, "definition branch");
  if (r.converse) {
    branch_text(os, r, *r.converse, "converse branch");
    if (!r.branches_agree()) os << "warning: the two branches disagree\n";
  }
  return os.str();
}

std::string to_text(const QntMatrix& m) {
  std::ostringstream os;
  std::size_t width = 6;
  for (const auto& e : m.entries) width = std::max(width, e.name().size() + 1);
  auto pad = [&](const std::string& s) { return s + std::string(width - s.size(), ' '); };
  os << pad("");
  for (const auto& e : m.entries) os << pad(e.name());
  os << "\n";
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    os << pad(m.entries[i].name());
    for (std::size_t j = 0; j < m.entries.size(); ++j) {
      const auto& c = m.cells[i][j];
      os << pad(!c ? "n/a" : c->verdict() == QntVerdict::QuasiTrivial ? "QT" : "QNT");
    }
    os << "\n";
  }
  os << "QT = quasi-trivial, QNT = quasi-nontrivial, n/a = criterion inapplicable\n";
  return os.str();
}

std::string to_text(const CharacterizationReport& r) {
  std::ostringstream os;
  os << r.subject.name() << ": " << (r.characteristic ? "characteristic" : "not characteristic")
     << " of L1\n";
  os << "  validity: " << r.validity_label();
  if (r.derivation) os << " [" << *r.derivation << "]";
  os << "\n";
  if (r.validity.counter_valuation) {
    os << "  counter-valuation: " << format_valuation(*r.validity.counter_valuation) << "\n";
  }
  for (const auto& a : r.recovery) {
    os << "  " << axiom_name(a.axiom) << ": ";
    if (a.recovered) {
      os << "recovered at pool " << a.pool_size << " from";
      for (const auto& s : a.witness) os << " " << print_substitution(s);
    } else {
      os << "not recovered (pool <= " << a.pool_size << "); countermodel "
         << format_valuation(*a.countermodel);
    }
    os << "\n";
  }
  return os.str();
}

std::string to_text(const ProofCheckResult& r) {
  std::ostringstream os;
  os << r.script << ": " << (r.ok ? "ok" : "FAILED") << "\n";
  for (const auto& l : r.lines) {
    os << "  " << l.line << ". " << (l.ok ? "ok  " : "FAIL") << " " << l.rule;
    if (!l.detail.empty()) os << " -- " << l.detail;
    os << "\n";
  }
  return os.str();
}

std::string to_text(const PaperVerdictReport& r) {
  std::ostringstream os;
  for (const auto& i : r.items) {
    os << (i.passed ? "PASS " : "FAIL ") << i.id << ": " << i.claim << "\n";
    for (const auto& e : i.evidence) os << "     " << e << "\n";
  }
  os << (r.items.size() - r.failures()) << " passed, " << r.failures() << " failed\n";
  return os.str();
}

std::string to_text(const ConjectureTable& t) {
  std::ostringstream os;
  os << "schema      valid  Ax1 Ax2 Ax3  char  nontriv";
  for (const auto& e : t.established) os << "  " << e;
  os << "\n";
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  for (const auto& row : t.rows) {
    std::string name = row.schema.name();
    name.resize(std::max<std::size_t>(name.size(), 11), ' ');
    const auto& c = row.characterization;
    os << name << " " << (c.validity.is_theorem ? "yes  " : "no   ");
    for (const auto& a : c.recovery) os << "  " << (a.recovered ? "y " : "n ");
    os << "  " << yn(c.characteristic) << (c.characteristic ? "  " : "   ");
    os << (row.nontriviality
               ? (row.nontriviality->verdict == TrivialityVerdict::Nontrivial ? "yes    " : "no     ")
               : "n/a    ");
    for (std::size_t k = 0; k < row.qnt.size(); ++k) {
      std::string cell = !row.qnt[k] ? "n/a"
                         : row.qnt[k]->verdict() == QntVerdict::QuasiTrivial ? "QT"
                                                                              : "QNT";
      cell.resize(std::max(cell.size(), t.established[k].size()), ' ');
      os << "  " << cell;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace l1
