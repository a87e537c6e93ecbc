// idemkit command-line front end.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "idemkit/idemkit.hpp"

using namespace idemkit;
using io::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCap = 3 };

struct Job {
  std::string command;
  std::string builtin;
  std::string file;
  std::string primes;
  std::string c_label;
  bool cyc = false;
  std::string format = "table";
  std::string out;
  std::string chartable_file;
  std::size_t lattice_cap = SubgroupLattice::default_cap;
  std::size_t chartable_cap = 2000;
  std::size_t order_cap = FiniteGroup::default_order_cap;
  double budget = 300;
  std::optional<std::string> groups;
};

struct UsageError : Error {
  using Error::Error;
};

GroupPtr load(const Job& job) {
  if (job.builtin.empty() == job.file.empty()) throw UsageError("give exactly one of --builtin or --file");
  if (!job.builtin.empty()) return builtin::by_name(job.builtin);
  return load_group_file(job.file, job.order_cap);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// A grid of strings rendered as an aligned table or as CSV.
struct Grid {
  std::vector<std::vector<std::string>> rows;

  static std::size_t width(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s)
      if ((c & 0xC0U) != 0x80U) ++n;
    return n;
  }

  std::string render(bool csv) const {
    std::ostringstream os;
    if (csv) {
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
        os << '\n';
      }
      return os.str();
    }
    std::vector<std::size_t> w;
    for (const auto& r : rows)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (w.size() <= i) w.push_back(0);
        w[i] = std::max(w[i], width(r[i]));
      }
    for (const auto& r : rows) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) line += "  ";
        line += r[i];
        if (i + 1 < r.size()) line += std::string(w[i] - width(r[i]), ' ');
      }
      os << line << '\n';
    }
    return os.str();
  }
};

std::string class_rep(const FiniteGroup& g, std::size_t k) {
  return g.element(g.conjugacy_classes()[k].representative).to_cycle_string();
}

std::vector<std::string> class_header(const FiniteGroup& g, std::string first) {
  std::vector<std::string> row{std::move(first)};
  for (std::size_t k = 0; k < g.conjugacy_classes().size(); ++k) row.push_back(class_rep(g, k));
  return row;
}

std::size_t resolve_cyclic_label(const SubgroupLattice& lattice, const PrimeSet& primes, const std::string& label) {
  auto allowed = cyclic_p_perfect_classes(lattice, primes);
  auto c = lattice.find_label(label);
  if (!c || std::find(allowed.begin(), allowed.end(), *c) == allowed.end()) {
    std::string names;
    for (auto a : allowed) names += (names.empty() ? "" : ", ") + lattice[a].label;
    throw UsageError("'" + label + "' is not a cyclic " + primes.to_string() + "-perfect subgroup class; available: {" +
                     names + "}");
  }
  return *c;
}

struct Output {
  std::string text;
  int status = kOk;
};

Output cmd_info(const Job& job, const GroupPtr& g, const PrimeSet& primes) {
  auto lattice = subgroup_classes(g, job.lattice_cap);
  auto perfect = p_perfect_classes(*lattice, primes);
  auto cyclic = cyclic_p_perfect_classes(*lattice, primes);
  if (job.format == "json") {
    json j = io::group_json(*g);
    j["exponent"] = g->exponent();
    j["abelian"] = g->is_abelian();
    j["primes"] = primes.primes();
    j["conjugacy_classes"] = io::conjugacy_classes_json(*g);
    j["subgroup_classes"] = io::subgroup_classes_json(*lattice);
    json pp = json::array(), cp = json::array();
    for (auto c : perfect) pp.push_back((*lattice)[c].label);
    for (auto c : cyclic) cp.push_back((*lattice)[c].label);
    j["p_perfect"] = pp;
    j["cyclic_p_perfect"] = cp;
    return {j.dump(2) + "\n"};
  }
  Grid classes{{{"class", "representative", "size", "order", "centralizer"}}};
  for (std::size_t k = 0; k < g->conjugacy_classes().size(); ++k) {
    const auto& c = g->conjugacy_classes()[k];
    classes.rows.push_back({std::to_string(k), class_rep(*g, k), std::to_string(c.members.size()),
                            std::to_string(c.element_order), std::to_string(c.centralizer_order)});
  }
  Grid subs{{{"subgroup", "order", "conjugates", "cyclic", "P-perfect"}}};
  for (std::size_t i = 0; i < lattice->size(); ++i) {
    const auto& c = (*lattice)[i];
    bool pp = std::find(perfect.begin(), perfect.end(), i) != perfect.end();
    subs.rows.push_back({c.label, std::to_string(c.order), std::to_string(c.class_size), c.cyclic ? "yes" : "no",
                         pp ? "yes" : "no"});
  }
  bool csv = job.format == "csv";
  std::string s;
  if (!csv) {
    s += "degree " + std::to_string(g->degree()) + ", order " + std::to_string(g->order()) + ", exponent " +
         std::to_string(g->exponent()) + (g->is_abelian() ? ", abelian" : "") + "\n";
    s += "primes " + primes.to_string() + "\n\n";
  }
  s += classes.render(csv) + (csv ? "" : "\n") + subs.render(csv);
  return {s};
}

Output cmd_marks(const Job& job, const GroupPtr& g) {
  auto lattice = subgroup_classes(g, job.lattice_cap);
  TableOfMarks t(lattice);
  if (job.format == "json") return {io::marks_json(t).dump(2) + "\n"};
  Grid grid;
  std::vector<std::string> head{"G/K \\ H"};
  for (const auto& c : lattice->classes()) head.push_back(c.label);
  grid.rows.push_back(head);
  for (std::size_t k = 0; k < t.size(); ++k) {
    std::vector<std::string> row{(*lattice)[k].label};
    for (std::size_t h = 0; h < t.size(); ++h) row.push_back(std::to_string(t(k, h)));
    grid.rows.push_back(std::move(row));
  }
  return {grid.render(job.format == "csv")};
}

CharacterTable table_for(const Job& job, const GroupPtr& g) {
  if (job.chartable_file.empty()) return character_table(g, job.chartable_cap);
  std::ifstream in(job.chartable_file);
  if (!in) throw InvalidArgument("cannot open character table file '" + job.chartable_file + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument("character table file is not valid JSON: " + std::string(e.what()));
  }
  return io::chartable_from_json(j, g);
}

Output cmd_chartable(const Job& job, const GroupPtr& g) {
  auto t = table_for(job, g);
  if (job.format == "json") return {io::chartable_json(t).dump(2) + "\n"};
  Grid grid{{class_header(*g, "")}};
  std::vector<std::string> sizes{"size"};
  for (const auto& c : g->conjugacy_classes()) sizes.push_back(std::to_string(c.members.size()));
  grid.rows.push_back(sizes);
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::string> row{"X" + std::to_string(i + 1)};
    for (const auto& v : t[i].values()) row.push_back(v.to_string());
    grid.rows.push_back(std::move(row));
  }
  return {grid.render(job.format == "csv")};
}

Output cmd_idempotents(const Job& job, const GroupPtr& g, const PrimeSet& primes) {
  auto lattice = subgroup_classes(g, job.lattice_cap);
  auto ring = make_burnside_ring(lattice, primes);
  auto table = table_for(job, g);
  auto records = classify_idempotents_R(*lattice, primes, table);
  if (job.format == "json") return {io::idempotents_json(ring, records).dump(2) + "\n"};
  bool csv = job.format == "csv";
  auto verdict = [](std::optional<bool> b) { return b ? (*b ? "yes" : "no") : "unchecked"; };

  Grid a;
  std::vector<std::string> head{"A_P idempotent", "primitive"};
  for (const auto& c : lattice->classes()) head.push_back("mark@" + c.label);
  for (const auto& c : lattice->classes()) head.push_back("[G/" + c.label + "]");
  a.rows.push_back(head);
  for (const auto& rec : all_dress_idempotents(ring)) {
    std::vector<std::string> row{"e_" + (*lattice)[rec.label].label, verdict(is_primitive_idempotent(rec.element))};
    for (const auto& m : rec.element.marks()) row.push_back(to_compact_string(m));
    for (const auto& c : rec.element.coeffs()) row.push_back(to_compact_string(c));
    a.rows.push_back(std::move(row));
  }
  Grid r{{class_header(*g, "R_P idempotent")}};
  r.rows.front().push_back("primitive");
  for (std::size_t i = 0; i < table.size(); ++i) r.rows.front().push_back("coeff X" + std::to_string(i + 1));
  for (const auto& rec : records) {
    std::vector<std::string> row{"e_" + (*lattice)[rec.label].label};
    for (const auto& v : rec.character.values()) row.push_back(v.to_string());
    row.push_back(verdict(rec.primitive));
    for (const auto& c : rec.coefficients) row.push_back(to_compact_string(c));
    r.rows.push_back(std::move(row));
  }
  std::string s;
  if (!csv) s += "group order " + std::to_string(g->order()) + ", primes " + primes.to_string() + "\n\n";
  s += a.render(csv) + (csv ? "" : "\n") + r.render(csv);
  return {s};
}

Output cmd_norms(const Job& job, const GroupPtr& g, const PrimeSet& primes) {
  auto lattice = subgroup_classes(g, job.lattice_cap);
  auto ring = make_burnside_ring(lattice, primes);
  NormContext ctx(ring, job.chartable_cap);
  auto report = equivalence_audit(ctx);
  std::vector<std::size_t> labels = report.labels;
  if (!job.cyc) {
    if (job.c_label.empty()) throw UsageError("norms needs --C LABEL or --cyc");
    labels = {resolve_cyclic_label(*lattice, primes, job.c_label)};
  }
  std::vector<EquivalenceCell> cells;
  for (const auto& c : report.cells)
    if (std::find(labels.begin(), labels.end(), c.c) != labels.end()) cells.push_back(c);
  bool agree = true;
  for (const auto& c : cells) agree = agree && c.agree();
  int status = agree ? kOk : kVerifyFailed;

  if (job.format == "json") {
    EquivalenceReport sub{labels, report.sites, cells};
    return {io::audit_json(ctx, sub).dump(2) + "\n", status};
  }
  const char* yes = "✓";
  const char* no = "✗";
  Grid grid;
  std::vector<std::string> head{"K <= H"};
  bool single = labels.size() == 1;
  if (single)
    head.insert(head.end(), {"(e)", "division A", "division R", "verdict"});
  else
    for (auto c : labels) head.push_back((*lattice)[c].label);
  grid.rows.push_back(head);
  for (std::size_t i = 0; i < report.sites.size(); ++i) {
    std::vector<std::string> row{site_label(ctx, report.sites[i])};
    for (std::size_t l = 0; l < labels.size(); ++l) {
      const auto& c = cells[l * report.sites.size() + i];
      std::string mark = c.agree() ? (c.condition_e ? yes : no) : "!";
      if (single) {
        row.insert(row.end(), {c.condition_e ? yes : no, c.division_a ? yes : no, c.division_r ? yes : no,
                               c.agree() ? mark : std::string("disagree")});
      } else {
        row.push_back(mark);
      }
    }
    grid.rows.push_back(std::move(row));
  }
  std::string s = grid.render(job.format == "csv");
  if (job.format != "csv") s += agree ? "all predicates agree\n" : "DISAGREEMENT (marked !)\n";
  return {s, status};
}

Output cmd_indexing(const Job& job, const GroupPtr& g, const PrimeSet& primes) {
  auto lattice = subgroup_classes(g, job.lattice_cap);
  auto ring = make_burnside_ring(lattice, primes);
  NormContext ctx(ring, job.chartable_cap);
  IndexingSystem sys;
  std::string name;
  if (job.cyc) {
    sys = indexing_system_cyc(ctx);
    name = "I_cyc";
  } else {
    if (job.c_label.empty()) throw UsageError("indexing needs --C LABEL or --cyc");
    auto c = resolve_cyclic_label(*lattice, primes, job.c_label);
    sys = indexing_system(ctx, c);
    name = "I_" + (*lattice)[c].label;
  }
  auto axioms = axioms_check(ctx, sys);
  int status = axioms.ok ? kOk : kVerifyFailed;
  if (job.format == "json") return {io::indexing_json(ctx, sys, name).dump(2) + "\n", status};
  Grid grid{{{"H", "admissible K", "complete"}}};
  bool complete = true;
  for (std::size_t h = 0; h < lattice->size(); ++h) {
    std::string adm;
    bool all = true;
    const auto& hl = *ctx.sub(h).lattice;
    for (std::size_t k = 0; k < hl.size(); ++k) {
      if (sys(h, k))
        adm += (adm.empty() ? "" : " ") + hl[k].label;
      else
        all = false;
    }
    complete = complete && all;
    grid.rows.push_back({(*lattice)[h].label, adm, all ? "yes" : "no"});
  }
  std::string s = grid.render(job.format == "csv");
  if (job.format != "csv") {
    s += name + (complete ? " is complete" : " is not complete") + "; axioms " +
         (axioms.ok ? "hold" : "fail: " + axioms.violation) + "\n";
  }
  return {s, status};
}

Output cmd_verify(const Job& job) {
  VerifyOptions opt;
  if (!job.file.empty()) throw UsageError("verify runs on builtin groups only");
  if (!job.builtin.empty() && job.groups) throw UsageError("give at most one of --builtin or --groups");
  if (!job.builtin.empty()) opt.groups = {job.builtin};
  if (job.groups) {
    opt.groups.clear();
    std::istringstream in(*job.groups);
    for (std::string name; std::getline(in, name, ',');)
      if (!name.empty()) opt.groups.push_back(name);
  }
  opt.lattice_cap = job.lattice_cap;
  opt.chartable_cap = job.chartable_cap;
  opt.budget_seconds = job.budget;
  auto report = verify_corpus(opt);
  int status = report.ok() ? kOk : kVerifyFailed;
  std::size_t audit_cells = 0;
  for (const auto& c : report.cells) audit_cells += c.audit_cells;
  if (job.format == "json") {
    json cells = json::array();
    for (const auto& c : report.cells) {
      json checks = json::array();
      for (const auto& k : c.checks) checks.push_back({{"check", k.name}, {"ok", k.ok}, {"detail", k.detail}});
      cells.push_back({{"group", c.group}, {"primes", c.primes.primes()}, {"ok", c.ok()}, {"checks", checks}});
    }
    json j = {{"cells", cells}, {"audit_cells", audit_cells}, {"ok", report.ok()}};
    return {j.dump(2) + "\n", status};
  }
  Grid grid{{{"group", "primes", "result", "detail"}}};
  std::size_t passed = 0;
  for (const auto& c : report.cells) {
    std::string detail;
    for (const auto& k : c.checks)
      if (!k.ok) detail += (detail.empty() ? "" : "; ") + k.name + ": " + k.detail;
    if (c.ok()) ++passed;
    grid.rows.push_back({c.group, c.primes.to_string(), c.ok() ? "pass" : "FAIL", detail});
  }
  std::string s = grid.render(job.format == "csv");
  if (job.format != "csv")
    s += std::to_string(passed) + "/" + std::to_string(report.cells.size()) + " cells pass, " +
         std::to_string(audit_cells) + " equivalence cells\n";
  return {s, status};
}

}  // namespace

int main(int argc, char** argv) {
  Job job;
  CLI::App app{"Idempotents of P-local Burnside and representation rings, and the norms they admit"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub, bool primes, bool label) {
    sub->add_option("--builtin", job.builtin, "builtin group: C<n>, S<n>, A<n>, D<n>, Q8, products with x");
    sub->add_option("--file", job.file, "group file (degree line, then one generator per line)");
    sub->add_option("--format", job.format, "output format")->check(CLI::IsMember({"json", "table", "csv"}));
    sub->add_option("--out", job.out, "write output to this file");
    sub->add_option("--lattice-cap", job.lattice_cap, "largest group order for subgroup lattices");
    sub->add_option("--chartable-cap", job.chartable_cap, "largest group order for character tables");
    sub->add_option("--order-cap", job.order_cap, "largest group order accepted from files");
    if (primes) sub->add_option("--primes", job.primes, "comma-separated prime set, empty for the rational case");
    if (label) {
      auto* c = sub->add_option("--C", job.c_label, "label of a cyclic P-perfect subgroup class");
      sub->add_flag("--cyc", job.cyc, "use every cyclic P-perfect class (I_cyc)")->excludes(c);
    }
  };
  add_common(app.add_subcommand("info", "group summary, classes and subgroup classes"), true, false);
  add_common(app.add_subcommand("marks", "table of marks"), false, false);
  auto* chart = app.add_subcommand("chartable", "character table");
  add_common(chart, false, false);
  chart->add_option("--chartable-file", job.chartable_file, "ingest this JSON character table instead of computing");
  auto* idem = app.add_subcommand("idempotents", "primitive idempotents of A_P(G) and R_P(G)");
  add_common(idem, true, false);
  idem->add_option("--chartable-file", job.chartable_file, "ingest this JSON character table instead of computing");
  add_common(app.add_subcommand("norms", "which norms each idempotent block admits"), true, true);
  add_common(app.add_subcommand("indexing", "indexing systems I_C and I_cyc"), true, true);
  auto* verify = app.add_subcommand("verify", "run every audit over the corpus");
  add_common(verify, false, false);
  verify->add_option("--budget", job.budget, "wall-clock budget in seconds");
  verify->add_option("--groups", job.groups, "comma-separated builtin groups replacing the default corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  job.command = app.get_subcommands().front()->get_name();

  try {
    Output result;
    if (job.command == "verify") {
      result = cmd_verify(job);
    } else {
      auto g = load(job);
      auto primes = PrimeSet::parse(job.primes);
      if (job.command == "info") result = cmd_info(job, g, primes);
      else if (job.command == "marks") result = cmd_marks(job, g);
      else if (job.command == "chartable") result = cmd_chartable(job, g);
      else if (job.command == "idempotents") result = cmd_idempotents(job, g, primes);
      else if (job.command == "norms") result = cmd_norms(job, g, primes);
      else result = cmd_indexing(job, g, primes);
    }
    if (job.out.empty()) {
      std::cout << result.text;
    } else {
      std::ofstream out(job.out);
      if (!out) throw InvalidArgument("cannot write '" + job.out + "'");
      out << result.text;
    }
    return result.status;
  } catch (const CapExceeded& e) {
    std::cerr << "idemkit: " << e.what() << '\n';
    return kCap;
  } catch (const ParseError& e) {
    std::cerr << "idemkit: parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "idemkit: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "idemkit: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "idemkit: internal error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}
