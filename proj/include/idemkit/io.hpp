#ifndef IDEMKIT_IO_HPP
#define IDEMKIT_IO_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "idemkit/burnside.hpp"
#include "idemkit/chartable.hpp"
#include "idemkit/idempotents.hpp"
#include "idemkit/norms.hpp"

// JSON forms of the library's values. Rationals are "num/den" strings and
// cyclotomic numbers are {"conductor", "coefficients"} in the power basis.
namespace idemkit::io {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw InvalidArgument("expected a rational as a \"num/den\" string");
  return parse_rational(j.get<std::string>());
}

inline json to_json(const CycNumber& z) {
  json coeffs = json::array();
  for (const auto& c : z.coefficients()) coeffs.push_back(to_json(c));
  return {{"conductor", z.conductor()}, {"coefficients", std::move(coeffs)}};
}

inline CycNumber cyc_from_json(const json& j) {
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coefficients"))
    throw InvalidArgument("expected a cyclotomic number {conductor, coefficients}");
  auto n = j.at("conductor").get<std::uint64_t>();
  if (n == 0) throw InvalidArgument("cyclotomic conductor must be positive");
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.push_back(rational_from_json(c));
  return CycNumber::from_basis(n, std::move(coeffs));
}

inline json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

inline json group_json(const FiniteGroup& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_cycle_string());
  return {{"degree", g.degree()}, {"order", g.order()}, {"generators", std::move(gens)}};
}

inline json conjugacy_classes_json(const FiniteGroup& g) {
  json out = json::array();
  for (const auto& c : g.conjugacy_classes())
    out.push_back({{"representative", g.element(c.representative).to_cycle_string()},
                   {"size", c.members.size()},
                   {"centralizer_order", c.centralizer_order},
                   {"element_order", c.element_order}});
  return out;
}

inline json subgroup_class_json(const FiniteGroup& g, const SubgroupClass& c) {
  json gens = json::array();
  for (auto x : c.representative.generators) gens.push_back(g.element(x).to_cycle_string());
  return {{"label", c.label},
          {"order", c.order},
          {"class_size", c.class_size},
          {"cyclic", c.cyclic},
          {"generators", std::move(gens)}};
}

inline json subgroup_classes_json(const SubgroupLattice& lattice) {
  json out = json::array();
  for (const auto& c : lattice.classes()) out.push_back(subgroup_class_json(*lattice.group(), c));
  return out;
}

inline json marks_json(const TableOfMarks& t) {
  const auto& lattice = *t.lattice();
  json rows = json::array();
  for (std::size_t k = 0; k < t.size(); ++k) {
    json row = json::array();
    for (std::size_t h = 0; h < t.size(); ++h) row.push_back(t(k, h));
    rows.push_back(std::move(row));
  }
  return {{"group", group_json(*lattice.group())},
          {"subgroup_classes", subgroup_classes_json(lattice)},
          {"marks", std::move(rows)}};
}

/// Reads a table written by marks_json; the subgroup classes and the marks
/// must match the lattice exactly.
inline TableOfMarks marks_from_json(const json& j, LatticePtr lattice) {
  if (j.at("subgroup_classes") != subgroup_classes_json(*lattice))
    throw InvalidArgument("table of marks was written for different subgroup classes");
  const auto& rows = j.at("marks");
  const std::size_t n = lattice->size();
  if (rows.size() != n) throw InvalidArgument("table of marks has the wrong number of rows");
  std::vector<std::int64_t> entries;
  for (const auto& row : rows) {
    if (row.size() != n) throw InvalidArgument("table of marks has a row of the wrong length");
    for (const auto& x : row) entries.push_back(x.get<std::int64_t>());
  }
  TableOfMarks t(lattice, std::move(entries));
  if (!(t == TableOfMarks(lattice))) throw InvalidArgument("table of marks does not match the group");
  return t;
}

inline json element_json(const BurnsideElement& x) {
  return {{"coefficients", rationals(x.coeffs())}, {"marks", rationals(x.marks())}};
}

inline json chartable_json(const CharacterTable& t) {
  json chars = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    json values = json::array();
    for (const auto& v : t[i].values()) values.push_back(to_json(v));
    chars.push_back({{"degree", t.degrees[i]}, {"values", std::move(values)}});
  }
  return {{"group", group_json(*t.group)},
          {"classes", conjugacy_classes_json(*t.group)},
          {"characters", std::move(chars)}};
}

/// Ingests an externally supplied character table for `group`. Classes are
/// matched by representative and size; the rows must be orthonormal and
/// complete.
inline CharacterTable chartable_from_json(const json& j, const GroupPtr& group) {
  const auto& g = *group;
  const auto& classes = j.at("classes");
  if (classes.size() != g.conjugacy_classes().size())
    throw InvalidArgument("character table has " + std::to_string(classes.size()) + " classes, group has " +
                          std::to_string(g.conjugacy_classes().size()));
  for (std::size_t k = 0; k < classes.size(); ++k) {
    auto rep = Permutation::parse(classes[k].at("representative").get<std::string>(), g.degree());
    auto idx = g.find(rep);
    if (!idx || g.class_of(*idx) != k || classes[k].at("size").get<std::size_t>() != g.conjugacy_classes()[k].members.size())
      throw InvalidArgument("character table class " + std::to_string(k) + " does not match the group");
  }
  CharacterTable t{group, {}, {}};
  for (const auto& row : j.at("characters")) {
    std::vector<CycNumber> values;
    for (const auto& v : row.at("values")) values.push_back(cyc_from_json(v));
    if (values.size() != classes.size()) throw InvalidArgument("character has the wrong number of values");
    auto degree = row.at("degree").get<std::int64_t>();
    if (!(values[0] == CycNumber(degree))) throw InvalidArgument("character degree disagrees with its value at 1");
    t.irreducibles.emplace_back(group, std::move(values));
    t.degrees.push_back(degree);
  }
  if (t.size() != classes.size()) throw InvalidArgument("character table is not square");
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b)
      if (!(inner_product(t[a], t[b]) == CycNumber(a == b ? 1 : 0)))
        throw InvalidArgument("supplied characters are not orthonormal");
  return t;
}

inline json class_function_json(const ClassFunction& chi) {
  json out = json::array();
  for (const auto& v : chi.values()) out.push_back(chi.is_rational() ? json(to_string(v.rational_value())) : to_json(v));
  return out;
}

inline json idempotents_json(const RingPtr& ring, const std::vector<IdempotentRecordR>& records) {
  const auto& lattice = *ring->lattice();
  const auto& g = *lattice.group();
  json a = json::array();
  for (const auto& rec : all_dress_idempotents(ring)) {
    auto prim = is_primitive_idempotent(rec.element);
    json entry = {{"label", lattice[rec.label].label}, {"subgroup", subgroup_class_json(g, lattice[rec.label])}};
    entry["element"] = element_json(rec.element);
    entry["primitive"] = prim ? json(*prim) : json(nullptr);
    a.push_back(std::move(entry));
  }
  json r = json::array();
  for (const auto& rec : records) {
    json support = json::array();
    for (auto k : rec.support) support.push_back(g.element(g.conjugacy_classes()[k].representative).to_cycle_string());
    r.push_back({{"label", lattice[rec.label].label},
                 {"subgroup", subgroup_class_json(g, lattice[rec.label])},
                 {"character", class_function_json(rec.character)},
                 {"support", std::move(support)},
                 {"coefficients", rationals(rec.coefficients)},
                 {"primitive", rec.primitive ? json(*rec.primitive) : json(nullptr)}});
  }
  return {{"group", group_json(g)},
          {"primes", ring->primes().primes()},
          {"conjugacy_classes", conjugacy_classes_json(g)},
          {"subgroup_classes", subgroup_classes_json(lattice)},
          {"burnside", std::move(a)},
          {"representation", std::move(r)},
          {"gamma_orbit_crosscheck", gamma_orbit_crosscheck(lattice, ring->primes())}};
}

inline json site_json(const NormContext& ctx, const NormSite& s) {
  return {{"H", ctx.lattice()[s.h].label}, {"K", (*ctx.sub(s.h).lattice)[s.k].label}};
}

inline json audit_json(const NormContext& ctx, const EquivalenceReport& report) {
  json cells = json::array();
  for (const auto& c : report.cells) {
    json cell = site_json(ctx, c.site);
    cell["C"] = ctx.lattice()[c.c].label;
    cell["condition_e"] = c.condition_e;
    cell["division_A"] = c.division_a;
    cell["division_R"] = c.division_r;
    cell["agree"] = c.agree();
    cells.push_back(std::move(cell));
  }
  json labels = json::array();
  for (auto c : report.labels) labels.push_back(ctx.lattice()[c].label);
  return {{"group", group_json(ctx.group())},
          {"primes", ctx.primes().primes()},
          {"labels", std::move(labels)},
          {"cells", std::move(cells)},
          {"all_agree", report.all_agree()}};
}

inline json indexing_json(const NormContext& ctx, const IndexingSystem& sys, const std::string& name) {
  json rows = json::array();
  for (std::size_t h = 0; h < sys.admissible.size(); ++h) {
    json admissible = json::array();
    const auto& hl = *ctx.sub(h).lattice;
    for (std::size_t k = 0; k < hl.size(); ++k)
      if (sys(h, k)) admissible.push_back(hl[k].label);
    rows.push_back({{"H", ctx.lattice()[h].label}, {"admissible", std::move(admissible)}});
  }
  auto axioms = axioms_check(ctx, sys);
  return {{"group", group_json(ctx.group())},
          {"primes", ctx.primes().primes()},
          {"system", name},
          {"subgroups", std::move(rows)},
          {"axioms", axioms.ok},
          {"violation", axioms.violation}};
}

}  // namespace idemkit::io

#endif  // IDEMKIT_IO_HPP
