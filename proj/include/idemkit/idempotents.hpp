#ifndef IDEMKIT_IDEMPOTENTS_HPP
#define IDEMKIT_IDEMPOTENTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "idemkit/burnside.hpp"
#include "idemkit/charfun.hpp"
#include "idemkit/chartable.hpp"

namespace idemkit {

/// A primitive idempotent of R_P(G), labelled by a cyclic P-perfect class.
struct IdempotentRecordR {
  std::size_t label;
  ClassFunction character;
  std::vector<std::size_t> support;     // conjugacy classes where the character is 1
  std::vector<Rational> coefficients;   // against the rows of the character table
  std::optional<bool> primitive;        // nullopt when the support exceeds the search cap
};

/// Conjugacy classes of g with <g_P'> conjugate to the cyclic class c.
inline std::vector<std::size_t> support_set(const SubgroupLattice& lattice, const PrimeSet& primes, std::size_t c) {
  const auto& g = *lattice.group();
  if (!lattice[c].cyclic) throw InvalidArgument(lattice[c].label + " is not cyclic");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < g.conjugacy_classes().size(); ++k)
    if (lattice.cyclic_class_of(p_prime_part(g, g.conjugacy_classes()[k].representative, primes)) == c)
      out.push_back(k);
  return out;
}

/// Coefficients of the indicator of the support of e_C against the
/// irreducibles: sum over support classes y of chi(y^-1) / |C_G(y)|.
inline std::vector<Rational> brauer_coefficients(const SubgroupLattice& lattice, const PrimeSet& primes, std::size_t c,
                                                 const CharacterTable& table) {
  const auto& g = *lattice.group();
  const auto support = support_set(lattice, primes, c);
  std::vector<Rational> out;
  for (const auto& irr : table.irreducibles) {
    CycNumber acc(0);
    for (auto k : support)
      acc += irr[g.inverse_class(k)].scaled(Rational(1, static_cast<std::int64_t>(g.conjugacy_classes()[k].centralizer_order)));
    if (!acc.is_rational()) throw InternalError("Brauer coefficient of " + lattice[c].label + " is not rational");
    out.push_back(acc.rational_value());
  }
  return out;
}

/// True iff no nonempty proper subset of the support has an indicator in R_P(G).
inline bool verify_primitive(const IdempotentRecordR& rec, const PrimeSet& primes, const CharacterTable& table,
                             std::size_t cap = 12) {
  const std::size_t n = rec.support.size();
  if (n > cap)
    throw CapExceeded("support of " + std::to_string(n) + " classes exceeds subset-search cap " + std::to_string(cap));
  if (n == 0) return false;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) subset.push_back(rec.support[i]);
    if (in_rep_ring_p(ClassFunction::indicator(table.group, subset), primes, table).member) return false;
  }
  return true;
}

inline std::vector<IdempotentRecordR> classify_idempotents_R(const SubgroupLattice& lattice, const PrimeSet& primes,
                                                             const CharacterTable& table, std::size_t cap = 12) {
  std::vector<IdempotentRecordR> out;
  for (auto c : cyclic_p_perfect_classes(lattice, primes)) {
    auto support = support_set(lattice, primes, c);
    IdempotentRecordR rec{c, ClassFunction::indicator(lattice.group(), support), support,
                          brauer_coefficients(lattice, primes, c, table), std::nullopt};
    if (support.size() <= cap) rec.primitive = verify_primitive(rec, primes, table, cap);
    out.push_back(std::move(rec));
  }
  return out;
}

/// Classes of P'-elements modulo "generate the same cyclic subgroup" must match
/// the cyclic P-perfect classes via x -> <x>, with matching supports.
inline bool gamma_orbit_crosscheck(const SubgroupLattice& lattice, const PrimeSet& primes) {
  const auto& g = *lattice.group();
  const auto& classes = g.conjugacy_classes();
  std::vector<std::size_t> parent(classes.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& block : generator_orbits(g))
    for (auto x : block) parent[find(g.class_of(x))] = find(g.class_of(block.front()));

  std::map<std::size_t, std::set<std::size_t>> orbits;  // root -> P'-element classes
  for (std::size_t k = 0; k < classes.size(); ++k)
    if (primes.is_p_prime_number(classes[k].element_order)) orbits[find(k)].insert(k);

  std::map<std::size_t, std::size_t> label_of_orbit;
  std::set<std::size_t> labels;
  for (const auto& [root, members] : orbits) {
    std::size_t c = lattice.cyclic_class_of(classes[*members.begin()].representative);
    for (auto k : members)
      if (lattice.cyclic_class_of(classes[k].representative) != c) return false;
    if (!labels.insert(c).second) return false;
    label_of_orbit[root] = c;
  }
  auto expected = cyclic_p_perfect_classes(lattice, primes);
  if (std::vector<std::size_t>(labels.begin(), labels.end()) != expected) return false;

  for (const auto& [root, c] : label_of_orbit) {
    std::vector<std::size_t> induced;
    for (std::size_t k = 0; k < classes.size(); ++k)
      if (orbits[root].count(g.class_of(p_prime_part(g, classes[k].representative, primes)))) induced.push_back(k);
    if (induced != support_set(lattice, primes, c)) return false;
  }
  return true;
}

struct LinKernelReport {
  bool ker_block_in_kernel = false;  // lin vanishes on e_ker * A_P(G)
  bool injective_on_cyc = false;     // lin is injective on e_cyc * A_P(G)
  std::optional<BurnsideElement> witness;  // nonzero element of e_cyc * A_P(G) with lin = 0
};

/// Tests lin on e_ker times every basis element, and injectivity of lin on
/// e_cyc * A_P(G) by comparing ranks over Q.
inline LinKernelReport lin_kernel_check(const RingPtr& ring) {
  const auto& lattice = *ring->lattice();
  auto [cyc, ker] = split_cyc_ker(ring);
  LinKernelReport out;
  out.ker_block_in_kernel = lin(ker).is_zero();
  for (std::size_t k = 0; k < ring->rank(); ++k)
    if (!lin(ring->basis(k) * ker).is_zero()) out.ker_block_in_kernel = false;

  std::vector<std::size_t> cyclic_cols;
  for (std::size_t h = 0; h < lattice.size(); ++h)
    if (lattice[h].cyclic) cyclic_cols.push_back(h);
  std::size_t block_rank = 0;
  for (std::size_t h = 0; h < lattice.size(); ++h)
    if (cyc.mark(h) != 0) ++block_rank;
  // rows: marks of the cyclic block elements at cyclic classes
  std::vector<std::vector<Rational>> rows;
  for (std::size_t k = 0; k < ring->rank(); ++k) {
    auto x = ring->basis(k) * cyc;
    std::vector<Rational> row;
    for (auto h : cyclic_cols) row.push_back(x.mark(h));
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cyclic_cols.size() && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < cyclic_cols.size(); ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  out.injective_on_cyc = rank == block_rank;
  if (!out.injective_on_cyc) {
    // an element of the block supported at non-cyclic classes, cleared to be integral
    for (std::size_t h = 0; h < lattice.size() && !out.witness; ++h) {
      if (lattice[h].cyclic || cyc.mark(h) == 0) continue;
      std::vector<Rational> marks(ring->rank());
      marks[h] = 1;
      auto coeffs = ring->solve_marks(marks);
      Integer scale = 1;
      for (const auto& q : coeffs) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(q));
      for (auto& m : marks) m *= Rational(scale);
      out.witness = ring->from_marks(std::move(marks));
    }
  }
  return out;
}

}  // namespace idemkit

#endif  // IDEMKIT_IDEMPOTENTS_HPP
