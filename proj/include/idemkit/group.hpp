#ifndef IDEMKIT_GROUP_HPP
#define IDEMKIT_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "idemkit/errors.hpp"
#include "idemkit/number.hpp"
#include "idemkit/permutation.hpp"

namespace idemkit {

using ElementIndex = std::uint32_t;

/// Sorted list of element indices of a group.
using ElementSet = std::vector<ElementIndex>;

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : s) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

struct ConjugacyClass {
  ElementIndex representative;
  ElementSet members;
  std::uint64_t centralizer_order;
  std::uint64_t element_order;
};

/// A finite permutation group with its full element list, Cayley table and
/// conjugacy classes. Elements are numbered breadth-first from the identity
/// (index 0), expanding by the generators in the order given.
class FiniteGroup {
 public:
  static constexpr std::size_t default_order_cap = 5000;

  FiniteGroup(std::size_t degree, std::vector<Permutation> generators,
              std::size_t order_cap = default_order_cap)
      : degree_(degree), generators_(std::move(generators)) {
    if (order_cap == 0) throw InvalidArgument("order cap must be positive");
    for (const auto& g : generators_)
      if (g.degree() != degree_)
        throw InvalidArgument("generator " + g.to_cycle_string() + " has degree " + std::to_string(g.degree()) +
                              ", expected " + std::to_string(degree_));
    enumerate(order_cap);
    build_tables();
    build_classes();
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(ElementIndex i) const { return elements_[i]; }

  static constexpr ElementIndex identity() noexcept { return 0; }

  ElementIndex mul(ElementIndex a, ElementIndex b) const { return table_[std::size_t{a} * order() + b]; }
  ElementIndex inverse(ElementIndex a) const { return inverse_[a]; }
  ElementIndex conjugate(ElementIndex g, ElementIndex x) const { return mul(mul(g, x), inverse_[g]); }
  std::uint64_t element_order(ElementIndex a) const { return order_of_[a]; }

  ElementIndex power(ElementIndex a, std::int64_t k) const {
    auto o = static_cast<std::int64_t>(order_of_[a]);
    k %= o;
    if (k < 0) k += o;
    ElementIndex result = identity();
    ElementIndex base = a;
    auto e = static_cast<std::uint64_t>(k);
    while (e > 0) {
      if (e & 1U) result = mul(result, base);
      base = mul(base, base);
      e >>= 1U;
    }
    return result;
  }

  std::optional<ElementIndex> find(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  ElementIndex index_of(const Permutation& p) const {
    auto i = find(p);
    if (!i) throw InvalidArgument("permutation " + p.to_cycle_string() + " is not in the group");
    return *i;
  }

  std::vector<ElementIndex> generator_indices() const {
    std::vector<ElementIndex> out;
    for (const auto& g : generators_) out.push_back(index_of(g));
    return out;
  }

  /// Least common multiple of the element orders.
  std::uint64_t exponent() const { return exponent_; }

  bool is_abelian() const {
    auto gens = generator_indices();
    for (auto a : gens)
      for (auto b : gens)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Sorted by element order, then by first occurrence in the element list.
  const std::vector<ConjugacyClass>& conjugacy_classes() const noexcept { return classes_; }
  std::size_t class_of(ElementIndex g) const { return class_of_[g]; }
  /// Index of the class containing the inverses of class c.
  std::size_t inverse_class(std::size_t c) const { return inverse_class_[c]; }

  /// The cyclic subgroup generated by g, as a sorted index set.
  ElementSet cyclic_subgroup(ElementIndex g) const {
    ElementSet s;
    ElementIndex x = identity();
    do {
      s.push_back(x);
      x = mul(x, g);
    } while (x != identity());
    std::sort(s.begin(), s.end());
    return s;
  }

 private:
  void enumerate(std::size_t order_cap) {
    auto id = Permutation::identity(degree_);
    elements_.push_back(id);
    index_.emplace(id, 0);
    for (std::size_t head = 0; head < elements_.size(); ++head) {
      for (const auto& s : generators_) {
        Permutation y = s * elements_[head];
        if (index_.count(y)) continue;
        if (elements_.size() >= order_cap)
          throw CapExceeded("group order exceeds cap " + std::to_string(order_cap));
        index_.emplace(y, static_cast<ElementIndex>(elements_.size()));
        elements_.push_back(std::move(y));
      }
    }
  }

  void build_tables() {
    const std::size_t n = order();
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = index_.at(elements_[a] * elements_[b]);
    inverse_.resize(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (table_[a * n + b] == identity()) {
          inverse_[a] = static_cast<ElementIndex>(b);
          break;
        }
    order_of_.resize(n);
    exponent_ = 1;
    for (std::size_t a = 0; a < n; ++a) {
      std::uint64_t k = 1;
      for (ElementIndex x = static_cast<ElementIndex>(a); x != identity(); x = mul(x, static_cast<ElementIndex>(a)))
        ++k;
      order_of_[a] = k;
      exponent_ = std::lcm(exponent_, k);
    }
  }

  void build_classes() {
    const std::size_t n = order();
    auto gens = generator_indices();
    std::vector<std::int64_t> raw_class(n, -1);
    std::vector<ConjugacyClass> raw;
    for (ElementIndex x = 0; x < n; ++x) {
      if (raw_class[x] >= 0) continue;
      ConjugacyClass c{x, {x}, 0, order_of_[x]};
      raw_class[x] = static_cast<std::int64_t>(raw.size());
      for (std::size_t head = 0; head < c.members.size(); ++head)
        for (auto s : gens) {
          ElementIndex y = conjugate(s, c.members[head]);
          if (raw_class[y] < 0) {
            raw_class[y] = static_cast<std::int64_t>(raw.size());
            c.members.push_back(y);
          }
        }
      std::sort(c.members.begin(), c.members.end());
      c.centralizer_order = n / c.members.size();
      raw.push_back(std::move(c));
    }
    std::stable_sort(raw.begin(), raw.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
      if (a.element_order != b.element_order) return a.element_order < b.element_order;
      return a.representative < b.representative;
    });
    classes_ = std::move(raw);
    class_of_.assign(n, 0);
    for (std::size_t c = 0; c < classes_.size(); ++c)
      for (auto x : classes_[c].members) class_of_[x] = c;
    inverse_class_.resize(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c)
      inverse_class_[c] = class_of_[inverse_[classes_[c].representative]];
  }

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementIndex, PermutationHash> index_;
  std::vector<ElementIndex> table_;
  std::vector<ElementIndex> inverse_;
  std::vector<std::uint64_t> order_of_;
  std::uint64_t exponent_ = 1;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> inverse_class_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Closure of `gens` under composition. An empty generator list needs the degree.
inline GroupPtr group_from_generators(std::vector<Permutation> gens,
                                      std::size_t order_cap = FiniteGroup::default_order_cap) {
  if (gens.empty()) throw InvalidArgument("group_from_generators: degree unknown for empty generator list");
  std::size_t degree = gens.front().degree();
  return std::make_shared<const FiniteGroup>(degree, std::move(gens), order_cap);
}

inline GroupPtr group_from_generators(std::size_t degree, std::vector<Permutation> gens,
                                      std::size_t order_cap = FiniteGroup::default_order_cap) {
  return std::make_shared<const FiniteGroup>(degree, std::move(gens), order_cap);
}

// ---------------------------------------------------------------------------
// Element-level operations.

/// {g_P, g_P'} as element indices.
inline std::pair<ElementIndex, ElementIndex> p_part_decomposition(const FiniteGroup& g, ElementIndex x,
                                                                  const PrimeSet& primes) {
  std::uint64_t order = g.element_order(x);
  std::uint64_t m = primes.p_part(order);
  std::uint64_t n = order / m;
  auto prime_exp = static_cast<std::int64_t>(m * inverse_mod(m % n, n) % order);
  auto part_exp = static_cast<std::int64_t>(n * inverse_mod(n % m, m) % order);
  return {g.power(x, part_exp), g.power(x, prime_exp)};
}

inline ElementIndex p_prime_part(const FiniteGroup& g, ElementIndex x, const PrimeSet& primes) {
  return p_part_decomposition(g, x, primes).second;
}

/// One representative per double coset A h B with h in `within` (all of G when
/// empty); each representative is the least element index of its double coset.
inline std::vector<ElementIndex> double_cosets(const FiniteGroup& g, const ElementSet& a, const ElementSet& b,
                                               const ElementSet& within = {}) {
  std::vector<bool> covered(g.order(), false);
  std::vector<ElementIndex> reps;
  auto visit = [&](ElementIndex h) {
    if (covered[h]) return;
    reps.push_back(h);
    for (auto x : a) {
      ElementIndex xh = g.mul(x, h);
      for (auto y : b) covered[g.mul(xh, y)] = true;
    }
  };
  if (within.empty()) {
    for (ElementIndex h = 0; h < g.order(); ++h) visit(h);
  } else {
    for (auto h : within) visit(h);
  }
  return reps;
}

/// Partition of the elements by the cyclic subgroup they generate; blocks are
/// ordered by their least element, members ascending.
inline std::vector<ElementSet> generator_orbits(const FiniteGroup& g) {
  std::map<ElementSet, std::size_t> block_of;
  std::vector<ElementSet> blocks;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    auto key = g.cyclic_subgroup(x);
    auto [it, inserted] = block_of.emplace(std::move(key), blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].push_back(x);
  }
  return blocks;
}

// ---------------------------------------------------------------------------
// Builtin groups.

namespace builtin {

inline GroupPtr cyclic(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic group order must be positive");
  if (n == 1) return group_from_generators(1, {});
  std::vector<std::uint32_t> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>(i);
  return group_from_generators(n, {Permutation::from_cycles(n, {cycle})});
}

inline GroupPtr symmetric(std::size_t n) {
  if (n == 0) throw InvalidArgument("symmetric group degree must be positive");
  if (n == 1) return group_from_generators(1, {});
  if (n == 2) return group_from_generators(2, {Permutation::from_cycles(2, {{0, 1}})});
  std::vector<std::uint32_t> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>(i);
  return group_from_generators(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cycle})});
}

inline GroupPtr alternating(std::size_t n) {
  if (n == 0) throw InvalidArgument("alternating group degree must be positive");
  if (n < 3) return group_from_generators(n, {});
  // 3-cycles (0 1 i) generate A_n
  std::vector<Permutation> gens;
  for (std::uint32_t i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return group_from_generators(n, std::move(gens));
}

/// Dihedral group of order 2n acting on an n-gon (n >= 3); D1 = C2, D2 = C2 x C2.
inline GroupPtr dihedral(std::size_t n) {
  if (n == 0) throw InvalidArgument("dihedral parameter must be positive");
  if (n == 1) return cyclic(2);
  if (n == 2)
    return group_from_generators(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                     Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  std::vector<std::uint32_t> rotation(n);
  for (std::size_t i = 0; i < n; ++i) rotation[i] = static_cast<std::uint32_t>(i);
  std::vector<std::vector<std::uint32_t>> reflection;
  for (std::uint32_t i = 1; i < n - i; ++i) reflection.push_back({i, static_cast<std::uint32_t>(n - i)});
  return group_from_generators(
      n, {Permutation::from_cycles(n, {rotation}), Permutation::from_cycles(n, reflection)});
}

/// Quaternion group of order 8 in its regular representation.
inline GroupPtr quaternion8() {
  // points: 0..3 = 1, i, -1, -i ; 4..7 = j, k, -j, -k (left multiplication by i and j)
  auto i = Permutation::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  auto j = Permutation::from_cycles(8, {{0, 4, 2, 6}, {1, 7, 3, 5}});
  return group_from_generators(8, {i, j});
}

/// External direct product acting on the disjoint union of the point sets.
inline GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    auto images = Permutation::identity(degree).images();
    for (std::size_t x = 0; x < a.degree(); ++x) images[x] = g(static_cast<std::uint32_t>(x));
    gens.emplace_back(std::move(images));
  }
  for (const auto& g : b.generators()) {
    auto images = Permutation::identity(degree).images();
    for (std::size_t x = 0; x < b.degree(); ++x)
      images[a.degree() + x] = static_cast<std::uint32_t>(a.degree() + g(static_cast<std::uint32_t>(x)));
    gens.emplace_back(std::move(images));
  }
  return group_from_generators(degree, std::move(gens));
}

inline GroupPtr parse_factor(const std::string& name) {
  if (name == "Q8") return quaternion8();
  if (name.size() < 2 || !std::all_of(name.begin() + 1, name.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InvalidArgument("unknown builtin group '" + name + "'");
  std::size_t n = std::stoul(name.substr(1));
  switch (name[0]) {
    case 'C': return cyclic(n);
    case 'S': return symmetric(n);
    case 'A': return alternating(n);
    case 'D': return dihedral(n);
    default: throw InvalidArgument("unknown builtin group '" + name + "'");
  }
}

/// Builtin names: C<n>, S<n>, A<n>, D<n> (order 2n), Q8, and products joined by 'x'.
inline GroupPtr by_name(const std::string& name) {
  std::vector<std::string> factors;
  std::string part;
  std::istringstream in(name);
  while (std::getline(in, part, 'x')) factors.push_back(part);
  if (factors.empty()) throw InvalidArgument("empty builtin group name");
  GroupPtr g = parse_factor(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(*g, *parse_factor(factors[i]));
  return g;
}

}  // namespace builtin

// ---------------------------------------------------------------------------
// Group file format: "degree <n>" followed by one generator per line in
// disjoint-cycle notation; '#' starts a comment.

inline GroupPtr parse_group(std::istream& in, std::size_t order_cap = FiniteGroup::default_order_cap) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (!degree) {
      std::istringstream words(line);
      std::string keyword;
      long long n = -1;
      std::string rest;
      if (!(words >> keyword >> n) || keyword != "degree" || n <= 0 || (words >> rest))
        throw ParseError(line_no, "expected 'degree <n>' with n > 0");
      degree = static_cast<std::size_t>(n);
      continue;
    }
    try {
      gens.push_back(Permutation::parse(line, *degree));
    } catch (const InvalidArgument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!degree) throw ParseError(line_no, "missing 'degree <n>' line");
  return group_from_generators(*degree, std::move(gens), order_cap);
}

inline GroupPtr load_group_file(const std::string& path, std::size_t order_cap = FiniteGroup::default_order_cap) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open group file '" + path + "'");
  return parse_group(in, order_cap);
}

inline std::string format_group(const FiniteGroup& g) {
  std::string s = "degree " + std::to_string(g.degree()) + "\n";
  for (const auto& p : g.generators()) s += p.to_cycle_string() + "\n";
  return s;
}

}  // namespace idemkit

#endif  // IDEMKIT_GROUP_HPP
