#ifndef IDEMKIT_LATTICE_HPP
#define IDEMKIT_LATTICE_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "idemkit/group.hpp"

namespace idemkit {

/// A subgroup of a FiniteGroup: its sorted element indices plus a generating set.
struct Subgroup {
  ElementSet elements;
  std::vector<ElementIndex> generators;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(ElementIndex x) const { return std::binary_search(elements.begin(), elements.end(), x); }
  bool contains(const ElementSet& other) const {
    return std::includes(elements.begin(), elements.end(), other.begin(), other.end());
  }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

/// Subgroup generated by `gens`.
inline Subgroup closure(const FiniteGroup& g, std::vector<ElementIndex> gens) {
  std::vector<bool> in(g.order(), false);
  ElementSet elems{FiniteGroup::identity()};
  in[FiniteGroup::identity()] = true;
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (auto s : gens) {
      ElementIndex y = g.mul(elems[head], s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  gens.erase(std::remove(gens.begin(), gens.end(), FiniteGroup::identity()), gens.end());
  return Subgroup{std::move(elems), std::move(gens)};
}

/// Wraps a sorted element set known to be a subgroup, choosing generators
/// greedily in index order.
inline Subgroup subgroup_from_set(const FiniteGroup& g, ElementSet elems) {
  std::vector<ElementIndex> gens;
  Subgroup current = closure(g, {});
  for (auto x : elems) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = closure(g, gens);
  }
  if (current.elements != elems) throw InvalidArgument("element set is not a subgroup");
  return current;
}

inline Subgroup whole_group(const FiniteGroup& g) {
  ElementSet all(g.order());
  for (ElementIndex i = 0; i < g.order(); ++i) all[i] = i;
  return subgroup_from_set(g, std::move(all));
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) { return closure(g, {}); }

inline ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& s, ElementIndex by) {
  ElementSet out;
  out.reserve(s.size());
  for (auto x : s) out.push_back(g.conjugate(by, x));
  std::sort(out.begin(), out.end());
  return out;
}

inline Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& s, ElementIndex by) {
  Subgroup out{conjugate_set(g, s.elements, by), {}};
  for (auto x : s.generators) out.generators.push_back(g.conjugate(by, x));
  return out;
}

inline ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Elements n with n s n^-1 in s for all s.
inline ElementSet normalizer(const FiniteGroup& g, const Subgroup& s, const ElementSet& within = {}) {
  ElementSet out;
  auto test = [&](ElementIndex x) {
    for (auto h : s.generators)
      if (!s.contains(g.conjugate(x, h))) return;
    out.push_back(x);
  };
  if (within.empty()) {
    for (ElementIndex x = 0; x < g.order(); ++x) test(x);
  } else {
    for (auto x : within) test(x);
  }
  return out;
}

inline bool is_normal_in(const FiniteGroup& g, const Subgroup& n, const Subgroup& h) {
  for (auto x : h.generators)
    for (auto y : n.generators)
      if (!n.contains(g.conjugate(x, y))) return false;
  return true;
}

inline bool is_cyclic(const FiniteGroup& g, const ElementSet& s) {
  for (auto x : s)
    if (g.element_order(x) == s.size()) return true;
  return false;
}

/// [H, H].
inline Subgroup derived_subgroup(const FiniteGroup& g, const Subgroup& h) {
  std::vector<ElementIndex> gens;
  for (auto a : h.generators)
    for (auto b : h.generators) {
      ElementIndex c = g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b)));
      if (c != FiniteGroup::identity()) gens.push_back(c);
    }
  Subgroup d = closure(g, gens);
  // normal closure inside h
  for (bool grew = true; grew;) {
    grew = false;
    for (auto s : h.generators) {
      for (auto x : std::vector<ElementIndex>(d.generators)) {
        ElementIndex y = g.conjugate(s, x);
        if (!d.contains(y)) {
          gens.push_back(y);
          d = closure(g, gens);
          grew = true;
        }
      }
    }
  }
  return d;
}

inline bool is_solvable(const FiniteGroup& g, const Subgroup& h) {
  Subgroup current = h;
  while (current.order() > 1) {
    Subgroup next = derived_subgroup(g, current);
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
  return true;
}

/// O^P(H): the smallest normal subgroup of H with solvable P-group quotient.
/// Strips the maximal abelian P-quotient until stable.
inline Subgroup p_residual(const FiniteGroup& g, const Subgroup& h, const PrimeSet& primes) {
  Subgroup current = h;
  for (;;) {
    Subgroup d = derived_subgroup(g, current);
    std::uint64_t k = primes.p_prime_part(current.order() / d.order());
    ElementSet kept;
    for (auto x : current.elements)
      if (d.contains(g.power(x, static_cast<std::int64_t>(k)))) kept.push_back(x);
    if (kept.size() == current.order()) return current;
    current = subgroup_from_set(g, std::move(kept));
  }
}

inline bool is_p_perfect(const FiniteGroup& g, const Subgroup& h, const PrimeSet& primes) {
  return p_residual(g, h, primes).order() == h.order();
}

// ---------------------------------------------------------------------------
// Naming of small groups, used for class labels.

namespace detail {

inline std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& g, const ElementSet& s) {
  // elementary divisors from counts of elements with order dividing p^k
  std::map<std::uint64_t, std::vector<std::uint64_t>> parts;
  for (auto p : prime_divisors(s.size())) {
    std::vector<std::uint64_t> counts{0};  // counts[k] = log_p #{x : x^(p^k) = 1}
    std::uint64_t pk = 1;
    for (;;) {
      pk *= p;
      std::uint64_t n = 0;
      for (auto x : s)
        if (pk % g.element_order(x) == 0) ++n;
      std::uint64_t e = 0;
      while (n > 1) {
        n /= p;
        ++e;
      }
      counts.push_back(e);
      if (counts.back() == counts[counts.size() - 2] && counts.size() > 2) break;
      if (counts.size() > 64) break;
    }
    // number of cyclic factors of order >= p^k is counts[k] - counts[k-1]
    std::vector<std::uint64_t> exps;
    for (std::size_t k = 1; k < counts.size(); ++k) {
      std::uint64_t at_least_k = counts[k] - counts[k - 1];
      std::uint64_t at_least_next = k + 1 < counts.size() ? counts[k + 1] - counts[k] : 0;
      for (std::uint64_t i = 0; i < at_least_k - at_least_next; ++i) exps.push_back(k);
    }
    for (auto e : exps) {
      std::uint64_t q = 1;
      for (std::uint64_t i = 0; i < e; ++i) q *= p;
      parts[p].push_back(q);
    }
  }
  // combine prime powers into invariant factors d1 | d2 | ...
  std::size_t rank = 0;
  for (auto& [p, qs] : parts) {
    std::sort(qs.begin(), qs.end(), std::greater<>());
    rank = std::max(rank, qs.size());
  }
  std::vector<std::uint64_t> factors(rank, 1);
  for (auto& [p, qs] : parts)
    for (std::size_t i = 0; i < qs.size(); ++i) factors[rank - 1 - i] *= qs[i];
  return factors;
}

inline std::string structure_name(const FiniteGroup& g, const ElementSet& s) {
  const std::size_t n = s.size();
  if (n == 1) return "1";
  if (is_cyclic(g, s)) return "C" + std::to_string(n);
  bool abelian = true;
  for (auto a : s) {
    for (auto b : s)
      if (g.mul(a, b) != g.mul(b, a)) {
        abelian = false;
        break;
      }
    if (!abelian) break;
  }
  if (abelian) {
    std::string name;
    for (auto f : abelian_invariants(g, s)) name += (name.empty() ? "C" : "xC") + std::to_string(f);
    return name;
  }
  std::map<std::uint64_t, std::size_t> orders;
  for (auto x : s) ++orders[g.element_order(x)];
  auto count = [&](std::uint64_t k) { return orders.count(k) ? orders[k] : std::size_t{0}; };
  if (n % 2 == 0 && count(n / 2) > 0 && count(2) >= n / 2) return n == 6 ? "S3" : "D" + std::to_string(n / 2);
  if (n == 8 && count(2) == 1) return "Q8";
  if (n == 12 && count(2) == 3 && count(3) == 8) return "A4";
  if (n == 12 && count(2) == 1) return "Dic3";
  if (n == 20 && count(2) == 5 && count(4) == 10) return "F20";
  if (n == 24 && count(2) == 9 && count(3) == 8 && count(4) == 6) return "S4";
  if (n == 24 && count(2) == 1 && count(3) == 8) return "SL(2,3)";
  if (n == 60 && count(2) == 15 && count(3) == 20 && count(5) == 24) return "A5";
  if (n == 120 && count(2) == 25 && count(3) == 20 && count(4) == 30 && count(5) == 24 && count(6) == 20)
    return "S5";
  return "G" + std::to_string(n);
}

}  // namespace detail

// ---------------------------------------------------------------------------

struct SubgroupClass {
  Subgroup representative;
  std::size_t class_size;
  std::size_t order;
  bool cyclic;
  std::string label;
};

/// All subgroups of a group up to conjugacy, ascending by order and then by the
/// lexicographically least conjugate; the representative is that least conjugate.
class SubgroupLattice {
 public:
  static constexpr std::size_t default_cap = 400;

  explicit SubgroupLattice(GroupPtr group, std::size_t cap = default_cap) : group_(std::move(group)) {
    if (group_->order() > cap)
      throw CapExceeded("group order " + std::to_string(group_->order()) + " exceeds lattice cap " +
                        std::to_string(cap));
    build();
  }

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<SubgroupClass>& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const SubgroupClass& operator[](std::size_t i) const { return classes_[i]; }

  /// Every conjugate of class i, sorted.
  const std::vector<ElementSet>& conjugates(std::size_t i) const { return conjugates_[i]; }

  std::optional<std::size_t> find(const ElementSet& s) const {
    auto it = lookup_.find(s);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t class_of(const ElementSet& s) const {
    auto c = find(s);
    if (!c) throw InvalidArgument("element set is not a subgroup");
    return *c;
  }

  /// Class of the cyclic subgroup generated by g.
  std::size_t cyclic_class_of(ElementIndex g) const { return cyclic_class_of_[g]; }

  /// Some x with x s x^-1 equal to the class representative.
  ElementIndex conjugator_to_rep(const ElementSet& s) const {
    const auto& rep = classes_[class_of(s)].representative.elements;
    for (ElementIndex x = 0; x < group_->order(); ++x)
      if (conjugate_set(*group_, s, x) == rep) return x;
    throw InternalError("conjugator_to_rep: no conjugating element");
  }

  std::optional<std::size_t> find_label(const std::string& label) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
      if (classes_[i].label == label) return i;
    return std::nullopt;
  }

  /// Index of the class of the whole group (always the last one).
  std::size_t top() const noexcept { return classes_.size() - 1; }

 private:
  void build() {
    const FiniteGroup& g = *group_;
    auto gens = g.generator_indices();

    // cyclic subgroups, one generator each
    std::vector<ElementIndex> cyclic_gens;
    {
      std::unordered_map<ElementSet, bool, ElementSetHash> seen;
      for (ElementIndex x = 0; x < g.order(); ++x)
        if (seen.emplace(g.cyclic_subgroup(x), true).second) cyclic_gens.push_back(x);
    }

    std::vector<std::vector<ElementSet>> raw_conjugates;
    std::vector<Subgroup> raw_reps;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> raw_lookup;
    auto add_class = [&](Subgroup s) {
      if (raw_lookup.count(s.elements)) return;
      std::vector<ElementSet> orbit{s.elements};
      raw_lookup.emplace(s.elements, raw_reps.size());
      for (std::size_t head = 0; head < orbit.size(); ++head)
        for (auto x : gens) {
          auto y = conjugate_set(g, orbit[head], x);
          if (raw_lookup.emplace(y, raw_reps.size()).second) orbit.push_back(std::move(y));
        }
      raw_conjugates.push_back(std::move(orbit));
      raw_reps.push_back(std::move(s));
    };

    for (auto x : cyclic_gens) add_class(closure(g, {x}));
    for (std::size_t i = 0; i < raw_reps.size(); ++i) {
      for (auto z : cyclic_gens) {
        if (raw_reps[i].contains(z)) continue;
        auto gens_i = raw_reps[i].generators;
        gens_i.push_back(z);
        add_class(closure(g, std::move(gens_i)));
      }
    }

    // canonical ordering
    std::vector<std::size_t> perm(raw_reps.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      perm[i] = i;
      std::sort(raw_conjugates[i].begin(), raw_conjugates[i].end());
    }
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      const auto& ca = raw_conjugates[a].front();
      const auto& cb = raw_conjugates[b].front();
      if (ca.size() != cb.size()) return ca.size() < cb.size();
      return ca < cb;
    });
    for (auto i : perm) {
      const ElementSet& rep = raw_conjugates[i].front();
      SubgroupClass c{subgroup_from_set(g, rep), raw_conjugates[i].size(), rep.size(), is_cyclic(g, rep), {}};
      c.label = detail::structure_name(g, rep);
      for (const auto& s : raw_conjugates[i]) lookup_.emplace(s, classes_.size());
      conjugates_.push_back(std::move(raw_conjugates[i]));
      classes_.push_back(std::move(c));
    }

    // disambiguate repeated labels
    std::map<std::string, std::size_t> seen_count, total;
    for (const auto& c : classes_) ++total[c.label];
    for (auto& c : classes_)
      if (total[c.label] > 1) c.label += "_" + std::to_string(++seen_count[c.label]);

    cyclic_class_of_.resize(g.order());
    for (ElementIndex x = 0; x < g.order(); ++x) cyclic_class_of_[x] = lookup_.at(g.cyclic_subgroup(x));
  }

  GroupPtr group_;
  std::vector<SubgroupClass> classes_;
  std::vector<std::vector<ElementSet>> conjugates_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup_;
  std::vector<std::size_t> cyclic_class_of_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

inline LatticePtr subgroup_classes(GroupPtr group, std::size_t cap = SubgroupLattice::default_cap) {
  return std::make_shared<const SubgroupLattice>(std::move(group), cap);
}

/// Classes of cyclic subgroups whose order is prime to every prime in P.
inline std::vector<std::size_t> cyclic_p_perfect_classes(const SubgroupLattice& lattice, const PrimeSet& primes) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (lattice[i].cyclic && primes.is_p_prime_number(lattice[i].order)) out.push_back(i);
  return out;
}

/// Class of O^P(H) for each class H.
inline std::vector<std::size_t> residual_classes(const SubgroupLattice& lattice, const PrimeSet& primes) {
  std::vector<std::size_t> out;
  for (const auto& c : lattice.classes())
    out.push_back(lattice.class_of(p_residual(*lattice.group(), c.representative, primes).elements));
  return out;
}

inline std::vector<std::size_t> p_perfect_classes(const SubgroupLattice& lattice, const PrimeSet& primes) {
  auto res = residual_classes(lattice, primes);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < res.size(); ++i)
    if (res[i] == i) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// Subgroups as groups in their own right.

/// The subgroup s of parent as a standalone FiniteGroup on the same points,
/// with index maps in both directions.
struct Embedding {
  GroupPtr sub;
  GroupPtr parent;
  std::vector<ElementIndex> to_parent;
  std::vector<std::int64_t> from_parent;  // -1 outside the subgroup

  ElementIndex up(ElementIndex x) const { return to_parent[x]; }
  ElementIndex down(ElementIndex x) const {
    if (from_parent[x] < 0) throw InvalidArgument("element is not in the subgroup");
    return static_cast<ElementIndex>(from_parent[x]);
  }
  bool contains(ElementIndex parent_element) const { return from_parent[parent_element] >= 0; }

  ElementSet image() const {
    ElementSet out(to_parent.begin(), to_parent.end());
    std::sort(out.begin(), out.end());
    return out;
  }
  ElementSet up(const ElementSet& s) const {
    ElementSet out;
    for (auto x : s) out.push_back(up(x));
    std::sort(out.begin(), out.end());
    return out;
  }
  ElementSet down(const ElementSet& s) const {
    ElementSet out;
    for (auto x : s) out.push_back(down(x));
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline Embedding make_embedding(GroupPtr sub, GroupPtr parent) {
  Embedding e{sub, parent, {}, std::vector<std::int64_t>(parent->order(), -1)};
  e.to_parent.reserve(sub->order());
  for (ElementIndex x = 0; x < sub->order(); ++x) {
    auto y = parent->find(sub->element(x));
    if (!y) throw InvalidArgument("group is not contained in the parent group");
    e.to_parent.push_back(*y);
    e.from_parent[*y] = x;
  }
  return e;
}

inline GroupPtr subgroup_as_group(const FiniteGroup& parent, const Subgroup& s) {
  std::vector<Permutation> gens;
  for (auto x : s.generators) gens.push_back(parent.element(x));
  return group_from_generators(parent.degree(), std::move(gens));
}

/// For each class of `sub`, the class of `parent` containing it.
inline std::vector<std::size_t> fuse_classes(const SubgroupLattice& sub, const SubgroupLattice& parent,
                                             const Embedding& emb) {
  std::vector<std::size_t> out;
  for (const auto& c : sub.classes()) out.push_back(parent.class_of(emb.up(c.representative.elements)));
  return out;
}

}  // namespace idemkit

#endif  // IDEMKIT_LATTICE_HPP
