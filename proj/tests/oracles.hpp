// Slow, direct computations used only to cross-check the library. They work
// on raw permutations and std::set and avoid the library's index tables.
#ifndef IDEMKIT_TESTS_ORACLES_HPP
#define IDEMKIT_TESTS_ORACLES_HPP

#include <map>
#include <set>
#include <vector>

#include "idemkit/idemkit.hpp"

namespace oracle {

using idemkit::Permutation;
using PermSet = std::set<Permutation>;

inline PermSet close(const PermSet& gens, std::size_t degree) {
  PermSet out{Permutation::identity(degree)};
  std::vector<Permutation> frontier(out.begin(), out.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        auto y = s * x;
        if (out.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return out;
}

inline PermSet all_elements(const idemkit::FiniteGroup& g) {
  return PermSet(g.elements().begin(), g.elements().end());
}

inline PermSet conjugate(const PermSet& s, const Permutation& by) {
  PermSet out;
  for (const auto& x : s) out.insert(by * x * by.inverse());
  return out;
}

inline bool subset(const PermSet& a, const PermSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Every subgroup, grown from the trivial one by adjoining single elements.
inline std::set<PermSet> all_subgroups(const idemkit::FiniteGroup& g) {
  const auto elems = all_elements(g);
  std::set<PermSet> found{PermSet{Permutation::identity(g.degree())}};
  std::vector<PermSet> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<PermSet> next;
    for (const auto& s : frontier)
      for (const auto& x : elems) {
        if (s.count(x)) continue;
        PermSet gens = s;
        gens.insert(x);
        auto t = close(gens, g.degree());
        if (found.insert(t).second) next.push_back(std::move(t));
      }
    frontier = std::move(next);
  }
  return found;
}

struct ClassSummary {
  std::size_t order;
  std::size_t class_size;
  bool operator<(const ClassSummary& o) const {
    return std::tie(order, class_size) < std::tie(o.order, o.class_size);
  }
  bool operator==(const ClassSummary& o) const = default;
};

inline std::vector<PermSet> conjugacy_class_reps(const idemkit::FiniteGroup& g, const std::set<PermSet>& subs,
                                                 std::vector<ClassSummary>* summary = nullptr) {
  std::vector<PermSet> reps;
  std::set<PermSet> seen;
  for (const auto& s : subs) {
    if (seen.count(s)) continue;
    std::set<PermSet> orbit;
    for (const auto& x : g.elements()) orbit.insert(conjugate(s, x));
    seen.insert(orbit.begin(), orbit.end());
    reps.push_back(s);
    if (summary) summary->push_back({s.size(), orbit.size()});
  }
  if (summary) std::sort(summary->begin(), summary->end());
  return reps;
}

inline bool is_normal(const PermSet& n, const PermSet& h) {
  for (const auto& x : h)
    if (conjugate(n, x) != n) return false;
  return true;
}

inline PermSet commutators_mod(const PermSet& h, const PermSet& n, std::size_t degree) {
  PermSet gens(n.begin(), n.end());
  for (const auto& a : h)
    for (const auto& b : h) gens.insert(a.inverse() * b.inverse() * a * b);
  return close(gens, degree);
}

/// O^P(H) as the least normal N with H/N a solvable P-group, by enumeration.
inline PermSet p_residual(const PermSet& h, const idemkit::PrimeSet& primes, std::size_t degree) {
  std::vector<PermSet> candidates;
  idemkit::FiniteGroup hg(degree, std::vector<Permutation>(h.begin(), h.end()));
  for (const auto& n : all_subgroups(hg)) {
    if (!is_normal(n, h)) continue;
    if (!primes.is_p_number(h.size() / n.size())) continue;
    PermSet cur = h;
    for (;;) {
      auto next = commutators_mod(cur, n, degree);
      if (next == cur) break;
      cur = std::move(next);
    }
    if (cur == n) candidates.push_back(n);
  }
  PermSet least = candidates.front();
  for (const auto& c : candidates)
    if (c.size() < least.size()) least = c;
  for (const auto& c : candidates)
    if (!subset(least, c)) throw idemkit::InternalError("oracle: no unique minimal normal subgroup");
  return least;
}

/// A finite K-set given by its action on points 0..n-1.
struct KSet {
  std::vector<Permutation> k_elements;
  std::vector<std::vector<std::size_t>> action;  // action[i][x] = k_i . x
  std::size_t points() const { return action.empty() ? 0 : action.front().size(); }
  std::size_t index(const Permutation& k) const {
    for (std::size_t i = 0; i < k_elements.size(); ++i)
      if (k_elements[i] == k) return i;
    throw idemkit::InternalError("oracle: element not in K");
  }
};

/// Disjoint union of left coset spaces K/J_i.
inline KSet coset_union(const PermSet& k, const std::vector<PermSet>& stabilizers) {
  KSet out;
  out.k_elements.assign(k.begin(), k.end());
  std::vector<std::vector<PermSet>> cosets;  // per summand
  for (const auto& j : stabilizers) {
    std::set<PermSet> cs;
    for (const auto& x : k) {
      PermSet c;
      for (const auto& y : j) c.insert(x * y);
      cs.insert(c);
    }
    cosets.emplace_back(cs.begin(), cs.end());
  }
  out.action.resize(out.k_elements.size());
  for (std::size_t i = 0; i < out.k_elements.size(); ++i) {
    std::size_t offset = 0;
    for (const auto& cs : cosets) {
      for (const auto& c : cs) {
        PermSet moved;
        for (const auto& y : c) moved.insert(out.k_elements[i] * y);
        auto pos = std::find(cs.begin(), cs.end(), moved) - cs.begin();
        out.action[i].push_back(offset + static_cast<std::size_t>(pos));
      }
      offset += cs.size();
    }
  }
  return out;
}

/// |map_K(H, X)^L| by listing the K-equivariant functions f: H -> X,
/// f(kh) = k f(h), with H acting by (h'f)(h) = f(h h'). Functions are
/// determined by their values on right coset representatives of K in H.
/// Returns nullopt when there are more than `cap` functions.
inline std::optional<std::uint64_t> coinduced_fixed_points(const PermSet& h, const KSet& x, const PermSet& l,
                                                           std::uint64_t cap = 1U << 19) {
  PermSet k(x.k_elements.begin(), x.k_elements.end());
  std::vector<Permutation> reps;
  PermSet covered;
  for (const auto& t : h) {
    if (covered.count(t)) continue;
    reps.push_back(t);
    for (const auto& y : k) covered.insert(y * t);
  }
  const std::size_t m = reps.size(), n = x.points();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    total *= n;
    if (total > cap) return std::nullopt;
  }
  // t_i * g = k * t_j for each generator-free check over all of L
  struct Move {
    std::size_t j;
    std::size_t k;
  };
  std::vector<std::vector<Move>> moves;
  for (const auto& g : l) {
    std::vector<Move> row;
    for (const auto& t : reps) {
      auto tg = t * g;
      for (std::size_t j = 0; j < m; ++j) {
        auto kk = tg * reps[j].inverse();
        if (k.count(kk)) {
          row.push_back({j, x.index(kk)});
          break;
        }
      }
    }
    moves.push_back(std::move(row));
  }
  std::uint64_t fixed = 0;
  std::vector<std::size_t> f(m, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < m; ++i) {
      f[i] = c % n;
      c /= n;
    }
    bool ok = true;
    for (const auto& row : moves) {
      for (std::size_t i = 0; i < m && ok; ++i) ok = x.action[row[i].k][f[row[i].j]] == f[i];
      if (!ok) break;
    }
    if (ok) ++fixed;
  }
  return fixed;
}

/// Character of the permutation representation on G/K, by counting fixed cosets.
inline std::vector<std::int64_t> permutation_character(const idemkit::FiniteGroup& g, const PermSet& k) {
  std::set<PermSet> cosets;
  for (const auto& x : g.elements()) {
    PermSet c;
    for (const auto& y : k) c.insert(x * y);
    cosets.insert(c);
  }
  std::vector<std::int64_t> out;
  for (const auto& cls : g.conjugacy_classes()) {
    const auto& s = g.element(cls.representative);
    std::int64_t fixed = 0;
    for (const auto& c : cosets) {
      PermSet moved;
      for (const auto& y : c) moved.insert(s * y);
      if (moved == c) ++fixed;
    }
    out.push_back(fixed);
  }
  return out;
}

/// Cyclic subgroups up to conjugacy whose order avoids every prime in P.
inline std::size_t cyclic_p_perfect_count(const idemkit::FiniteGroup& g, const idemkit::PrimeSet& primes) {
  std::set<PermSet> cyclic;
  for (const auto& x : g.elements()) cyclic.insert(close({x}, g.degree()));
  std::size_t count = 0;
  for (const auto& rep : conjugacy_class_reps(g, cyclic))
    if (primes.is_p_prime_number(rep.size())) ++count;
  return count;
}

}  // namespace oracle

#endif  // IDEMKIT_TESTS_ORACLES_HPP
