#ifndef IDEMKIT_NORMS_HPP
#define IDEMKIT_NORMS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "idemkit/burnside.hpp"
#include "idemkit/charfun.hpp"
#include "idemkit/chartable.hpp"
#include "idemkit/idempotents.hpp"

namespace idemkit {

/// Everything needed to compare G with its subgroups for a fixed prime set:
/// one standalone group per subgroup class H of G, and one per subgroup class
/// K of each such H, with embeddings, lattices and P-local Burnside rings.
class NormContext {
 public:
  struct Local {
    GroupPtr group;
    LatticePtr lattice;
    RingPtr ring;
    Embedding into_g;
  };

  NormContext(RingPtr ring, std::size_t chartable_cap = 2000) : ring_(std::move(ring)), chartable_cap_(chartable_cap) {
    const auto& lattice = *ring_->lattice();
    const auto& g = lattice.group();
    for (std::size_t h = 0; h < lattice.size(); ++h) {
      auto hg = subgroup_as_group(*g, lattice[h].representative);
      auto hl = std::make_shared<const SubgroupLattice>(hg);
      subs_.push_back({hg, hl, make_burnside_ring(hl, primes()), make_embedding(hg, g)});
      std::vector<Local> inner;
      std::vector<Embedding> inner_h;
      for (std::size_t k = 0; k < hl->size(); ++k) {
        auto kg = subgroup_as_group(*hg, (*hl)[k].representative);
        auto kl = std::make_shared<const SubgroupLattice>(kg);
        inner.push_back({kg, kl, make_burnside_ring(kl, primes()), make_embedding(kg, g)});
        inner_h.push_back(make_embedding(kg, hg));
      }
      inner_.push_back(std::move(inner));
      inner_into_h_.push_back(std::move(inner_h));
    }
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const SubgroupLattice& lattice() const { return *ring_->lattice(); }
  const FiniteGroup& group() const { return *ring_->group(); }
  const PrimeSet& primes() const { return ring_->primes(); }

  /// The subgroup class h of G as a group.
  const Local& sub(std::size_t h) const { return subs_.at(h); }
  /// The subgroup class k of H (h a class of G) as a group.
  const Local& inner(std::size_t h, std::size_t k) const { return inner_.at(h).at(k); }
  const Embedding& inner_into_h(std::size_t h, std::size_t k) const { return inner_into_h_.at(h).at(k); }

  /// Subgroup class k of H, written as elements of G.
  ElementSet inner_in_g(std::size_t h, std::size_t k) const {
    return sub(h).into_g.up((*sub(h).lattice)[k].representative.elements);
  }

  const CharacterTable& table_of(const GroupPtr& group) const {
    std::lock_guard lock(mutex_);
    auto it = tables_.find(group.get());
    if (it == tables_.end()) it = tables_.emplace(group.get(), character_table(group, chartable_cap_)).first;
    return it->second;
  }

 private:
  RingPtr ring_;
  std::size_t chartable_cap_;
  std::vector<Local> subs_;
  std::vector<std::vector<Local>> inner_;
  std::vector<std::vector<Embedding>> inner_into_h_;
  mutable std::mutex mutex_;
  mutable std::map<const FiniteGroup*, CharacterTable> tables_;
};

/// A pair K <= H up to simultaneous conjugacy: h is a subgroup class of G and
/// k a subgroup class of the representative of h.
struct NormSite {
  std::size_t h;
  std::size_t k;
};

/// One site per N_G(H)-orbit of subgroup classes of H, ordered by H then K.
inline std::vector<NormSite> norm_sites(const NormContext& ctx) {
  const auto& g = ctx.group();
  std::vector<NormSite> out;
  for (std::size_t h = 0; h < ctx.lattice().size(); ++h) {
    const auto& local = ctx.sub(h);
    const auto& hl = *local.lattice;
    auto n = normalizer(g, ctx.lattice()[h].representative);
    std::vector<bool> covered(hl.size(), false);
    for (std::size_t k = 0; k < hl.size(); ++k) {
      if (covered[k]) continue;
      out.push_back({h, k});
      auto k_in_g = ctx.inner_in_g(h, k);
      for (auto x : n) covered[hl.class_of(local.into_g.down(conjugate_set(g, k_in_g, x)))] = true;
    }
  }
  return out;
}

inline std::string site_label(const NormContext& ctx, const NormSite& s) {
  return (*ctx.sub(s.h).lattice)[s.k].label + " <= " + ctx.lattice()[s.h].label;
}

/// Every G-conjugate of C inside H lies in K.
inline bool condition_e(const NormContext& ctx, std::size_t c, const NormSite& s) {
  const auto& h_rep = ctx.lattice()[s.h].representative;
  const auto k_in_g = ctx.inner_in_g(s.h, s.k);
  Subgroup k_sub{k_in_g, {}};
  for (const auto& conj : ctx.lattice().conjugates(c))
    if (h_rep.contains(conj) && !k_sub.contains(conj)) return false;
  return true;
}

/// N_K^H(Res_K e_C) * Res_H e_C == Res_H e_C in A_P(H).
inline bool division_relation_A(const NormContext& ctx, const BurnsideElement& e, const NormSite& s) {
  const auto& hloc = ctx.sub(s.h);
  const auto& kloc = ctx.inner(s.h, s.k);
  auto res_h = restrict(e, hloc.ring, hloc.into_g);
  auto res_k = restrict(e, kloc.ring, kloc.into_g);
  return norm_coinduce(res_k, hloc.ring, ctx.inner_into_h(s.h, s.k)) * res_h == res_h;
}

/// The same relation for a class function, with tensor induction as the norm.
inline bool division_relation_R(const NormContext& ctx, const ClassFunction& chi, const NormSite& s) {
  const auto& hloc = ctx.sub(s.h);
  const auto& kloc = ctx.inner(s.h, s.k);
  auto res_h = restrict(chi, hloc.into_g);
  auto res_k = restrict(chi, kloc.into_g);
  return tensor_induct(res_k, ctx.inner_into_h(s.h, s.k)) * res_h == res_h;
}

/// Admissible orbits H/K, stored per subgroup class h of G as a flag for
/// every subgroup class of its representative.
struct IndexingSystem {
  std::vector<std::vector<bool>> admissible;

  bool operator()(std::size_t h, std::size_t k) const { return admissible.at(h).at(k); }
  friend bool operator==(const IndexingSystem&, const IndexingSystem&) = default;
};

inline IndexingSystem complete_indexing_system(const NormContext& ctx) {
  IndexingSystem out;
  for (std::size_t h = 0; h < ctx.lattice().size(); ++h)
    out.admissible.emplace_back(ctx.sub(h).lattice->size(), true);
  return out;
}

/// I_C: H/K admissible iff every conjugate of C inside H lies in K.
inline IndexingSystem indexing_system(const NormContext& ctx, std::size_t c) {
  IndexingSystem out;
  for (std::size_t h = 0; h < ctx.lattice().size(); ++h) {
    std::vector<bool> row;
    for (std::size_t k = 0; k < ctx.sub(h).lattice->size(); ++k) row.push_back(condition_e(ctx, c, {h, k}));
    out.admissible.push_back(std::move(row));
  }
  return out;
}

/// Intersection of I_C over the cyclic P-perfect classes.
inline IndexingSystem indexing_system_cyc(const NormContext& ctx) {
  IndexingSystem out = complete_indexing_system(ctx);
  for (auto c : cyclic_p_perfect_classes(ctx.lattice(), ctx.primes())) {
    auto ic = indexing_system(ctx, c);
    for (std::size_t h = 0; h < out.admissible.size(); ++h)
      for (std::size_t k = 0; k < out.admissible[h].size(); ++k)
        out.admissible[h][k] = out.admissible[h][k] && ic.admissible[h][k];
  }
  return out;
}

/// I_cyc from the element criterion: every P'-element of H lies in K.
inline IndexingSystem indexing_system_cyc_direct(const NormContext& ctx) {
  const auto& g = ctx.group();
  IndexingSystem out;
  for (std::size_t h = 0; h < ctx.lattice().size(); ++h) {
    const auto& h_rep = ctx.lattice()[h].representative;
    std::vector<bool> row;
    for (std::size_t k = 0; k < ctx.sub(h).lattice->size(); ++k) {
      Subgroup k_sub{ctx.inner_in_g(h, k), {}};
      bool ok = true;
      for (auto x : h_rep.elements)
        if (ctx.primes().is_p_prime_number(g.element_order(x)) && !k_sub.contains(x)) {
          ok = false;
          break;
        }
      row.push_back(ok);
    }
    out.admissible.push_back(std::move(row));
  }
  return out;
}

/// Result of the indexing-system axioms, with the first violation found.
struct AxiomsReport {
  bool ok = true;
  std::string violation;
};

/// Checks: H/H admissible; invariance under N_G(H); restriction to every
/// L <= H of the orbits of an admissible H/K; composition K <= J <= H.
inline AxiomsReport axioms_check(const NormContext& ctx, const IndexingSystem& sys) {
  const auto& g = ctx.group();
  const auto& lattice = ctx.lattice();
  auto fail = [](std::string why) { return AxiomsReport{false, std::move(why)}; };
  if (sys.admissible.size() != lattice.size()) return fail("wrong number of subgroup classes");

  // admissibility of an arbitrary pair K <= H given as element sets of G
  auto lookup = [&](const ElementSet& h_set, const ElementSet& k_set) {
    std::size_t h = lattice.class_of(h_set);
    ElementIndex x = lattice.conjugator_to_rep(h_set);
    const auto& loc = ctx.sub(h);
    return sys(h, loc.lattice->class_of(loc.into_g.down(conjugate_set(g, k_set, x))));
  };

  for (std::size_t h = 0; h < lattice.size(); ++h) {
    const auto& loc = ctx.sub(h);
    const auto& hl = *loc.lattice;
    const auto& h_set = lattice[h].representative.elements;
    if (sys.admissible[h].size() != hl.size()) return fail("wrong row length at " + lattice[h].label);
    if (!sys(h, hl.top())) return fail("trivial orbit " + lattice[h].label + "/" + lattice[h].label + " missing");

    auto n = normalizer(g, lattice[h].representative);
    for (std::size_t k = 0; k < hl.size(); ++k)
      for (auto x : n)
        if (sys(h, k) != sys(h, hl.class_of(loc.into_g.down(conjugate_set(g, ctx.inner_in_g(h, k), x)))))
          return fail("not conjugation invariant at " + site_label(ctx, {h, k}));

    for (std::size_t k = 0; k < hl.size(); ++k) {
      if (!sys(h, k)) continue;
      const auto k_set = ctx.inner_in_g(h, k);
      for (std::size_t l = 0; l < hl.size(); ++l) {
        const auto l_set = ctx.inner_in_g(h, l);
        for (auto y : double_cosets(g, l_set, k_set, h_set)) {
          auto stab = intersect(l_set, conjugate_set(g, k_set, y));
          if (!lookup(l_set, stab))
            return fail("restriction of " + site_label(ctx, {h, k}) + " to " + hl[l].label + " not admissible");
        }
      }
      // composition: K' <= K with K/K' admissible forces H/K'
      const auto& kl = *ctx.inner(h, k).lattice;
      const auto& kloc = ctx.inner(h, k);
      for (std::size_t j = 0; j < kl.size(); ++j) {
        auto j_set = kloc.into_g.up(kl[j].representative.elements);
        if (lookup(k_set, j_set) && !lookup(h_set, j_set))
          return fail("composition through " + site_label(ctx, {h, k}) + " fails");
      }
    }
  }
  return {};
}

/// One cell of the equivalence audit.
struct EquivalenceCell {
  std::size_t c;
  NormSite site;
  bool condition_e;
  bool division_a;
  bool division_r;
  bool agree() const { return condition_e == division_a && division_a == division_r; }
};

struct EquivalenceReport {
  std::vector<std::size_t> labels;  // cyclic P-perfect classes
  std::vector<NormSite> sites;
  std::vector<EquivalenceCell> cells;  // ordered by C, then H, then K
  bool all_agree() const {
    for (const auto& c : cells)
      if (!c.agree()) return false;
    return true;
  }
};

inline EquivalenceReport equivalence_audit(const NormContext& ctx) {
  EquivalenceReport out;
  out.labels = cyclic_p_perfect_classes(ctx.lattice(), ctx.primes());
  out.sites = norm_sites(ctx);
  for (auto c : out.labels) {
    auto e = dress_idempotent(ctx.ring(), c);
    auto chi = lin(e.element);
    for (const auto& s : out.sites)
      out.cells.push_back({c, s, condition_e(ctx, c, s), division_relation_A(ctx, e.element, s),
                           division_relation_R(ctx, chi, s)});
  }
  return out;
}

struct SplittingReport {
  bool burnside_blocks = true;    // x -> (e_L x) is a ring isomorphism onto the blocks of A_P(G)
  bool rep_blocks = true;         // the same for R_P(G) and the cyclic idempotents
  bool norms_compatible = true;   // on every I_cyc-admissible site
  std::string failure;
  bool ok() const { return burnside_blocks && rep_blocks && norms_compatible; }
};

/// Block decomposition of A_P(G) and R_P(G) and compatibility of the
/// I_cyc-admissible norms with the projections to the cyclic blocks.
inline SplittingReport splitting_audit(const NormContext& ctx) {
  SplittingReport out;
  const auto& ring = ctx.ring();
  const auto& lattice = ctx.lattice();

  auto dress = all_dress_idempotents(ring);
  for (std::size_t b = 0; b < ring->rank() && out.burnside_blocks; ++b) {
    auto x = ring->basis(b);
    auto sum = ring->zero();
    for (const auto& e : dress) {
      auto ex = e.element * x;
      sum = sum + ex;
      for (const auto& f : dress) {
        auto fex = f.element * ex;
        if (!(fex == (f.label == e.label ? ex : ring->zero()))) {
          out.burnside_blocks = false;
          out.failure = "Burnside blocks " + lattice[e.label].label + ", " + lattice[f.label].label + " not orthogonal";
        }
      }
    }
    if (!(sum == x)) {
      out.burnside_blocks = false;
      out.failure = "Burnside blocks do not recover basis element " + lattice[b].label;
    }
  }

  const auto& table = ctx.table_of(lattice.group());
  auto cyclic = cyclic_p_perfect_classes(lattice, ctx.primes());
  std::vector<ClassFunction> rep_idem;
  for (auto c : cyclic) rep_idem.push_back(lin(dress_idempotent(ring, c).element));
  for (std::size_t i = 0; i < rep_idem.size(); ++i)
    if (!in_rep_ring_p(rep_idem[i], ctx.primes(), table).member) {
      out.rep_blocks = false;
      out.failure = "idempotent " + lattice[cyclic[i]].label + " is not in R_P(G)";
    }
  for (const auto& chi : table.irreducibles) {
    auto sum = ClassFunction::constant(lattice.group(), 0);
    for (std::size_t i = 0; i < rep_idem.size(); ++i) {
      auto ex = rep_idem[i] * chi;
      sum = sum + ex;
      for (std::size_t j = 0; j < rep_idem.size(); ++j)
        if (!(rep_idem[j] * ex == (i == j ? ex : ClassFunction::constant(lattice.group(), 0)))) {
          out.rep_blocks = false;
          out.failure = "representation blocks " + lattice[cyclic[i]].label + ", " + lattice[cyclic[j]].label +
                        " not orthogonal";
        }
    }
    if (!(sum == chi)) {
      out.rep_blocks = false;
      out.failure = "representation blocks do not recover an irreducible character";
    }
  }

  auto icyc = indexing_system_cyc(ctx);
  for (const auto& s : norm_sites(ctx)) {
    if (!icyc(s.h, s.k)) continue;
    const auto& hloc = ctx.sub(s.h);
    const auto& kloc = ctx.inner(s.h, s.k);
    const auto& k_into_h = ctx.inner_into_h(s.h, s.k);
    const auto& k_table = ctx.table_of(kloc.group);
    for (auto c : cyclic) {
      auto e = dress_idempotent(ring, c).element;
      auto e_h = restrict(e, hloc.ring, hloc.into_g);
      auto e_k = restrict(e, kloc.ring, kloc.into_g);
      for (std::size_t b = 0; b < kloc.ring->rank(); ++b) {
        auto y = kloc.ring->basis(b);
        if (!(e_h * norm_coinduce(y, hloc.ring, k_into_h) == e_h * norm_coinduce(e_k * y, hloc.ring, k_into_h))) {
          out.norms_compatible = false;
          out.failure = "Burnside norm at " + site_label(ctx, s) + " leaves block " + lattice[c].label;
        }
      }
      auto chi_h = restrict(lin(e), hloc.into_g);
      auto chi_k = restrict(lin(e), kloc.into_g);
      for (const auto& psi : k_table.irreducibles)
        if (!(chi_h * tensor_induct(psi, k_into_h) == chi_h * tensor_induct(chi_k * psi, k_into_h))) {
          out.norms_compatible = false;
          out.failure = "tensor induction at " + site_label(ctx, s) + " leaves block " + lattice[c].label;
        }
    }
  }
  return out;
}

}  // namespace idemkit

#endif  // IDEMKIT_NORMS_HPP
