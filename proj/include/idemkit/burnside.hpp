#ifndef IDEMKIT_BURNSIDE_HPP
#define IDEMKIT_BURNSIDE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idemkit/lattice.hpp"
#include "idemkit/number.hpp"

namespace idemkit {

/// entry(K, H) = |(G/K)^H| over subgroup classes in lattice order. Rows are
/// indexed by the orbit G/K, columns by the subgroup H; lower triangular.
class TableOfMarks {
 public:
  explicit TableOfMarks(LatticePtr lattice) : lattice_(std::move(lattice)) {
    const FiniteGroup& g = *lattice_->group();
    const std::size_t n = lattice_->size();
    entries_.assign(n * n, 0);
    std::vector<bool> in_k(g.order());
    for (std::size_t k = 0; k < n; ++k) {
      const auto& kc = (*lattice_)[k];
      std::fill(in_k.begin(), in_k.end(), false);
      for (auto x : kc.representative.elements) in_k[x] = true;
      for (std::size_t h = 0; h <= k; ++h) {
        const auto& hc = (*lattice_)[h];
        if (kc.order % hc.order != 0) continue;
        std::int64_t count = 0;
        for (ElementIndex x = 0; x < g.order(); ++x) {
          ElementIndex xi = g.inverse(x);
          bool inside = true;
          for (auto s : hc.representative.generators)
            if (!in_k[g.mul(g.mul(xi, s), x)]) {
              inside = false;
              break;
            }
          if (inside) ++count;
        }
        entries_[k * n + h] = count / static_cast<std::int64_t>(kc.order);
      }
    }
  }

  /// Takes precomputed entries (row-major); only the shape is checked.
  TableOfMarks(LatticePtr lattice, std::vector<std::int64_t> entries)
      : lattice_(std::move(lattice)), entries_(std::move(entries)) {
    if (entries_.size() != lattice_->size() * lattice_->size())
      throw InvalidArgument("table of marks has the wrong shape");
  }

  const LatticePtr& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return lattice_->size(); }
  std::int64_t operator()(std::size_t k, std::size_t h) const { return entries_[k * size() + h]; }

  friend bool operator==(const TableOfMarks& a, const TableOfMarks& b) { return a.entries_ == b.entries_; }

 private:
  LatticePtr lattice_;
  std::vector<std::int64_t> entries_;
};

class BurnsideElement;

/// The P-local Burnside ring A_P(G) = A(G) (x) Z_(P).
class BurnsideRing : public std::enable_shared_from_this<BurnsideRing> {
 public:
  static std::shared_ptr<const BurnsideRing> create(LatticePtr lattice, PrimeSet primes) {
    return std::shared_ptr<const BurnsideRing>(new BurnsideRing(std::move(lattice), std::move(primes)));
  }

  const LatticePtr& lattice() const noexcept { return lattice_; }
  const GroupPtr& group() const noexcept { return lattice_->group(); }
  const PrimeSet& primes() const noexcept { return primes_; }
  const TableOfMarks& marks_table() const noexcept { return table_; }
  std::size_t rank() const noexcept { return lattice_->size(); }

  /// Class of O^P(H) for each class H.
  const std::vector<std::size_t>& residual_class() const noexcept { return residual_; }
  bool is_p_perfect_class(std::size_t i) const { return residual_[i] == i; }

  BurnsideElement zero() const;
  BurnsideElement one() const;
  /// The transitive G-set G/K for class k.
  BurnsideElement basis(std::size_t k) const;
  BurnsideElement from_coeffs(std::vector<Rational> coeffs) const;
  /// Inverts the mark homomorphism; throws NotPLocal when the solution leaves Z_(P).
  BurnsideElement from_marks(std::vector<Rational> marks) const;
  std::optional<BurnsideElement> try_from_marks(std::vector<Rational> marks) const;

  /// Rational solution of coeffs * M = marks without any locality check.
  std::vector<Rational> solve_marks(const std::vector<Rational>& marks) const {
    const std::size_t n = rank();
    if (marks.size() != n) throw InvalidArgument("mark vector has wrong length");
    std::vector<Rational> c(n);
    for (std::size_t h = n; h-- > 0;) {
      Rational acc = marks[h];
      for (std::size_t k = h + 1; k < n; ++k)
        if (table_(k, h) != 0 && c[k] != 0) acc -= c[k] * table_(k, h);
      c[h] = acc / table_(h, h);
    }
    return c;
  }

  std::vector<Rational> marks_of(const std::vector<Rational>& coeffs) const {
    const std::size_t n = rank();
    if (coeffs.size() != n) throw InvalidArgument("coefficient vector has wrong length");
    std::vector<Rational> m(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (coeffs[k] == 0) continue;
      for (std::size_t h = 0; h <= k; ++h)
        if (table_(k, h) != 0) m[h] += coeffs[k] * table_(k, h);
    }
    return m;
  }

 private:
  BurnsideRing(LatticePtr lattice, PrimeSet primes)
      : lattice_(std::move(lattice)), primes_(std::move(primes)), table_(lattice_),
        residual_(residual_classes(*lattice_, primes_)) {}

  LatticePtr lattice_;
  PrimeSet primes_;
  TableOfMarks table_;
  std::vector<std::size_t> residual_;
};

using RingPtr = std::shared_ptr<const BurnsideRing>;

inline RingPtr make_burnside_ring(LatticePtr lattice, PrimeSet primes) {
  return BurnsideRing::create(std::move(lattice), std::move(primes));
}

/// An element of A_P(G), held both in the basis of transitive G-sets and in
/// ghost (mark) coordinates. The two are consistent by construction.
class BurnsideElement {
 public:
  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const std::vector<Rational>& marks() const noexcept { return marks_; }
  const Rational& mark(std::size_t h) const { return marks_[h]; }
  const Rational& coeff(std::size_t k) const { return coeffs_[k]; }

  bool is_zero() const {
    for (const auto& m : marks_)
      if (m != 0) return false;
    return true;
  }

  bool is_idempotent() const {
    for (const auto& m : marks_)
      if (m != 0 && m != 1) return false;
    return true;
  }

  friend BurnsideElement operator+(const BurnsideElement& a, const BurnsideElement& b) {
    a.check_compatible(b);
    std::vector<Rational> c(a.coeffs_.size()), m(a.marks_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = a.coeffs_[i] + b.coeffs_[i];
      m[i] = a.marks_[i] + b.marks_[i];
    }
    return BurnsideElement(a.ring_, std::move(c), std::move(m));
  }

  friend BurnsideElement operator-(const BurnsideElement& a, const BurnsideElement& b) {
    a.check_compatible(b);
    std::vector<Rational> c(a.coeffs_.size()), m(a.marks_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = a.coeffs_[i] - b.coeffs_[i];
      m[i] = a.marks_[i] - b.marks_[i];
    }
    return BurnsideElement(a.ring_, std::move(c), std::move(m));
  }

  friend BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b) {
    a.check_compatible(b);
    std::vector<Rational> m(a.marks_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = a.marks_[i] * b.marks_[i];
    return a.ring_->from_marks(std::move(m));
  }

  friend BurnsideElement operator*(const Rational& s, const BurnsideElement& a) {
    if (!a.ring_->primes().is_local(s)) throw NotPLocal("scalar " + to_string(s) + " is not P-local");
    std::vector<Rational> c(a.coeffs_), m(a.marks_);
    for (auto& x : c) x *= s;
    for (auto& x : m) x *= s;
    return BurnsideElement(a.ring_, std::move(c), std::move(m));
  }

  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
    return a.ring_ == b.ring_ && a.marks_ == b.marks_;
  }

 private:
  friend class BurnsideRing;

  BurnsideElement(RingPtr ring, std::vector<Rational> coeffs, std::vector<Rational> marks)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)), marks_(std::move(marks)) {}

  void check_compatible(const BurnsideElement& other) const {
    if (ring_.get() != other.ring_.get()) throw InvalidArgument("Burnside elements live in different rings");
  }

  RingPtr ring_;
  std::vector<Rational> coeffs_;
  std::vector<Rational> marks_;
};

inline BurnsideElement BurnsideRing::zero() const {
  return BurnsideElement(shared_from_this(), std::vector<Rational>(rank()), std::vector<Rational>(rank()));
}

inline BurnsideElement BurnsideRing::one() const { return basis(rank() - 1); }

inline BurnsideElement BurnsideRing::basis(std::size_t k) const {
  std::vector<Rational> c(rank());
  c.at(k) = 1;
  auto m = marks_of(c);
  return BurnsideElement(shared_from_this(), std::move(c), std::move(m));
}

inline BurnsideElement BurnsideRing::from_coeffs(std::vector<Rational> coeffs) const {
  for (const auto& c : coeffs)
    if (!primes_.is_local(c)) throw NotPLocal("coefficient " + to_string(c) + " is not in Z_(P)");
  auto m = marks_of(coeffs);
  return BurnsideElement(shared_from_this(), std::move(coeffs), std::move(m));
}

inline std::optional<BurnsideElement> BurnsideRing::try_from_marks(std::vector<Rational> marks) const {
  auto c = solve_marks(marks);
  for (const auto& x : c)
    if (!primes_.is_local(x)) return std::nullopt;
  return BurnsideElement(shared_from_this(), std::move(c), std::move(marks));
}

inline BurnsideElement BurnsideRing::from_marks(std::vector<Rational> marks) const {
  auto c = solve_marks(marks);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!primes_.is_local(c[k]))
      throw NotPLocal("coefficient " + to_string(c[k]) + " at " + (*lattice_)[k].label + " is not in Z_(P) for P = " +
                      primes_.to_string());
  return BurnsideElement(shared_from_this(), std::move(c), std::move(marks));
}

// ---------------------------------------------------------------------------
// Dress idempotents.

struct IdempotentRecordA {
  std::size_t label;  // class of the P-perfect subgroup L
  BurnsideElement element;
};

inline IdempotentRecordA dress_idempotent(const RingPtr& ring, std::size_t l) {
  if (!ring->is_p_perfect_class(l))
    throw NotPPerfect((*ring->lattice())[l].label + " is not " + ring->primes().to_string() + "-perfect");
  std::vector<Rational> marks(ring->rank());
  for (std::size_t h = 0; h < ring->rank(); ++h) marks[h] = ring->residual_class()[h] == l ? 1 : 0;
  try {
    return {l, ring->from_marks(std::move(marks))};
  } catch (const NotPLocal& e) {
    throw InternalError(std::string("Dress idempotent failed to be P-local: ") + e.what());
  }
}

inline std::vector<IdempotentRecordA> all_dress_idempotents(const RingPtr& ring) {
  std::vector<IdempotentRecordA> out;
  for (auto l : p_perfect_classes(*ring->lattice(), ring->primes())) out.push_back(dress_idempotent(ring, l));
  return out;
}

inline std::vector<std::size_t> mark_support(const BurnsideElement& x) {
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < x.marks().size(); ++h)
    if (x.mark(h) != 0) out.push_back(h);
  return out;
}

/// Primitivity of an idempotent of A_P(G) by exhaustive search: true iff no
/// 0/1 mark vector on a nonempty proper subset of the support lies in A_P(G).
/// Returns nullopt when the support exceeds `cap` classes.
inline std::optional<bool> is_primitive_idempotent(const BurnsideElement& e, std::size_t cap = 16) {
  auto support = mark_support(e);
  if (support.empty()) return false;
  if (support.size() > cap) return std::nullopt;
  const auto& ring = *e.ring();
  // coefficients of each unit mark vector; subsets sum them
  std::vector<std::vector<Rational>> unit;
  for (auto h : support) {
    std::vector<Rational> m(ring.rank());
    m[h] = 1;
    unit.push_back(ring.solve_marks(m));
  }
  const std::uint64_t full = (std::uint64_t{1} << support.size()) - 1;
  std::vector<Rational> acc(ring.rank());
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    std::fill(acc.begin(), acc.end(), Rational(0));
    for (std::size_t i = 0; i < support.size(); ++i)
      if (mask & (std::uint64_t{1} << i))
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += unit[i][k];
    bool local = true;
    for (const auto& c : acc)
      if (!ring.primes().is_local(c)) {
        local = false;
        break;
      }
    if (local) return false;
  }
  return true;
}

/// e_cyc = sum of e_L over cyclic P-perfect L; e_ker = 1 - e_cyc.
inline std::pair<BurnsideElement, BurnsideElement> split_cyc_ker(const RingPtr& ring) {
  BurnsideElement cyc = ring->zero();
  for (const auto& rec : all_dress_idempotents(ring))
    if ((*ring->lattice())[rec.label].cyclic) cyc = cyc + rec.element;
  return {cyc, ring->one() - cyc};
}

// ---------------------------------------------------------------------------
// Mackey and Tambara structure between a subgroup ring and an ambient ring.
// `emb` embeds the group of `sub` into the group of `ambient`.

/// Res: marks at each subgroup of the smaller group are read off at its class
/// in the larger group.
inline BurnsideElement restrict(const BurnsideElement& x, const RingPtr& sub, const Embedding& emb) {
  auto fusion = fuse_classes(*sub->lattice(), *x.ring()->lattice(), emb);
  std::vector<Rational> marks(sub->rank());
  for (std::size_t j = 0; j < sub->rank(); ++j) marks[j] = x.mark(fusion[j]);
  return sub->from_marks(std::move(marks));
}

/// Additive transfer: [K/J] -> [H/J].
inline BurnsideElement transfer(const BurnsideElement& x, const RingPtr& ambient, const Embedding& emb) {
  auto fusion = fuse_classes(*x.ring()->lattice(), *ambient->lattice(), emb);
  std::vector<Rational> coeffs(ambient->rank());
  for (std::size_t j = 0; j < x.coeffs().size(); ++j) coeffs[fusion[j]] += x.coeff(j);
  return ambient->from_coeffs(std::move(coeffs));
}

/// Marks of the multiplicative norm N_K^H (co-induction map_K(H, -)): the mark
/// at L <= H is the product over double cosets K h L of the mark of x at
/// K n hLh^-1.
inline std::vector<Rational> norm_marks(const BurnsideElement& x, const RingPtr& ambient, const Embedding& emb) {
  const FiniteGroup& h_group = *ambient->group();
  const auto& k_lattice = *x.ring()->lattice();
  const ElementSet k_in_h = emb.image();
  std::vector<Rational> marks(ambient->rank());
  for (std::size_t l = 0; l < ambient->rank(); ++l) {
    const auto& l_elems = (*ambient->lattice())[l].representative.elements;
    Rational product = 1;
    for (auto h : double_cosets(h_group, k_in_h, l_elems)) {
      ElementSet stab = intersect(k_in_h, conjugate_set(h_group, l_elems, h));
      product *= x.mark(k_lattice.class_of(emb.down(stab)));
      if (product == 0) break;
    }
    marks[l] = product;
  }
  return marks;
}

inline BurnsideElement norm_coinduce(const BurnsideElement& x, const RingPtr& ambient, const Embedding& emb) {
  try {
    return ambient->from_marks(norm_marks(x, ambient, emb));
  } catch (const NotPLocal& e) {
    throw InternalError(std::string("norm left the P-local Burnside ring: ") + e.what());
  }
}

}  // namespace idemkit

#endif  // IDEMKIT_BURNSIDE_HPP
