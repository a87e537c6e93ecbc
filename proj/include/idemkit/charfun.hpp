#ifndef IDEMKIT_CHARFUN_HPP
#define IDEMKIT_CHARFUN_HPP

#include <optional>
#include <string>
#include <vector>

#include "idemkit/burnside.hpp"
#include "idemkit/cyclotomic.hpp"
#include "idemkit/group.hpp"

namespace idemkit {

/// A function on the conjugacy classes of a group with cyclotomic values, in
/// the class order of FiniteGroup::conjugacy_classes().
class ClassFunction {
 public:
  ClassFunction(GroupPtr group, std::vector<CycNumber> values) : group_(std::move(group)), values_(std::move(values)) {
    if (values_.size() != group_->conjugacy_classes().size())
      throw InvalidArgument("class function needs one value per conjugacy class");
  }

  static ClassFunction constant(GroupPtr group, const CycNumber& c) {
    std::size_t n = group->conjugacy_classes().size();
    return ClassFunction(std::move(group), std::vector<CycNumber>(n, c));
  }

  static ClassFunction indicator(GroupPtr group, const std::vector<std::size_t>& classes) {
    std::vector<CycNumber> v(group->conjugacy_classes().size(), CycNumber(0));
    for (auto c : classes) v.at(c) = 1;
    return ClassFunction(std::move(group), std::move(v));
  }

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<CycNumber>& values() const noexcept { return values_; }
  const CycNumber& operator[](std::size_t cls) const { return values_[cls]; }
  const CycNumber& at_element(ElementIndex g) const { return values_[group_->class_of(g)]; }

  bool is_rational() const {
    for (const auto& v : values_)
      if (!v.is_rational()) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& v : values_)
      if (!v.is_zero()) return false;
    return true;
  }

  std::vector<Rational> rational_values() const {
    std::vector<Rational> out;
    for (const auto& v : values_) out.push_back(v.rational_value());
    return out;
  }

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    a.check_compatible(b);
    std::vector<CycNumber> v;
    for (std::size_t i = 0; i < a.values_.size(); ++i) v.push_back(a.values_[i] + b.values_[i]);
    return ClassFunction(a.group_, std::move(v));
  }
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
    a.check_compatible(b);
    std::vector<CycNumber> v;
    for (std::size_t i = 0; i < a.values_.size(); ++i) v.push_back(a.values_[i] - b.values_[i]);
    return ClassFunction(a.group_, std::move(v));
  }
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    a.check_compatible(b);
    std::vector<CycNumber> v;
    for (std::size_t i = 0; i < a.values_.size(); ++i) v.push_back(a.values_[i] * b.values_[i]);
    return ClassFunction(a.group_, std::move(v));
  }
  friend ClassFunction operator*(const CycNumber& s, const ClassFunction& a) {
    std::vector<CycNumber> v;
    for (const auto& x : a.values_) v.push_back(s * x);
    return ClassFunction(a.group_, std::move(v));
  }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }

 private:
  void check_compatible(const ClassFunction& other) const {
    if (group_ != other.group_) throw InvalidArgument("class functions live on different groups");
  }

  GroupPtr group_;
  std::vector<CycNumber> values_;
};

/// Character of the linearization: the value at g is the mark at <g>.
inline ClassFunction lin(const BurnsideElement& x) {
  const auto& lattice = *x.ring()->lattice();
  const auto& g = *lattice.group();
  std::vector<CycNumber> v;
  for (const auto& c : g.conjugacy_classes()) v.emplace_back(x.mark(lattice.cyclic_class_of(c.representative)));
  return ClassFunction(lattice.group(), std::move(v));
}

/// Restriction along an embedding of groups.
inline ClassFunction restrict(const ClassFunction& chi, const Embedding& emb) {
  if (emb.parent != chi.group()) throw InvalidArgument("restriction: embedding does not target the character's group");
  std::vector<CycNumber> v;
  for (const auto& c : emb.sub->conjugacy_classes()) v.push_back(chi.at_element(emb.up(c.representative)));
  return ClassFunction(emb.sub, std::move(v));
}

/// (1/|G|) sum_g chi(g) psi(g^-1).
inline CycNumber inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  if (chi.group() != psi.group()) throw InvalidArgument("inner product of class functions on different groups");
  const auto& g = *chi.group();
  CycNumber acc(0);
  for (std::size_t c = 0; c < g.conjugacy_classes().size(); ++c) {
    auto size = static_cast<std::int64_t>(g.conjugacy_classes()[c].members.size());
    acc += (chi[c] * psi[g.inverse_class(c)]).scaled(Rational(size));
  }
  return acc.scaled(Rational(1, static_cast<std::int64_t>(g.order())));
}

/// Selects coset and orbit representatives in tensor induction; the default
/// takes the least element of each.
struct TransversalChoice {
  std::size_t element_shift = 0;  // pick the (shift mod |K|)-th element of each coset
  std::size_t orbit_shift = 0;    // start each <h>-orbit at its (shift mod length)-th coset
};

/// Tensor induction from the group of `emb.sub` to `emb.parent`: the value at h
/// is the product over <h>-orbits O on H/K of chi(t^-1 h^|O| t), t in a coset of O.
inline ClassFunction tensor_induct(const ClassFunction& chi, const Embedding& emb, TransversalChoice choice = {}) {
  if (emb.sub != chi.group()) throw InvalidArgument("tensor induction: embedding does not start at the character's group");
  const FiniteGroup& h = *emb.parent;
  const ElementSet k = emb.image();
  // left cosets tK
  std::vector<std::int64_t> coset_of(h.order(), -1);
  std::vector<ElementSet> cosets;
  for (ElementIndex t = 0; t < h.order(); ++t) {
    if (coset_of[t] >= 0) continue;
    ElementSet members;
    for (auto x : k) {
      ElementIndex y = h.mul(t, x);
      coset_of[y] = static_cast<std::int64_t>(cosets.size());
      members.push_back(y);
    }
    std::sort(members.begin(), members.end());
    cosets.push_back(std::move(members));
  }
  std::vector<CycNumber> values;
  for (const auto& cls : h.conjugacy_classes()) {
    ElementIndex g = cls.representative;
    std::vector<bool> done(cosets.size(), false);
    CycNumber product(1);
    for (std::size_t start = 0; start < cosets.size(); ++start) {
      if (done[start]) continue;
      std::vector<std::size_t> orbit;
      std::size_t c = start;
      do {
        done[c] = true;
        orbit.push_back(c);
        c = static_cast<std::size_t>(coset_of[h.mul(g, cosets[c].front())]);
      } while (c != start);
      const auto& coset = cosets[orbit[choice.orbit_shift % orbit.size()]];
      ElementIndex t = coset[choice.element_shift % coset.size()];
      ElementIndex inner = h.mul(h.mul(h.inverse(t), h.power(g, static_cast<std::int64_t>(orbit.size()))), t);
      product *= chi.at_element(emb.down(inner));
    }
    values.push_back(std::move(product));
  }
  return ClassFunction(emb.parent, std::move(values));
}

/// Result of testing membership of a class function in R_P(G).
struct RepMembership {
  bool member = false;
  std::vector<CycNumber> multiplicities;  // <chi, chi_i> per irreducible
};

struct CharacterTable;

inline RepMembership in_rep_ring_p(const ClassFunction& chi, const PrimeSet& primes, const CharacterTable& table);

/// chi(g) == chi(g_p') mod p for every g; requires integer values.
inline bool mod_p_congruence(const ClassFunction& chi, std::uint64_t p) {
  const auto& g = *chi.group();
  PrimeSet single{p};
  std::vector<Integer> ints;
  for (const auto& v : chi.values()) {
    if (!v.is_rational() || !is_integer(v.rational_value()))
      throw NonIntegerValues("mod-p congruence needs integer character values");
    ints.push_back(boost::multiprecision::numerator(v.rational_value()));
  }
  for (std::size_t c = 0; c < ints.size(); ++c) {
    ElementIndex x = g.conjugacy_classes()[c].representative;
    Integer diff = ints[c] - ints[g.class_of(p_prime_part(g, x, single))];
    if (diff % p != 0) return false;
  }
  return true;
}

/// True iff chi(x) == chi(y) whenever x and y generate the same cyclic subgroup.
inline bool generator_constancy(const ClassFunction& chi) {
  const auto& g = *chi.group();
  for (const auto& block : generator_orbits(g))
    for (auto x : block)
      if (!(chi.at_element(x) == chi.at_element(block.front()))) return false;
  return true;
}

}  // namespace idemkit

#endif  // IDEMKIT_CHARFUN_HPP
