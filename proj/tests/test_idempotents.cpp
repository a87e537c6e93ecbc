#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace idemkit;

namespace {

struct Cell {
  LatticePtr lattice;
  CharacterTable table;
};

Cell cell_of(const std::string& name) {
  auto lattice = subgroup_classes(builtin::by_name(name));
  return {lattice, character_table(lattice->group())};
}

std::size_t label(const Cell& c, const std::string& l) { return *c.lattice->find_label(l); }

std::vector<std::uint64_t> orders_of(const FiniteGroup& g, const std::vector<std::size_t>& classes) {
  std::vector<std::uint64_t> out;
  for (auto k : classes) out.push_back(g.conjugacy_classes()[k].element_order);
  std::sort(out.begin(), out.end());
  return out;
}

int row_with(const CharacterTable& t, std::initializer_list<std::int64_t> values) {
  std::vector<CycNumber> v(values.begin(), values.end());
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i].values() == v) return static_cast<int>(i);
  return -1;
}

const std::vector<std::string> kCorpus = {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11",
                                          "C12", "S3", "D4", "Q8", "A4", "D5", "D6", "C2xC3", "S4", "A5"};

}  // namespace

TEST(SupportSet, Examples) {
  auto s3 = cell_of("S3");
  const auto& g = *s3.lattice->group();
  EXPECT_EQ(support_set(*s3.lattice, {2}, label(s3, "C3")), (std::vector<std::size_t>{2}));
  EXPECT_EQ(support_set(*s3.lattice, {2}, label(s3, "1")), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(orders_of(g, support_set(*s3.lattice, {2}, label(s3, "1"))), (std::vector<std::uint64_t>{1, 2}));
  EXPECT_THROW(support_set(*s3.lattice, {2}, label(s3, "S3")), InvalidArgument);

  auto c6 = subgroup_classes(builtin::by_name("C6"));
  auto support = support_set(*c6, {3}, *c6->find_label("C2"));
  EXPECT_EQ(orders_of(*c6->group(), support), (std::vector<std::uint64_t>{2, 6, 6}));
}

// C = 1 collects exactly the classes of P-elements.
TEST(SupportSet, TrivialLabelIsPElements) {
  for (const auto& name : kCorpus) {
    auto lattice = subgroup_classes(builtin::by_name(name));
    const auto& g = *lattice->group();
    for (auto& p : prime_subsets(g.order())) {
      std::vector<std::size_t> expected;
      for (std::size_t k = 0; k < g.conjugacy_classes().size(); ++k)
        if (p.is_p_number(g.conjugacy_classes()[k].element_order)) expected.push_back(k);
      EXPECT_EQ(support_set(*lattice, p, 0), expected) << name;
    }
  }
}

TEST(Classify, Examples) {
  auto s3 = cell_of("S3");
  auto two = classify_idempotents_R(*s3.lattice, {2}, s3.table);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].label, label(s3, "1"));
  EXPECT_EQ(two[0].support, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(two[1].label, label(s3, "C3"));
  EXPECT_EQ(two[1].support, (std::vector<std::size_t>{2}));
  auto all = classify_idempotents_R(*s3.lattice, {2, 3}, s3.table);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].character, ClassFunction::constant(s3.lattice->group(), 1));
  EXPECT_EQ(all[0].primitive, std::optional<bool>(true));
  for (const auto& p : {PrimeSet{}, PrimeSet{2}, PrimeSet{3}}) {
    auto c1 = cell_of("C1");
    EXPECT_EQ(classify_idempotents_R(*c1.lattice, p, c1.table).size(), 1u);
  }
}

TEST(Classify, GoldenCounts) {
  auto count = [](const std::string& name, PrimeSet p) {
    auto c = cell_of(name);
    return classify_idempotents_R(*c.lattice, p, c.table).size();
  };
  EXPECT_EQ(count("S3", {}), 3u);
  EXPECT_EQ(count("S3", {2}), 2u);
  EXPECT_EQ(count("S3", {3}), 2u);
  EXPECT_EQ(count("S3", {2, 3}), 1u);
  EXPECT_EQ(count("A4", {2}), 2u);
  EXPECT_EQ(count("A5", {}), 4u);
}

TEST(Classify, CountsMatchOracleAndRecordsAreSound) {
  for (const auto& name : kCorpus) {
    auto c = cell_of(name);
    const auto& lattice = *c.lattice;
    auto g = lattice.group();
    for (auto& p : prime_subsets(g->order())) {
      auto ring = make_burnside_ring(c.lattice, p);
      auto records = classify_idempotents_R(lattice, p, c.table);
      EXPECT_EQ(records.size(), oracle::cyclic_p_perfect_count(*g, p)) << name << " " << p.to_string();
      auto sum = ClassFunction::constant(g, 0);
      for (const auto& rec : records) {
        EXPECT_TRUE(lattice[rec.label].cyclic);
        for (const auto& v : rec.character.values()) EXPECT_TRUE(v == CycNumber(0) || v == CycNumber(1));
        EXPECT_EQ(rec.character * rec.character, rec.character);
        EXPECT_EQ(rec.character, lin(dress_idempotent(ring, rec.label).element)) << name;
        EXPECT_EQ(rec.character, ClassFunction::indicator(g, rec.support));
        EXPECT_EQ(rec.primitive, std::optional<bool>(true)) << name << " " << lattice[rec.label].label;
        auto rebuilt = ClassFunction::constant(g, 0);
        for (std::size_t i = 0; i < c.table.size(); ++i) {
          EXPECT_TRUE(p.is_local(rec.coefficients[i]));
          rebuilt = rebuilt + CycNumber(rec.coefficients[i]) * c.table[i];
        }
        EXPECT_EQ(rebuilt, rec.character);
        for (const auto& other : records)
          if (other.label != rec.label) EXPECT_TRUE((rec.character * other.character).is_zero());
        sum = sum + rec.character;
      }
      EXPECT_EQ(sum, ClassFunction::constant(g, 1)) << name;
    }
  }
}

TEST(Classify, IrrelevantPrimesChangeNothing) {
  for (const auto& name : {"S3", "A4", "D5", "C6"}) {
    auto c = cell_of(name);
    for (auto& p : prime_subsets(c.lattice->group()->order())) {
      auto base = classify_idempotents_R(*c.lattice, p, c.table);
      auto primes = p.primes();
      primes.push_back(7);
      primes.push_back(11);
      auto wider = classify_idempotents_R(*c.lattice, PrimeSet(primes), c.table);
      ASSERT_EQ(base.size(), wider.size());
      for (std::size_t i = 0; i < base.size(); ++i) {
        EXPECT_EQ(base[i].label, wider[i].label);
        EXPECT_EQ(base[i].support, wider[i].support);
        EXPECT_EQ(base[i].coefficients, wider[i].coefficients);
      }
    }
  }
}

TEST(Brauer, Examples) {
  auto s3 = cell_of("S3");
  auto coeffs = brauer_coefficients(*s3.lattice, {2}, label(s3, "C3"), s3.table);
  int triv = row_with(s3.table, {1, 1, 1}), sign = row_with(s3.table, {1, -1, 1}), std2 = row_with(s3.table, {2, 0, -1});
  ASSERT_GE(std::min({triv, sign, std2}), 0);
  EXPECT_EQ(coeffs[triv], Rational(1, 3));
  EXPECT_EQ(coeffs[sign], Rational(1, 3));
  EXPECT_EQ(coeffs[std2], Rational(-1, 3));

  // C = 1 sums over the identity and the transpositions
  auto unit = brauer_coefficients(*s3.lattice, {2}, label(s3, "1"), s3.table);
  EXPECT_EQ(unit[triv], Rational(2, 3));
  EXPECT_EQ(unit[sign], Rational(-1, 3));
  EXPECT_EQ(unit[std2], Rational(1, 3));

  auto c2 = cell_of("C2");
  auto c = brauer_coefficients(*c2.lattice, {}, label(c2, "C2"), c2.table);
  EXPECT_EQ(c[row_with(c2.table, {1, 1})], Rational(1, 2));
  EXPECT_EQ(c[row_with(c2.table, {1, -1})], Rational(-1, 2));
}

// Coefficients equal the inner products of the support indicator with the irreducibles.
TEST(Brauer, MatchesInnerProducts) {
  for (const auto& name : kCorpus) {
    auto c = cell_of(name);
    const auto& g = c.lattice->group();
    for (auto& p : prime_subsets(g->order()))
      for (auto l : cyclic_p_perfect_classes(*c.lattice, p)) {
        auto coeffs = brauer_coefficients(*c.lattice, p, l, c.table);
        auto ind = ClassFunction::indicator(g, support_set(*c.lattice, p, l));
        for (std::size_t i = 0; i < c.table.size(); ++i)
          EXPECT_EQ(CycNumber(coeffs[i]), inner_product(ind, c.table[i])) << name;
      }
  }
}

TEST(VerifyPrimitive, Examples) {
  auto s3 = cell_of("S3");
  auto records = classify_idempotents_R(*s3.lattice, {2}, s3.table);
  for (const auto& r : records) EXPECT_TRUE(verify_primitive(r, {2}, s3.table));

  auto merged = records[0];
  merged.support = {0, 1, 2};
  merged.character = records[0].character + records[1].character;
  EXPECT_FALSE(verify_primitive(merged, {2}, s3.table));
  EXPECT_THROW(verify_primitive(merged, {2}, s3.table, 2), CapExceeded);

  // with 2 inverted the transposition indicator splits off
  EXPECT_FALSE(verify_primitive(records[0], {3}, s3.table));
}

TEST(GammaOrbits, Crosscheck) {
  for (const auto& name : kCorpus) {
    auto lattice = subgroup_classes(builtin::by_name(name));
    for (auto& p : prime_subsets(lattice->group()->order())) EXPECT_TRUE(gamma_orbit_crosscheck(*lattice, p)) << name;
  }
  auto a5 = subgroup_classes(builtin::by_name("A5"));
  EXPECT_EQ(a5->group()->conjugacy_classes().size(), 5u);
  EXPECT_EQ(cyclic_p_perfect_classes(*a5, {}).size(), 4u);
}

TEST(NoncyclicVanishing, Examples) {
  auto a4 = make_burnside_ring(subgroup_classes(builtin::by_name("A4")), {2});
  EXPECT_TRUE(lin(dress_idempotent(a4, a4->lattice()->top()).element).is_zero());
  auto a5 = make_burnside_ring(subgroup_classes(builtin::by_name("A5")), {2, 3, 5});
  EXPECT_TRUE(lin(dress_idempotent(a5, a5->lattice()->top()).element).is_zero());
  EXPECT_FALSE(dress_idempotent(a5, a5->lattice()->top()).element.is_zero());
}

TEST(NoncyclicVanishing, OverCorpus) {
  for (const auto& name : kCorpus) {
    auto lattice = subgroup_classes(builtin::by_name(name));
    for (auto& p : prime_subsets(lattice->group()->order())) {
      auto ring = make_burnside_ring(lattice, p);
      for (const auto& e : all_dress_idempotents(ring))
        EXPECT_EQ(lin(e.element).is_zero(), !(*lattice)[e.label].cyclic) << name << " " << (*lattice)[e.label].label;
    }
  }
}

TEST(LinKernel, Examples) {
  auto c1 = lin_kernel_check(make_burnside_ring(subgroup_classes(builtin::by_name("C1")), {}));
  EXPECT_TRUE(c1.ker_block_in_kernel);
  EXPECT_TRUE(c1.injective_on_cyc);

  auto a4 = make_burnside_ring(subgroup_classes(builtin::by_name("A4")), {2});
  auto [cyc, ker] = split_cyc_ker(a4);
  EXPECT_TRUE(lin(ker).is_zero());
  EXPECT_FALSE(ker.is_zero());
  EXPECT_TRUE(lin_kernel_check(a4).ker_block_in_kernel);

  auto s3 = make_burnside_ring(subgroup_classes(builtin::by_name("S3")), {});
  auto r = lin_kernel_check(s3);
  EXPECT_TRUE(r.ker_block_in_kernel);
  EXPECT_TRUE(r.injective_on_cyc);
}

// With 2 inverted, e_ker vanishes in A(S3) but lin still has a kernel:
// 2[S3/S3] - [S3/C3] - 2[S3/C2] + [S3/1] has marks (0, 0, 0, 2) at 1, C2, C3, S3.
TEST(LinKernel, NonzeroKernelOutsideNoncyclicBlock) {
  auto s3 = make_burnside_ring(subgroup_classes(builtin::by_name("S3")), {2});
  auto [cyc, ker] = split_cyc_ker(s3);
  EXPECT_TRUE(ker.is_zero());
  auto x = s3->from_coeffs({Rational(1), Rational(-2), Rational(-1), Rational(2)});
  EXPECT_EQ(x.marks(), (std::vector<Rational>{0, 0, 0, 2}));
  EXPECT_TRUE(lin(x).is_zero());
  auto r = lin_kernel_check(s3);
  EXPECT_TRUE(r.ker_block_in_kernel);
  EXPECT_FALSE(r.injective_on_cyc);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_FALSE(r.witness->is_zero());
  EXPECT_TRUE(lin(*r.witness).is_zero());
}

// lin is injective on the cyclic block iff no non-cyclic subgroup has a cyclic P-residual.
TEST(LinKernel, InjectivityCriterion) {
  for (const auto& name : kCorpus) {
    auto lattice = subgroup_classes(builtin::by_name(name));
    for (auto& p : prime_subsets(lattice->group()->order())) {
      auto ring = make_burnside_ring(lattice, p);
      bool expected = true;
      for (std::size_t h = 0; h < lattice->size(); ++h)
        if (!(*lattice)[h].cyclic && (*lattice)[ring->residual_class()[h]].cyclic) expected = false;
      auto r = lin_kernel_check(ring);
      EXPECT_TRUE(r.ker_block_in_kernel) << name;
      EXPECT_EQ(r.injective_on_cyc, expected) << name << " " << p.to_string();
      if (r.witness) EXPECT_TRUE(lin(*r.witness).is_zero());
    }
  }
}
