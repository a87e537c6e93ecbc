#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"

using namespace idemkit;

namespace {

Permutation P(const char* text, std::size_t degree) { return Permutation::parse(text, degree); }

const std::vector<std::string> kSmall = {"C1", "C2", "C4", "C6", "C2xC3", "S3", "D4", "Q8", "A4", "D5", "D6", "C12", "S4"};

}  // namespace

TEST(Permutation, ParseAndPrint) {
  auto p = P("(0 1)(2 3 4)", 5);
  EXPECT_EQ(p.to_cycle_string(), "(0 1)(2 3 4)");
  EXPECT_EQ(Permutation::identity(3).to_cycle_string(), "()");
  EXPECT_EQ(P("()", 4), Permutation::identity(4));
  EXPECT_THROW(P("(0 0)", 3), InvalidArgument);
  EXPECT_THROW(P("(0 5)", 3), InvalidArgument);
  EXPECT_THROW(Permutation(std::vector<std::uint32_t>{0, 0, 1}), InvalidArgument);
}

TEST(Permutation, ElementOrder) {
  EXPECT_EQ(element_order(Permutation::identity(4)), 1U);
  EXPECT_EQ(element_order(P("(0 1)", 2)), 2U);
  EXPECT_EQ(element_order(P("(0 1)(2 3 4)", 5)), 6U);
  // by repeated composition
  auto g = P("(0 1 2 3)(4 5 6)(7 8)", 9);
  std::uint64_t n = 1;
  for (auto x = g; !x.is_identity(); x = x * g) ++n;
  EXPECT_EQ(element_order(g), n);
}

TEST(Permutation, PPartDecomposition) {
  auto g = P("(0 1)(2 3 4)", 5);
  auto [gp, gq] = p_part_decomposition(g, PrimeSet{2});
  EXPECT_EQ(gp, P("(0 1)", 5));
  EXPECT_EQ(gq, P("(2 3 4)", 5));
  auto [ep, eq] = p_part_decomposition(g, PrimeSet{});
  EXPECT_TRUE(ep.is_identity());
  EXPECT_EQ(eq, g);
  auto c6 = P("(0 1 2 3 4 5)", 6);
  auto [fp, fq] = p_part_decomposition(c6, PrimeSet{2, 3});
  EXPECT_EQ(fp, c6);
  EXPECT_TRUE(fq.is_identity());
}

TEST(Permutation, PPartProperty) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint32_t> images(9);
    std::iota(images.begin(), images.end(), 0U);
    std::shuffle(images.begin(), images.end(), rng);
    Permutation g(images);
    for (const auto& primes : {PrimeSet{}, PrimeSet{2}, PrimeSet{3}, PrimeSet{2, 3}, PrimeSet{5, 7}}) {
      auto [gp, gq] = p_part_decomposition(g, primes);
      EXPECT_EQ(gp * gq, g);
      EXPECT_EQ(gq * gp, g);
      EXPECT_TRUE(primes.is_p_number(element_order(gp)));
      EXPECT_TRUE(primes.is_p_prime_number(element_order(gq)));
      EXPECT_EQ(element_order(gp) * element_order(gq), element_order(g));
      bool gp_power = false, gq_power = false;
      auto x = Permutation::identity(9);
      for (std::uint64_t i = 0; i < element_order(g); ++i, x = x * g) {
        gp_power = gp_power || x == gp;
        gq_power = gq_power || x == gq;
      }
      EXPECT_TRUE(gp_power && gq_power);
    }
  }
}

TEST(PrimeSet, ParseAndLocality) {
  EXPECT_EQ(PrimeSet::parse(""), PrimeSet{});
  EXPECT_EQ(PrimeSet::parse("3,2"), (PrimeSet{2, 3}));
  EXPECT_THROW(PrimeSet::parse("4"), InvalidArgument);
  EXPECT_THROW(PrimeSet::parse("2,x"), InvalidArgument);
  PrimeSet two{2};
  EXPECT_TRUE(two.is_local(Rational(1, 3)));
  EXPECT_FALSE(two.is_local(Rational(1, 6)));
  EXPECT_TRUE(PrimeSet{}.is_local(Rational(1, 6)));
}

TEST(Group, Closure) {
  auto s3 = group_from_generators({P("(0 1)", 3), P("(0 1 2)", 3)});
  EXPECT_EQ(s3->order(), 6U);
  auto trivial = group_from_generators(1, {});
  EXPECT_EQ(trivial->order(), 1U);
  auto a5 = group_from_generators({P("(0 1 2 3 4)", 5), P("(0 1 2)", 5)});
  EXPECT_EQ(a5->order(), 60U);
  EXPECT_EQ(oracle::all_elements(*a5), oracle::close({P("(0 1 2 3 4)", 5), P("(0 1 2)", 5)}, 5));
  EXPECT_THROW(group_from_generators({P("(0 1)", 2), P("(0 1 2)", 3)}), InvalidArgument);
  EXPECT_THROW(group_from_generators({P("(0 1 2 3 4 5 6)", 7), P("(0 1)", 7)}, 100), CapExceeded);
  EXPECT_EQ(s3->element(0), Permutation::identity(3));
}

TEST(Group, Builtins) {
  std::map<std::string, std::uint64_t> orders = {{"C1", 1},  {"C7", 7},  {"S3", 6},  {"S4", 24}, {"A4", 12},
                                                 {"A5", 60}, {"D4", 8},  {"D5", 10}, {"D6", 12}, {"Q8", 8},
                                                 {"C2xC3", 6}, {"C2xC2", 4}, {"D1", 2}, {"D2", 4}};
  for (const auto& [name, order] : orders) EXPECT_EQ(builtin::by_name(name)->order(), order) << name;
  EXPECT_FALSE(builtin::by_name("Q8")->is_abelian());
  EXPECT_TRUE(builtin::by_name("C2xC3")->is_abelian());
  EXPECT_EQ(builtin::by_name("Q8")->exponent(), 4U);
  EXPECT_THROW(builtin::by_name("Z5"), InvalidArgument);
}

TEST(Group, ConjugacyClasses) {
  auto sizes = [](const std::string& name) {
    auto g = builtin::by_name(name);
    std::vector<std::size_t> out;
    for (const auto& c : g->conjugacy_classes()) out.push_back(c.members.size());
    return out;
  };
  EXPECT_EQ(sizes("C1"), std::vector<std::size_t>{1});
  EXPECT_EQ(sizes("S3"), (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(sizes("A5"), (std::vector<std::size_t>{1, 15, 20, 12, 12}));
  for (const auto& name : kSmall) {
    auto g = builtin::by_name(name);
    std::size_t total = 0;
    for (const auto& c : g->conjugacy_classes()) {
      total += c.members.size();
      EXPECT_EQ(c.centralizer_order * c.members.size(), g->order());
      // members are exactly the conjugates of the representative
      std::set<Permutation> direct;
      for (const auto& x : g->elements()) direct.insert(x * g->element(c.representative) * x.inverse());
      std::set<Permutation> listed;
      for (auto m : c.members) listed.insert(g->element(m));
      EXPECT_EQ(direct, listed);
    }
    EXPECT_EQ(total, g->order());
  }
}

TEST(Group, GroupFileParsing) {
  std::istringstream ok("# S3\ndegree 3\n(0 1)\n(0 1 2)  # rotation\n");
  EXPECT_EQ(parse_group(ok)->order(), 6U);
  std::istringstream identity("degree 2\n");
  EXPECT_EQ(parse_group(identity)->order(), 1U);
  std::istringstream bad("degree 3\n(0 1)\n(0 7)\n");
  try {
    parse_group(bad);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
  }
  std::istringstream no_degree("(0 1)\n");
  EXPECT_THROW(parse_group(no_degree), ParseError);
  auto d5 = builtin::by_name("D5");
  std::istringstream round(format_group(*d5));
  EXPECT_EQ(parse_group(round)->elements(), d5->elements());
}

TEST(Group, DoubleCosets) {
  auto g = builtin::by_name("S3");
  auto lat = subgroup_classes(g);
  ElementSet all = lat->classes().back().representative.elements;
  ElementSet one = lat->classes().front().representative.elements;
  EXPECT_EQ(double_cosets(*g, all, all).size(), 1U);
  EXPECT_EQ(double_cosets(*g, one, one).size(), 6U);
  EXPECT_EQ(double_cosets(*g, (*lat)[1].representative.elements, (*lat)[2].representative.elements).size(), 1U);
}

TEST(Group, GeneratorOrbits) {
  auto c5 = builtin::by_name("C5");
  auto orbits = generator_orbits(*c5);
  ASSERT_EQ(orbits.size(), 2U);
  EXPECT_EQ(orbits[0], ElementSet{0});
  EXPECT_EQ(orbits[1].size(), 4U);
  auto s3 = builtin::by_name("S3");
  bool threes_together = false;
  for (const auto& o : generator_orbits(*s3))
    if (o.size() == 2 && s3->element_order(o[0]) == 3) threes_together = true;
  EXPECT_TRUE(threes_together);
}

TEST(Lattice, MatchesBruteForce) {
  for (const auto& name : kSmall) {
    auto g = builtin::by_name(name);
    auto lat = subgroup_classes(g);
    std::vector<oracle::ClassSummary> expected;
    auto subs = oracle::all_subgroups(*g);
    oracle::conjugacy_class_reps(*g, subs, &expected);
    std::vector<oracle::ClassSummary> got;
    std::size_t total = 0;
    for (std::size_t i = 0; i < lat->size(); ++i) {
      const auto& c = (*lat)[i];
      got.push_back({c.order, c.class_size});
      total += c.class_size;
      EXPECT_EQ(lat->conjugates(i).size(), c.class_size);
      EXPECT_EQ(c.class_size * normalizer(*g, c.representative).size(), g->order());
      if (i > 0) EXPECT_LE((*lat)[i - 1].order, c.order);
    }
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected) << name;
    EXPECT_EQ(total, subs.size()) << name;
  }
}

TEST(Lattice, Labels) {
  auto labels = [](const std::string& name) {
    auto lat = subgroup_classes(builtin::by_name(name));
    std::vector<std::string> out;
    for (const auto& c : lat->classes()) out.push_back(c.label);
    return out;
  };
  EXPECT_EQ(labels("C1"), std::vector<std::string>{"1"});
  EXPECT_EQ(labels("S3"), (std::vector<std::string>{"1", "C2", "C3", "S3"}));
  EXPECT_EQ(labels("A4"), (std::vector<std::string>{"1", "C2", "C3", "C2xC2", "A4"}));
  EXPECT_THROW(subgroup_classes(builtin::by_name("S4"), 10), CapExceeded);
}

TEST(Lattice, Solvable) {
  auto whole = [](const std::string& n) {
    auto g = builtin::by_name(n);
    return std::make_pair(g, whole_group(*g));
  };
  for (const auto& n : {"S3", "C6", "A4", "S4", "Q8"}) {
    auto [g, h] = whole(n);
    EXPECT_TRUE(is_solvable(*g, h)) << n;
  }
  auto [a5, h] = whole("A5");
  EXPECT_FALSE(is_solvable(*a5, h));
}

TEST(Lattice, ResidualExamples) {
  auto s3 = builtin::by_name("S3");
  auto s3_all = whole_group(*s3);
  EXPECT_EQ(p_residual(*s3, s3_all, PrimeSet{3}).elements, s3_all.elements);
  auto a4 = builtin::by_name("A4");
  auto a4_all = whole_group(*a4);
  EXPECT_EQ(p_residual(*a4, a4_all, PrimeSet{2}).elements, a4_all.elements);
  auto lat = subgroup_classes(s3);
  EXPECT_TRUE(is_p_perfect(*s3, trivial_subgroup(*s3), PrimeSet{2, 3}));
  EXPECT_TRUE(is_p_perfect(*s3, (*lat)[1].representative, PrimeSet{3}));
  EXPECT_FALSE(is_p_perfect(*s3, (*lat)[2].representative, PrimeSet{3}));
  // cyclic subgroup: residual generated by the P'-part of a generator
  auto c12 = builtin::by_name("C12");
  for (ElementIndex x = 0; x < c12->order(); ++x) {
    auto h = closure(*c12, {x});
    for (const auto& p : prime_subsets(12))
      EXPECT_EQ(p_residual(*c12, h, p).elements, closure(*c12, {p_prime_part(*c12, x, p)}).elements);
  }
}

TEST(Lattice, ResidualMatchesOracle) {
  for (const auto& name : {"S3", "A4", "D4", "Q8", "D5", "D6", "C12", "S4", "A5", "C2xC3"}) {
    auto g = builtin::by_name(name);
    auto lat = subgroup_classes(g);
    for (const auto& c : lat->classes()) {
      if (c.order > 60) continue;
      oracle::PermSet h;
      for (auto x : c.representative.elements) h.insert(g->element(x));
      for (const auto& p : prime_subsets(g->order())) {
        auto mine = p_residual(*g, c.representative, p);
        oracle::PermSet as_perms;
        for (auto x : mine.elements) as_perms.insert(g->element(x));
        EXPECT_EQ(as_perms, oracle::p_residual(h, p, g->degree())) << name << " " << c.label << " " << p.to_string();
        EXPECT_EQ(p_residual(*g, mine, p).elements, mine.elements);
      }
    }
  }
}

TEST(Lattice, CyclicPerfectClasses) {
  auto s3 = subgroup_classes(builtin::by_name("S3"));
  auto names = [&](const PrimeSet& p) {
    std::vector<std::string> out;
    for (auto c : cyclic_p_perfect_classes(*s3, p)) out.push_back((*s3)[c].label);
    return out;
  };
  EXPECT_EQ(names(PrimeSet{2}), (std::vector<std::string>{"1", "C3"}));
  EXPECT_EQ(names(PrimeSet{}), (std::vector<std::string>{"1", "C2", "C3"}));
  EXPECT_EQ(names(PrimeSet{2, 3}), (std::vector<std::string>{"1"}));
  for (const auto& name : kSmall) {
    auto lat = subgroup_classes(builtin::by_name(name));
    for (const auto& p : prime_subsets(lat->group()->order()))
      for (std::size_t i = 0; i < lat->size(); ++i)
        if ((*lat)[i].cyclic)
          EXPECT_EQ(is_p_perfect(*lat->group(), (*lat)[i].representative, p), p.is_p_prime_number((*lat)[i].order));
  }
}

TEST(Lattice, IrrelevantPrimesChangeNothing) {
  for (const auto& name : {"S3", "A4", "D5"}) {
    auto lat = subgroup_classes(builtin::by_name(name));
    for (const auto& p : prime_subsets(lat->group()->order())) {
      auto extra = p.primes();
      extra.push_back(7);
      extra.push_back(11);
      PrimeSet bigger(extra);
      EXPECT_EQ(residual_classes(*lat, p), residual_classes(*lat, bigger));
      EXPECT_EQ(cyclic_p_perfect_classes(*lat, p), cyclic_p_perfect_classes(*lat, bigger));
    }
  }
}
