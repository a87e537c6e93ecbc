#include <gtest/gtest.h>

#include "idemkit/idemkit.hpp"
#include "idemkit/io.hpp"

using namespace idemkit;
using io::json;

namespace {

const std::vector<std::string> kCorpus = {"C1", "C2", "C4", "C6", "C12", "S3", "D4", "Q8",
                                          "A4", "D5", "D6", "C2xC3", "S4", "A5"};

}  // namespace

TEST(Json, Rationals) {
  for (auto q : {Rational(0), Rational(-7), Rational(3, 8), Rational(-1, 6)})
    EXPECT_EQ(io::rational_from_json(io::to_json(q)), q);
  EXPECT_EQ(io::to_json(Rational(-1, 6)), json("-1/6"));
  EXPECT_THROW(io::rational_from_json(json(0.5)), InvalidArgument);
  EXPECT_THROW(io::rational_from_json(json("1/0")), InvalidArgument);
  EXPECT_THROW(io::rational_from_json(json("a/b")), InvalidArgument);
}

TEST(Json, Cyclotomics) {
  for (auto z : {CycNumber(Rational(2, 3)), CycNumber::root_of_unity(5, 2), CycNumber::root_of_unity(12, 7) * Rational(1, 2)})
    EXPECT_EQ(io::cyc_from_json(io::to_json(z)), z);
  EXPECT_THROW(io::cyc_from_json(json::parse(R"({"conductor": 0, "coefficients": []})")), InvalidArgument);
  EXPECT_THROW(io::cyc_from_json(json::parse(R"({"conductor": 5, "coefficients": ["1"]})")), InvalidArgument);
  EXPECT_THROW(io::cyc_from_json(json::parse(R"([1, 2])")), InvalidArgument);
}

TEST(Json, MarksRoundTrip) {
  for (const auto& name : kCorpus) {
    auto lattice = subgroup_classes(builtin::by_name(name));
    TableOfMarks t(lattice);
    auto text = io::marks_json(t).dump();
    EXPECT_EQ(io::marks_from_json(json::parse(text), lattice), t) << name;
    // re-ingesting against a freshly built lattice of the same group
    EXPECT_EQ(io::marks_from_json(json::parse(text), subgroup_classes(builtin::by_name(name))), t) << name;
    EXPECT_EQ(text, io::marks_json(TableOfMarks(subgroup_classes(builtin::by_name(name)))).dump());
  }
}

TEST(Json, MarksIngestionErrors) {
  auto s3 = subgroup_classes(builtin::by_name("S3"));
  auto j = io::marks_json(TableOfMarks(s3));
  EXPECT_THROW(io::marks_from_json(j, subgroup_classes(builtin::by_name("C6"))), InvalidArgument);
  auto short_rows = j;
  short_rows["marks"].erase(3);
  EXPECT_THROW(io::marks_from_json(short_rows, s3), InvalidArgument);
  auto short_row = j;
  short_row["marks"][1].erase(0);
  EXPECT_THROW(io::marks_from_json(short_row, s3), InvalidArgument);
  auto bad = j;
  bad["marks"][1][1] = 2;
  EXPECT_THROW(io::marks_from_json(bad, s3), InvalidArgument);
}

TEST(Json, CharacterTableRoundTrip) {
  for (const auto& name : kCorpus) {
    auto g = builtin::by_name(name);
    auto t = character_table(g);
    auto text = io::chartable_json(t).dump(2);
    auto back = io::chartable_from_json(json::parse(text), g);
    ASSERT_EQ(back.size(), t.size());
    EXPECT_EQ(back.degrees, t.degrees);
    for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(back[i], t[i]) << name;
    EXPECT_EQ(io::chartable_json(back).dump(2), text);
  }
}

TEST(Json, CharacterTableIngestionErrors) {
  auto g = builtin::by_name("S3");
  auto j = io::chartable_json(character_table(g));
  EXPECT_THROW(io::chartable_from_json(j, builtin::by_name("C3")), InvalidArgument);

  auto missing = j;
  missing["characters"].erase(0);
  EXPECT_THROW(io::chartable_from_json(missing, g), InvalidArgument);

  auto wrong_degree = j;
  wrong_degree["characters"][0]["degree"] = 2;
  EXPECT_THROW(io::chartable_from_json(wrong_degree, g), InvalidArgument);

  auto not_orthonormal = j;
  not_orthonormal["characters"][0] = j["characters"][1];
  EXPECT_THROW(io::chartable_from_json(not_orthonormal, g), InvalidArgument);

  auto moved_class = j;
  std::swap(moved_class["classes"][1], moved_class["classes"][2]);
  EXPECT_THROW(io::chartable_from_json(moved_class, g), InvalidArgument);

  // a hand-written C2 table
  auto c2 = builtin::by_name("C2");
  auto text = R"js({"classes": [{"representative": "()", "size": 1}, {"representative": "(0 1)", "size": 1}],
                 "characters": [{"degree": 1, "values": [{"conductor": 1, "coefficients": ["1"]},
                                                         {"conductor": 2, "coefficients": ["-1"]}]},
                                {"degree": 1, "values": [{"conductor": 1, "coefficients": ["1"]},
                                                         {"conductor": 1, "coefficients": ["1"]}]}]})js";
  auto t = io::chartable_from_json(json::parse(text), c2);
  EXPECT_EQ(t[0][1], CycNumber(-1));
}

TEST(Json, IdempotentReport) {
  auto ring = make_burnside_ring(subgroup_classes(builtin::by_name("S3")), {2});
  auto table = character_table(ring->group());
  auto j = io::idempotents_json(ring, classify_idempotents_R(*ring->lattice(), {2}, table));
  EXPECT_EQ(j["burnside"].size(), 2u);
  EXPECT_EQ(j["representation"].size(), 2u);
  EXPECT_EQ(j["representation"][1]["label"], "C3");
  EXPECT_EQ(j["representation"][1]["support"], json::array({"(0 1 2)"}));
  EXPECT_EQ(j["representation"][1]["primitive"], true);
  EXPECT_EQ(j["gamma_orbit_crosscheck"], true);
}

TEST(Json, AuditReport) {
  NormContext ctx(make_burnside_ring(subgroup_classes(builtin::by_name("S3")), {2}));
  auto j = io::audit_json(ctx, equivalence_audit(ctx));
  EXPECT_EQ(j["labels"], json::array({"1", "C3"}));
  EXPECT_EQ(j["all_agree"], true);
  bool found = false;
  for (const auto& c : j["cells"])
    if (c["C"] == "C3" && c["H"] == "S3" && c["K"] == "C2") {
      found = true;
      EXPECT_EQ(c["condition_e"], false);
      EXPECT_EQ(c["division_A"], false);
      EXPECT_EQ(c["division_R"], false);
    }
  EXPECT_TRUE(found);
  auto idx = io::indexing_json(ctx, indexing_system_cyc(ctx), "cyc");
  EXPECT_EQ(idx["axioms"], true);
  EXPECT_EQ(idx["subgroups"].back()["admissible"], json::array({"C3", "S3"}));
}
