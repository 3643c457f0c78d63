#include <gtest/gtest.h>

#include "arrlab/constructions.hpp"
#include "arrlab/errors.hpp"
#include "arrlab/json_io.hpp"
#include "arrlab/statistics.hpp"
#include "oracles.hpp"

namespace jio = arrlab::json_io;
using oracle::r;

TEST(Json, RationalsAsStrings) {
  EXPECT_EQ(jio::to_json(r(26, 15)), jio::json("26/15"));
  EXPECT_EQ(jio::to_json(r(-4)), jio::json("-4"));
  EXPECT_EQ(jio::rational_from_json(jio::json("3/6")), r(1, 2));
  EXPECT_EQ(jio::rational_from_json(jio::json(7)), r(7));
  EXPECT_THROW(jio::rational_from_json(jio::json(0.5)), arrlab::InputError);
}

TEST(Json, ArrangementRoundTrip) {
  for (const auto& c : {arrlab::build_ao2(7), arrlab::build_ao3(6), arrlab::build_cyclic_star(4, 8),
                        arrlab::random_simple_arrangement(3, 6, 9, 100)}) {
    const std::string text = jio::dump(jio::arrangement_to_json(c.arrangement, c.metadata));
    const auto loaded = jio::arrangement_from_json(jio::parse(text));
    ASSERT_EQ(loaded.arrangement.size(), c.arrangement.size());
    for (std::size_t i = 0; i < c.arrangement.size(); ++i) {
      EXPECT_EQ(loaded.arrangement[i].a, c.arrangement[i].a);
      EXPECT_EQ(loaded.arrangement[i].b, c.arrangement[i].b);
    }
    ASSERT_TRUE(loaded.metadata);
    EXPECT_EQ(loaded.metadata->family, c.metadata.family);
    EXPECT_EQ(loaded.metadata->epsilon, c.metadata.epsilon);
    EXPECT_EQ(loaded.metadata->seed, c.metadata.seed);
    EXPECT_EQ(jio::dump(jio::arrangement_to_json(loaded.arrangement, loaded.metadata)), text);
  }
}

TEST(Json, CanonicalText) {
  const auto c = arrlab::build_ao2(5);
  const std::string text = jio::dump(jio::arrangement_to_json(c.arrangement, c.metadata));
  EXPECT_EQ(text.back(), '\n');
  EXPECT_LT(text.find("\"dim\""), text.find("\"hyperplanes\""));
  EXPECT_LT(text.find("\"hyperplanes\""), text.find("\"metadata\""));
  EXPECT_NE(text.find("\"epsilon\": \"1/3\""), std::string::npos);
}

TEST(Json, SchemaViolations) {
  EXPECT_THROW(jio::parse("{not json"), arrlab::InputError);
  EXPECT_THROW(jio::arrangement_from_json(jio::parse("{}")), arrlab::InputError);
  EXPECT_THROW(jio::arrangement_from_json(jio::parse(R"({"dim": 2, "hyperplanes": [{"a": ["1"], "b": "0"}]})")),
               arrlab::InputError);
  EXPECT_THROW(jio::arrangement_from_json(jio::parse(R"({"dim": 2, "hyperplanes": [{"a": ["1", "x"], "b": "0"}]})")),
               arrlab::InputError);
  EXPECT_THROW(jio::arrangement_from_json(jio::parse(R"({"dim": 2, "hyperplanes": [{"a": ["0", "0"], "b": "1"}]})")),
               arrlab::InputError);
}

TEST(Json, CensusReport) {
  const auto c = arrlab::build_ao2(6);
  const auto rep = arrlab::census(c.arrangement, c.metadata);
  const auto j = jio::census_to_json(rep, true);
  EXPECT_EQ(j.at("I"), 10);
  EXPECT_EQ(j.at("delta"), "17/10");
  EXPECT_EQ(j.at("delta_display"), "1.700000");
  EXPECT_EQ(j.at("class_counts").at("Polygon(3)"), 4);
  EXPECT_EQ(j.at("cells").size(), 10u);
  EXPECT_EQ(j.at("metadata").at("family"), "ao2");
  EXPECT_FALSE(jio::census_to_json(rep, false).contains("cells"));
}

TEST(Json, SeedsRoundTrip) {
  const auto seeds = arrlab::SeedSet::defaults();
  const auto back = jio::seeds_from_json(jio::seeds_to_json(seeds));
  EXPECT_EQ(back.bound, seeds.bound);
  EXPECT_EQ(back.planar, seeds.planar);
  EXPECT_EQ(back.spatial, seeds.spatial);
  EXPECT_THROW(jio::seeds_from_json(jio::parse(R"({"planar": [{"n": "x"}]})")), arrlab::InputError);
}

TEST(Json, VerificationResult) {
  const auto res = arrlab::verify_proposition(arrlab::PropId::P1, arrlab::InstanceSpec::ao2(7));
  const auto j = jio::verification_to_json(res);
  EXPECT_EQ(j.at("prop"), "P1");
  EXPECT_EQ(j.at("verdict"), "pass");
  EXPECT_EQ(j.at("computed").at("delta"), "26/15");
  EXPECT_EQ(j.at("params").at("n"), 7);
}
