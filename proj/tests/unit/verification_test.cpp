#include <gtest/gtest.h>

#include "arrlab/errors.hpp"
#include "arrlab/verification.hpp"
#include "oracles.hpp"

using arrlab::InstanceSpec;
using arrlab::PropId;
using oracle::r;

namespace {

const arrlab::Check* find_check(const arrlab::VerificationResult& res, const std::string& name) {
  for (const auto& c : res.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST(Check, Relations) {
  arrlab::Check eq{"x", arrlab::Relation::Equal, r(1, 2), r(2, 4), false};
  EXPECT_TRUE(eq.holds());
  arrlab::Check le{"x", arrlab::Relation::AtMost, r(1), r(2), false};
  EXPECT_FALSE(le.holds());
  arrlab::Check ge{"x", arrlab::Relation::AtLeast, r(1), r(2), false};
  EXPECT_TRUE(ge.holds());
  arrlab::VerificationResult res;
  res.checks = {le};
  EXPECT_FALSE(res.pass());
  res.checks[0].informational = true;
  EXPECT_TRUE(res.pass());
}

TEST(Verify, PlanarSeven) {
  const auto res = arrlab::verify_proposition(PropId::P1, InstanceSpec::ao2(7));
  EXPECT_TRUE(res.pass());
  const auto* delta = find_check(res, "delta");
  ASSERT_NE(delta, nullptr);
  EXPECT_EQ(delta->computed, r(26, 15));
}

TEST(Verify, CubesInCyclicThreeEight) {
  const auto res = arrlab::verify_proposition(PropId::P6, InstanceSpec::cyclic(3, 8));
  EXPECT_TRUE(res.pass());
  const auto* cubes = find_check(res, "cubes");
  ASSERT_NE(cubes, nullptr);
  EXPECT_EQ(cubes->computed, r(10));
  const auto* bound = find_check(res, "delta_min");
  ASSERT_NE(bound, nullptr);
  EXPECT_EQ(bound->expected, r(30, 35));
}

TEST(Verify, DPlusTwoInThreeDimensions) {
  const auto res = arrlab::verify_proposition(PropId::P5, InstanceSpec::cyclic(3, 5));
  EXPECT_TRUE(res.pass());
  EXPECT_EQ(find_check(res, "delta")->computed, r(3, 2));
}

TEST(Verify, PlanarIdentityExamples) {
  const auto res = arrlab::verify_identity_2d(arrlab::build_ao2(7).arrangement);
  EXPECT_TRUE(res.pass());
  arrlab::Arrangement a24 = arrlab::build_cyclic_star(2, 4).arrangement;
  EXPECT_TRUE(arrlab::verify_identity_2d(a24).pass());
}

TEST(Verify, SpatialSixReportsBothValues) {
  const auto res = arrlab::verify_proposition(PropId::P3, InstanceSpec::ao3(6));
  EXPECT_TRUE(res.pass());
  EXPECT_FALSE(res.notes.empty());
  const auto* quoted = find_check(res, "delta_vs_quoted_decimal");
  ASSERT_NE(quoted, nullptr);
  EXPECT_TRUE(quoted->informational);
  EXPECT_EQ(quoted->expected, r(9, 5));
}

TEST(Verify, OutOfScopeThrows) {
  EXPECT_THROW(arrlab::verify_proposition(PropId::P1, InstanceSpec::cyclic(3, 6)), arrlab::InputError);
  EXPECT_THROW(arrlab::verify_proposition(PropId::P5, InstanceSpec::cyclic(3, 7)), arrlab::InputError);
  EXPECT_THROW(arrlab::verify_proposition(PropId::P6, InstanceSpec::cyclic(3, 5)), arrlab::InputError);
  EXPECT_THROW(arrlab::verify_proposition(PropId::P4, InstanceSpec::ao2(6)), arrlab::InputError);
}

TEST(Verify, RandomInstancesForUpperBounds) {
  EXPECT_TRUE(arrlab::verify_proposition(PropId::P2, InstanceSpec::random(2, 7, 3)).pass());
  EXPECT_TRUE(arrlab::verify_proposition(PropId::P4, InstanceSpec::random(3, 6, 104)).pass());
  EXPECT_TRUE(arrlab::verify_proposition(PropId::H, InstanceSpec::random(3, 7, 105)).pass());
  EXPECT_TRUE(arrlab::verify_proposition(PropId::S, InstanceSpec::cyclic(5, 9)).pass());
}

TEST(Props, NamesRoundTrip) {
  for (auto id : arrlab::all_props()) EXPECT_EQ(arrlab::parse_prop(arrlab::prop_name(id)), id);
  EXPECT_EQ(arrlab::all_props().size(), 9u);
  EXPECT_THROW(arrlab::parse_prop("P8"), arrlab::InputError);
}

TEST(Grid, Parsing) {
  auto g = arrlab::Grid::parse("n=4..12");
  EXPECT_TRUE(g.d_values.empty());
  EXPECT_EQ(g.n_values.size(), 9u);
  g = arrlab::Grid::parse("d=3,n=6..8");
  EXPECT_EQ(g.d_values, (std::vector<std::size_t>{3}));
  EXPECT_EQ(g.n_values, (std::vector<std::size_t>{6, 7, 8}));
  g = arrlab::Grid::parse("-d 2..6");
  EXPECT_EQ(g.d_values.size(), 5u);
  EXPECT_EQ(arrlab::Grid::parse("n=7").n_values, (std::vector<std::size_t>{7}));
  for (const char* bad : {"", "n=", "n=5..", "x=3", "n=9..4", "n=a..b", "d=2..3;n=4"}) {
    EXPECT_THROW(arrlab::Grid::parse(bad), arrlab::InputError) << bad;
  }
}

TEST(Suite, DefaultInstances) {
  const auto seeds = arrlab::SeedSet::defaults();
  EXPECT_EQ(seeds.planar.size(), 50u);
  EXPECT_EQ(seeds.spatial.size(), 20u);
  for (const auto& s : seeds.planar) EXPECT_LE(s.n, 8u);
  for (const auto& s : seeds.spatial) EXPECT_LE(s.n, 7u);
  EXPECT_EQ(arrlab::suite_instances(PropId::P1, std::nullopt, seeds, false).size(), 9u);
  EXPECT_EQ(arrlab::suite_instances(PropId::P2, std::nullopt, seeds, false).size(), 59u);
  EXPECT_EQ(arrlab::suite_instances(PropId::P3, std::nullopt, seeds, false).size(), 6u);
  EXPECT_EQ(arrlab::suite_instances(PropId::P4, std::nullopt, seeds, false).size(), 25u);
  EXPECT_EQ(arrlab::suite_instances(PropId::P5, std::nullopt, seeds, false).size(), 5u);
  EXPECT_EQ(arrlab::suite_instances(PropId::P6, std::nullopt, seeds, false).size(), 8u);
  const auto grid = arrlab::Grid::parse("n=4..12");
  EXPECT_EQ(arrlab::suite_instances(PropId::P1, grid, seeds, false).size(), 9u);
  EXPECT_EQ(arrlab::suite_instances(PropId::P5, arrlab::Grid::parse("d=2..6"), seeds, false).size(), 5u);
}

TEST(Suite, ResultsFollowPropOrder) {
  const auto seeds = arrlab::SeedSet::defaults();
  const auto results = arrlab::run_suite({PropId::P5, PropId::P1}, std::nullopt, seeds, false);
  ASSERT_EQ(results.size(), 14u);
  EXPECT_EQ(results.front().prop, "P5");
  EXPECT_EQ(results.back().prop, "P1");
  const std::vector<arrlab::Rational> p5{r(4, 3), r(3, 2), r(8, 5), r(5, 3), r(12, 7)};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_TRUE(results[i].pass());
    EXPECT_EQ(find_check(results[i], "delta")->computed, p5[i]);
  }
}
