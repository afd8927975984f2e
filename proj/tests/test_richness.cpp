#include "hypermorse/errors.hpp"
#include "hypermorse/richness.hpp"

#include <gtest/gtest.h>

using namespace hypermorse;

TEST(Pool, DefaultEndpointsAreLeaves) {
  auto ball = build_tree_ball(3, 2);
  auto ends = default_pool_endpoints(ball);
  EXPECT_EQ(ends.size(), 6u);
  auto cycle = build_control(ControlKind::cycle, 5);
  EXPECT_EQ(default_pool_endpoints(cycle).size(), 5u);
  GeodesicSpace space(ball);
  auto pool = build_pool(space, ends);
  EXPECT_EQ(pool.size(), 15u);
  for (std::size_t g = 0; g < pool.size(); ++g)
    for (PointId p : pool.geodesics[g].points) EXPECT_EQ(pool.distance_to[g][p], 0);
}

TEST(Richness, PathIsNotRich) {
  GeodesicSpace path(build_control(ControlKind::path, 20));
  auto report = check_richness(path);
  EXPECT_FALSE(report.rich());
  EXPECT_FALSE(report.condition1_violations.empty());
  EXPECT_TRUE(report.condition2_violations.empty());
  EXPECT_EQ(report.pool_size, 1u);
  EXPECT_EQ(report.fitted_r3, 0);
  EXPECT_EQ(report.fitted_r4, 0);
  const auto& w = report.condition1[report.condition1_violations.front()];
  EXPECT_GE(w.offset, 3);
}

TEST(Richness, TreeBallIsRich) {
  GeodesicSpace ball(build_tree_ball(3, 5));
  auto report = check_richness(ball);
  EXPECT_TRUE(report.rich());
  EXPECT_EQ(report.pool_size, 48u * 47u / 2u);
  EXPECT_LT(report.fitted_r1, 3);
  EXPECT_LE(report.fitted_r2, 3);
  EXPECT_LE(report.fitted_r3, 3);
  EXPECT_LE(report.fitted_r4, 3);
  auto again = check_richness(ball);
  EXPECT_EQ(again.fitted_r2, report.fitted_r2);
  EXPECT_EQ(again.condition1.size(), report.condition1.size());
}

TEST(Richness, PointOnGeodesicWitnessedByItself) {
  GeodesicSpace ball(build_tree_ball(3, 3));
  auto pool = build_pool(ball, default_pool_endpoints(ball.graph()));
  for (const auto& r : check_condition2(ball.metric(), pool))
    if (pool.distance_to[r.geodesic][r.p] == 0) {
      EXPECT_EQ(r.near, 0);
      EXPECT_EQ(r.offset, 0);
    }
}

TEST(Richness, PairsBelowThresholdExcluded) {
  GeodesicSpace path(build_control(ControlKind::path, 6));
  auto pool = build_pool(path, default_pool_endpoints(path.graph()));
  for (const auto& r : check_condition1(path.metric(), pool, 1.0)) EXPECT_NE(r.p, r.q);
  EXPECT_TRUE(check_condition1(path.metric(), pool, 6.0).empty());
}

TEST(Richness, SamplingIsSeeded) {
  GeodesicSpace ball(build_tree_ball(3, 5));
  auto pool = build_pool(ball, default_pool_endpoints(ball.graph()));
  SamplingOptions s;
  s.max_exhaustive = 100;
  s.samples = 500;
  s.seed = 4;
  auto a = check_condition1(ball.metric(), pool, 1.0, s);
  auto b = check_condition1(ball.metric(), pool, 1.0, s);
  ASSERT_EQ(a.size(), b.size());
  ASSERT_LE(a.size(), 500u);
  ASSERT_GT(a.size(), 400u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].p, b[i].p);
    EXPECT_EQ(a[i].q, b[i].q);
    EXPECT_EQ(a[i].geodesic, b[i].geodesic);
  }
}

TEST(Richness, EmptyPoolRejected) {
  GeodesicSpace path(build_control(ControlKind::path, 6));
  GeodesicPool empty;
  EXPECT_THROW(check_condition1(path.metric(), empty, 1.0), InputError);
  EXPECT_THROW(check_condition2(path.metric(), empty), InputError);
  RichnessOptions o;
  o.endpoints = {2};
  EXPECT_THROW(check_richness(path, o), InputError);
}
