#include "hypermorse/bounds.hpp"
#include "hypermorse/errors.hpp"
#include "hypermorse/quasi_isometries.hpp"

#include <gtest/gtest.h>

using namespace hypermorse;

namespace {

QuasiIsometryMap constant_map(const FiniteMetricSpace& m, PointId target) {
  QuasiIsometryMap f;
  for (PointId x = 0; x < m.size(); ++x) {
    f.domain.push_back(x);
    f.image.push_back(target);
  }
  return f;
}

} // namespace

TEST(QuasiIsometry, Identity) {
  auto m = shortest_path_metric(build_tessellation_patch(7, 3, 2));
  auto id = identity_map(m);
  EXPECT_TRUE(verify_quasi_isometry(m, id).ok);
  EXPECT_EQ(displacement(m, id, 5), 0);
  EXPECT_TRUE(fixes_proxy_boundary(m, id, {0, 1, 2}, 0));
  EXPECT_EQ(fit_map_constant(m, id, Rational(1)), Rational(0));
}

TEST(QuasiIsometry, ConstantMapOnPath) {
  auto m = shortest_path_metric(build_control(ControlKind::path, 3));
  auto f = constant_map(m, 1);
  // d(0,2) = 2 collapses to 0: needs 2/lambda - c <= 0
  EXPECT_EQ(fit_map_constant(m, f, Rational(1)), Rational(2));
  EXPECT_EQ(fit_map_constant(m, f, Rational(2)), Rational(1));
  f.c = Rational(1);
  EXPECT_FALSE(verify_quasi_isometry(m, f).ok);
  f.c = Rational(2);
  EXPECT_TRUE(verify_quasi_isometry(m, f).ok);
  EXPECT_FALSE(fixes_proxy_boundary(m, f, {0, 2}, 0));
  EXPECT_TRUE(fixes_proxy_boundary(m, f, {0, 2}, 1));
}

TEST(QuasiIsometry, TotalityErrors) {
  auto m = shortest_path_metric(build_control(ControlKind::path, 3));
  QuasiIsometryMap f;
  f.domain = {0, 1};
  f.image = {0};
  EXPECT_THROW(f.check_total(m), InputError);
  f.image = {0, 9};
  EXPECT_THROW(f.check_total(m), InputError);
  auto id = identity_map(m);
  EXPECT_THROW(id(7), InputError);
}

TEST(CenterShift, DesignConstants) {
  GeodesicSpace ball(build_tree_ball(3, 10));
  const auto& m = ball.metric();
  const auto leaves = outer_sphere(m, 0);
  EXPECT_EQ(leaves.size(), 3u * 512u);
  for (auto [lambda, c] : std::vector<std::pair<int, int>>{{4, 2}, {2, 2}, {3, 2}, {2, 4}, {1, 2}, {4, 1}}) {
    auto f = ball_center_shift(ball, 0, lambda, c);
    EXPECT_EQ(f.lambda, Rational(lambda));
    EXPECT_EQ(f.c, Rational(c));
    EXPECT_TRUE(verify_quasi_isometry(m, f).ok) << lambda << "," << c;
    EXPECT_EQ(2 * displacement(m, f, 0), lambda * c);
    EXPECT_TRUE(fixes_proxy_boundary(m, f, leaves, 0));
    EXPECT_LE(fit_map_constant(m, f, Rational(lambda)), Rational(c));
    EXPECT_LE(displacement(m, f, 0), prop1_bound(lambda, c, ball_radius(m, 0)));
    for (PointId x = 0; x < m.size(); ++x)
      if (m(0, x) >= lambda * c) EXPECT_EQ(f(x), x);
  }
}

TEST(CenterShift, DistancesNeverStretchedMoreThanLambda) {
  GeodesicSpace ball(build_tree_ball(3, 9));
  const auto& m = ball.metric();
  auto f = ball_center_shift(ball, 0, 4, 2);
  for (PointId x = 0; x < m.size(); ++x)
    for (PointId y = x + 1; y < m.size(); ++y) EXPECT_LE(m(f(x), f(y)), 4 * m(x, y));
}

TEST(CenterShift, TrivialConstants) {
  GeodesicSpace ball(build_tree_ball(3, 4));
  auto f = ball_center_shift(ball, 0, 1, 0);
  EXPECT_EQ(f.image, identity_map(ball.metric()).image);
}

TEST(CenterShift, Preconditions) {
  GeodesicSpace ball(build_tree_ball(3, 10));
  EXPECT_THROW(ball_center_shift(ball, 0, 6, 2), ConstructionError);
  EXPECT_THROW(ball_center_shift(ball, 0, 3, 1), ConstructionError);
  EXPECT_THROW(ball_center_shift(ball, 0, 0, 2), ConstructionError);
  GeodesicSpace cycle(build_control(ControlKind::cycle, 30));
  EXPECT_THROW(ball_center_shift(cycle, 0, 2, 2), ConstructionError);
  GeodesicSpace just_enough(build_tree_ball(3, 9));
  EXPECT_NO_THROW(ball_center_shift(just_enough, 0, 4, 2));
  GeodesicSpace too_small(build_tree_ball(3, 8));
  EXPECT_THROW(ball_center_shift(too_small, 0, 4, 2), ConstructionError);
}
