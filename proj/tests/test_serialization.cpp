#include "hypermorse/errors.hpp"
#include "hypermorse/serialization.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace hypermorse;
using nlohmann::json;

TEST(RationalJson, RoundTrip) {
  EXPECT_EQ(to_json(Rational(3)), json(3));
  EXPECT_EQ(to_json(Rational(3, 4)), json("3/4"));
  EXPECT_EQ(rational_from_json(json("3/4")), Rational(3, 4));
  EXPECT_EQ(rational_from_json(json(5)), Rational(5));
  EXPECT_EQ(rational_from_json(json(1.5)), Rational(3, 2));
  EXPECT_THROW(rational_from_json(json::array()), InputError);
}

TEST(QuasiGeodesicJson, RoundTrip) {
  QuasiGeodesic qg;
  qg.params = {0, 2, 3};
  qg.points = {4, 5, 6};
  qg.lambda = Rational(3, 2);
  qg.c = Rational(1);
  auto back = quasi_geodesic_from_json(to_json(qg));
  EXPECT_EQ(back.params, qg.params);
  EXPECT_EQ(back.points, qg.points);
  EXPECT_EQ(back.lambda, qg.lambda);
  EXPECT_EQ(back.c, qg.c);
  EXPECT_THROW(quasi_geodesic_from_json(json{{"points", {1, 2}}}), InputError);
  EXPECT_THROW(read_quasi_geodesic_file("/nonexistent.json"), InputError);
}

TEST(MapJson, RoundTrip) {
  QuasiIsometryMap f;
  f.domain = {0, 1, 2};
  f.image = {1, 1, 2};
  f.lambda = Rational(2);
  f.c = Rational(1, 2);
  auto j = to_json(f);
  EXPECT_EQ(j["map"][0], json({0, 1}));
  auto back = quasi_isometry_from_json(j);
  EXPECT_EQ(back.domain, f.domain);
  EXPECT_EQ(back.image, f.image);
  EXPECT_EQ(back.c, f.c);
}

TEST(RichnessJson, VerdictAndCsv) {
  GeodesicSpace path(build_control(ControlKind::path, 8));
  auto report = check_richness(path);
  auto j = to_json(report);
  EXPECT_EQ(j["verdict"], "not-rich");
  EXPECT_FALSE(j["condition1_violations"].empty());
  std::ostringstream csv;
  write_richness_csv(csv, report);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "r0,r1,r2,r3,r4,pool,pairs,points,verdict");
  EXPECT_NE(csv.str().find("not-rich"), std::string::npos);
}
