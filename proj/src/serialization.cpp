#include "hypermorse/serialization.hpp"

#include "hypermorse/errors.hpp"

#include <fstream>
#include <ostream>

namespace hypermorse {

using nlohmann::json;

json to_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.to_string();
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_float()) return Rational::parse(j.dump());
  throw InputError("expected a rational (integer, decimal or \"num/den\")");
}

json to_json(const QuasiGeodesic& qg) {
  return json{{"params", qg.params}, {"points", qg.points}, {"lambda", to_json(qg.lambda)}, {"c", to_json(qg.c)}};
}

QuasiGeodesic quasi_geodesic_from_json(const json& j) {
  try {
    QuasiGeodesic qg;
    qg.params = j.at("params").get<std::vector<std::int64_t>>();
    qg.points = j.at("points").get<std::vector<PointId>>();
    qg.lambda = rational_from_json(j.at("lambda"));
    qg.c = rational_from_json(j.at("c"));
    qg.check_shape();
    return qg;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed quasi-geodesic record: ") + e.what());
  }
}

QuasiGeodesic read_quasi_geodesic_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open curve file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("curve file '" + path + "' is not JSON: " + e.what());
  }
  return quasi_geodesic_from_json(j);
}

json to_json(const QuasiIsometryMap& map) {
  json pairs = json::array();
  for (std::size_t i = 0; i < map.domain.size(); ++i) pairs.push_back({map.domain[i], map.image[i]});
  return json{{"lambda", to_json(map.lambda)}, {"c", to_json(map.c)}, {"map", pairs}};
}

QuasiIsometryMap quasi_isometry_from_json(const json& j) {
  try {
    QuasiIsometryMap map;
    map.lambda = rational_from_json(j.at("lambda"));
    map.c = rational_from_json(j.at("c"));
    for (const auto& pair : j.at("map")) {
      if (!pair.is_array() || pair.size() != 2) throw InputError("map entries must be [x, f(x)] pairs");
      map.domain.push_back(pair[0].get<PointId>());
      map.image.push_back(pair[1].get<PointId>());
    }
    return map;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed map record: ") + e.what());
  }
}

json to_json(const GeodesicSegment& sigma) { return sigma.points; }

json to_json(const RichnessReport& report) {
  json c1 = json::array();
  for (const auto& r : report.condition1)
    c1.push_back({{"p", r.p}, {"q", r.q}, {"geodesic", r.geodesic}, {"r1_residual", r.near}, {"r2_residual", r.offset}});
  json c2 = json::array();
  for (const auto& r : report.condition2)
    c2.push_back(
        {{"geodesic", r.geodesic}, {"p", r.p}, {"witness", r.witness}, {"r3_residual", r.near}, {"r4_residual", r.offset}});
  json v1 = json::array();
  for (std::size_t i : report.condition1_violations) v1.push_back(c1[i]);
  json v2 = json::array();
  for (std::size_t i : report.condition2_violations) v2.push_back(c2[i]);
  const auto& o = report.options;
  return json{
      {"pool", {{"endpoints", report.endpoints}, {"size", report.pool_size}, {"kind", "canonical geodesics between endpoints"}}},
      {"thresholds", {{"r0", o.r0}, {"r1", o.r1}, {"r2", o.r2}, {"r3", o.r3}, {"r4", o.r4}}},
      {"fitted_constants",
       {{"r1", report.fitted_r1}, {"r2", report.fitted_r2}, {"r3", report.fitted_r3}, {"r4", report.fitted_r4}}},
      {"verdict", report.rich() ? "rich-at-constants" : "not-rich"},
      {"condition1_violations", v1},
      {"condition2_violations", v2},
      {"condition1", c1},
      {"condition2", c2},
  };
}

void write_richness_csv(std::ostream& out, const RichnessReport& report) {
  out << "r0,r1,r2,r3,r4,pool,pairs,points,verdict\n";
  out << report.options.r0 << ',' << report.fitted_r1 << ',' << report.fitted_r2 << ',' << report.fitted_r3 << ','
      << report.fitted_r4 << ',' << report.pool_size << ',' << report.condition1.size() << ','
      << report.condition2.size() << ',' << (report.rich() ? "rich-at-constants" : "not-rich") << '\n';
}

} // namespace hypermorse
