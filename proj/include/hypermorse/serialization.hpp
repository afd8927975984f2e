#pragma once

#include "hypermorse/quasi_geodesics.hpp"
#include "hypermorse/quasi_isometries.hpp"
#include "hypermorse/richness.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace hypermorse {

/// Integers serialize as JSON numbers, other rationals as "num/den" strings.
nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

/// {"params": [...], "points": [...], "lambda": ..., "c": ...}
nlohmann::json to_json(const QuasiGeodesic& qg);
QuasiGeodesic quasi_geodesic_from_json(const nlohmann::json& j);
QuasiGeodesic read_quasi_geodesic_file(const std::string& path);

/// {"lambda": ..., "c": ..., "map": [[x, f(x)], ...]}
nlohmann::json to_json(const QuasiIsometryMap& map);
QuasiIsometryMap quasi_isometry_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GeodesicSegment& sigma);
nlohmann::json to_json(const RichnessReport& report);

/// Header plus one row: r0,r1,r2,r3,r4,pool,pairs,points,verdict
void write_richness_csv(std::ostream& out, const RichnessReport& report);

} // namespace hypermorse
