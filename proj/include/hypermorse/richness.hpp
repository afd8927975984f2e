#pragma once

#include "hypermorse/graph_spaces.hpp"

#include <cstdint>
#include <vector>

namespace hypermorse {

/// Geodesics the richness conditions may choose from.
struct GeodesicPool {
  std::vector<GeodesicSegment> geodesics;
  /// distance_to[g][v] = d(v, geodesics[g])
  std::vector<std::vector<Distance>> distance_to;

  std::size_t size() const { return geodesics.size(); }
};

/// Canonical geodesics between all unordered pairs of distinct endpoints.
GeodesicPool build_pool(const GeodesicSpace& space, const std::vector<PointId>& endpoints);

/// Degree-one vertices, or every vertex when there are fewer than two of them.
std::vector<PointId> default_pool_endpoints(const Graph& g);

struct AlignmentRecord {
  PointId p = 0;
  PointId q = 0;
  std::size_t geodesic = 0; // index into the pool
  Distance near = 0;        // d(p, gamma)
  Distance offset = 0;      // | d(q, gamma) - |q - p| |
};

struct CrossingRecord {
  std::size_t geodesic = 0; // gamma
  PointId p = 0;
  std::size_t witness = 0; // gamma'
  Distance near = 0;       // d(p, gamma')
  Distance offset = 0;     // | d(p, gamma) - d(gamma', gamma) |
};

struct SamplingOptions {
  std::size_t max_exhaustive = 10'000;
  std::size_t samples = 10'000;
  std::uint64_t seed = 1;
};

/// For every ordered pair with |p - q| >= r0, the pool geodesic minimizing
/// max(d(p, gamma), |d(q, gamma) - |q - p||) (ties: smaller sum, then lower index).
std::vector<AlignmentRecord> check_condition1(const FiniteMetricSpace& space, const GeodesicPool& pool, double r0,
                                              const SamplingOptions& sampling = {});

/// For every (gamma, p), the pool geodesic gamma' minimizing
/// max(d(p, gamma'), |d(p, gamma) - d(gamma', gamma)|).
std::vector<CrossingRecord> check_condition2(const FiniteMetricSpace& space, const GeodesicPool& pool,
                                             const SamplingOptions& sampling = {});

struct RichnessOptions {
  double r0 = 1.0;
  /// Thresholds: condition 1 uses strict '<', condition 2 uses '<='.
  double r1 = 3.0;
  double r2 = 3.0;
  double r3 = 3.0;
  double r4 = 3.0;
  /// Empty means default_pool_endpoints.
  std::vector<PointId> endpoints;
  /// When nonzero, keep at most this many endpoints (seeded sample).
  std::size_t max_endpoints = 0;
  SamplingOptions sampling;
};

struct RichnessReport {
  RichnessOptions options;
  std::vector<PointId> endpoints;
  std::size_t pool_size = 0;
  std::vector<AlignmentRecord> condition1;
  std::vector<CrossingRecord> condition2;
  /// Maxima of the chosen residuals (the least constants under a '<=' reading).
  Distance fitted_r1 = 0;
  Distance fitted_r2 = 0;
  Distance fitted_r3 = 0;
  Distance fitted_r4 = 0;
  /// Indices into condition1 / condition2 of records exceeding the thresholds.
  std::vector<std::size_t> condition1_violations;
  std::vector<std::size_t> condition2_violations;

  bool rich() const { return condition1_violations.empty() && condition2_violations.empty(); }
};

RichnessReport check_richness(const GeodesicSpace& space, const RichnessOptions& options = {});

} // namespace hypermorse
