#pragma once

#include "hypermorse/graph_spaces.hpp"
#include "hypermorse/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hypermorse {

/// Finitely sampled curve t -> points with a claimed (lambda, c) certificate.
/// Parameters are strictly increasing integers.
struct QuasiGeodesic {
  std::vector<std::int64_t> params;
  std::vector<PointId> points;
  Rational lambda{1};
  Rational c{0};

  std::size_t size() const { return points.size(); }
  std::int64_t parameter_length() const { return params.empty() ? 0 : params.back() - params.front(); }

  /// Throws InputError on empty curves, length mismatch, or non-increasing params.
  void check_shape() const;
};

/// Outcome of a pairwise (lambda, c) sandwich check.
struct SandwichCheck {
  bool ok = true;
  /// Lexicographically first failing (i, j), i < j.
  std::optional<std::pair<std::size_t, std::size_t>> first_violation;

  explicit operator bool() const { return ok; }
};

/// Integer form of gap/lambda - c <= d <= lambda*gap + c for a fixed certificate.
class Sandwich {
public:
  Sandwich(const Rational& lambda, const Rational& c);
  bool holds(std::int64_t gap, std::int64_t distance) const;

private:
  std::int64_t a_, b_, e_, f_; // lambda = a/b, c = e/f
};

SandwichCheck verify_quasi_geodesic(const FiniteMetricSpace& space, const QuasiGeodesic& qg);

/// Least c >= 0 for which the samples form a (lambda, c)-quasi-geodesic.
Rational fit_qi_constants(const FiniteMetricSpace& space, const std::vector<std::int64_t>& params,
                          const std::vector<PointId>& points, const Rational& lambda);

/// Sum of consecutive sample distances.
std::int64_t classical_length(const FiniteMetricSpace& space, const QuasiGeodesic& qg);

struct DeltaLengthResult {
  std::int64_t value = 0;
  /// Sample indices, first and last included; empty when degenerate.
  std::vector<std::size_t> witness;
  bool degenerate = false;
};

/// Max over index subsequences from the first to the last sample whose consecutive
/// image distances are all >= delta, of the sum of those distances. Among optimal
/// subsequences the one with the most points is returned.
DeltaLengthResult delta_length(const FiniteMetricSpace& space, const QuasiGeodesic& qg, std::int64_t delta);

/// Joins the delta-length witness points with canonical geodesics, parameterized
/// affinely over the original witness parameters, certified at (lambda, 12*delta + 3c).
QuasiGeodesic taut_replacement(const GeodesicSpace& space, const QuasiGeodesic& qg, std::int64_t delta);

/// Finds the lowest-index pair (a, b) at distance `length` in a tree.
std::pair<PointId, PointId> find_segment_endpoints(const GeodesicSpace& tree, std::int64_t length);

/// Back-and-forth curve over [0, lambda*c]: the image runs out from a along a
/// segment [a, b] of length lambda^2 c / 2 at speed lambda and returns.
/// Requires integer lambda >= 1, c >= 1, lambda*c even, and a tree.
QuasiGeodesic extremal_example(int lambda, int c, const GeodesicSpace& tree);

/// Checks that sigma joins the curve's endpoint images (either orientation).
void check_endpoints(const QuasiGeodesic& qg, const GeodesicSegment& sigma);

/// max over curve samples of the distance to sigma.
Distance morse_distance(const FiniteMetricSpace& space, const QuasiGeodesic& qg, const GeodesicSegment& sigma);

/// max over sigma's points of the distance to the curve's samples.
Distance anti_morse_distance(const FiniteMetricSpace& space, const QuasiGeodesic& qg, const GeodesicSegment& sigma);

struct RandomQuasiGeodesicOptions {
  /// Chance, per step along the geodesic, of a stride longer than one.
  double stride_probability = 0.3;
  /// Chance of a dwell step (same point again); only used when 1/lambda <= c.
  double dwell_probability = 0.1;
  /// Chance of a detour away from the geodesic and back.
  double detour_probability = 0.2;
  int attempts = 8;
};

/// Perturbs the canonical geodesic between the endpoints with strides, dwells and
/// out-and-back detours, keeping only perturbations that pass verification.
/// Perturbations shrink on each failed attempt; the last attempt is unperturbed.
QuasiGeodesic random_quasi_geodesic(const GeodesicSpace& space, PointId from, PointId to, const Rational& lambda,
                                    const Rational& c, std::uint64_t seed,
                                    const RandomQuasiGeodesicOptions& options = {});

/// Arc of a cycle (e.g. a tessellation ring) sampled at unit steps.
QuasiGeodesic cycle_arc(const std::vector<PointId>& cycle, std::size_t start, std::size_t steps,
                        const Rational& lambda, const Rational& c);

struct StaircaseResult {
  QuasiGeodesic curve;
  GeodesicSegment geodesic;
  Distance anti_morse = 0;
};

/// Searches arcs of the given boundary cycle of a layered patch (a staircase
/// around the patch) for the one that verifies at (lambda, c) and keeps its
/// canonical geodesic farthest away. start_stride thins the start positions.
StaircaseResult widest_staircase(const GeodesicSpace& space, const std::vector<PointId>& cycle,
                                 const Rational& lambda, const Rational& c, std::size_t start_stride = 1);

} // namespace hypermorse
