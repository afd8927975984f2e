#pragma once

#include "hypermorse/half_integer.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hypermorse {

using PointId = std::uint32_t;
using Distance = std::int32_t;

/// Finite metric space with an exact integer distance table (row-major n x n).
class FiniteMetricSpace {
public:
  FiniteMetricSpace() = default;

  /// Takes ownership of a row-major table. Checks shape, symmetry and the
  /// identity axiom; the O(n^3) triangle check is left to validate().
  FiniteMetricSpace(std::size_t n, std::vector<Distance> table);

  std::size_t size() const { return n_; }

  /// Bounds-checked distance.
  Distance distance(PointId x, PointId y) const;

  /// Unchecked distance for inner loops.
  Distance operator()(PointId x, PointId y) const { return table_[std::size_t(x) * n_ + y]; }

  std::span<const Distance> row(PointId x) const { return {table_.data() + std::size_t(x) * n_, n_}; }

  void check_point(PointId x) const;

  /// Full axiom check including the triangle inequality. Throws InputError.
  void validate() const;

  Distance diameter() const;

private:
  std::size_t n_ = 0;
  std::vector<Distance> table_;
};

/// (x,y)_p = (|x-p| + |y-p| - |x-y|) / 2.
HalfInteger gromov_product(const FiniteMetricSpace& space, PointId x, PointId y, PointId p);

struct FourPointOptions {
  /// Exhaustive scans are refused above this size unless sampling is requested.
  std::size_t max_exact_points = 150;
  /// When nonzero and the space exceeds max_exact_points, scan this many random
  /// quadruples instead; the result is then a lower bound on the true value.
  std::size_t sampled_quadruples = 0;
  std::uint64_t seed = 1;
};

/// Least delta >= 0 with (x,z)_p >= min{(x,y)_p, (y,z)_p} - delta for all p,x,y,z.
HalfInteger four_point_delta(const FiniteMetricSpace& space, const FourPointOptions& options = {});

/// Point sequence of a geodesic; consecutive points at distance 1.
using GeodesicProvider = std::function<std::vector<PointId>(PointId, PointId)>;

struct ThinTriangleOptions {
  /// All ordered triples are scanned up to this many points; above it, random triples.
  std::size_t exhaustive_max_points = 40;
  std::size_t sampled_triangles = 20000;
  std::uint64_t seed = 1;
};

/// Max over triangles (x,y,z) and points p on the provided geodesic xy of
/// d(p, xz u yz). With one geodesic per pair this bounds the all-geodesics
/// constant from below.
Distance thin_triangle_delta(const FiniteMetricSpace& space, const GeodesicProvider& geodesic,
                             const ThinTriangleOptions& options = {});

/// e^{-(xi|eta)_p}
double visual_distance(const FiniteMetricSpace& space, PointId xi, PointId eta, PointId p);

/// min over s in segment of d(x, s); segment must be nonempty.
Distance distance_to_set(const FiniteMetricSpace& space, PointId x, std::span<const PointId> segment);

} // namespace hypermorse
