#include "hypermorse/metric_core.hpp"

#include "hypermorse/errors.hpp"
#include "hypermorse/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <string>

namespace hypermorse {

FiniteMetricSpace::FiniteMetricSpace(std::size_t n, std::vector<Distance> table)
    : n_(n), table_(std::move(table)) {
  if (table_.size() != n_ * n_)
    throw InputError("distance table has " + std::to_string(table_.size()) + " entries, expected " +
                     std::to_string(n_ * n_));
  for (std::size_t i = 0; i < n_; ++i) {
    if (table_[i * n_ + i] != 0) throw InputError("nonzero diagonal at " + std::to_string(i));
    for (std::size_t j = i + 1; j < n_; ++j) {
      Distance d = table_[i * n_ + j];
      if (d != table_[j * n_ + i])
        throw InputError("asymmetric distance at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (d <= 0)
        throw InputError("non-positive distance between distinct points (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
    }
  }
}

void FiniteMetricSpace::check_point(PointId x) const {
  if (x >= n_)
    throw InputError("point id " + std::to_string(x) + " out of range for space of size " + std::to_string(n_));
}

Distance FiniteMetricSpace::distance(PointId x, PointId y) const {
  check_point(x);
  check_point(y);
  return (*this)(x, y);
}

void FiniteMetricSpace::validate() const {
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y) {
      Distance dxy = table_[x * n_ + y];
      for (std::size_t z = 0; z < n_; ++z)
        if (table_[x * n_ + z] > dxy + table_[y * n_ + z])
          throw InputError("triangle inequality fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                           std::to_string(z) + ")");
    }
}

Distance FiniteMetricSpace::diameter() const {
  return table_.empty() ? 0 : *std::max_element(table_.begin(), table_.end());
}

HalfInteger gromov_product(const FiniteMetricSpace& space, PointId x, PointId y, PointId p) {
  return HalfInteger::from_doubled(std::int64_t(space.distance(x, p)) + space.distance(y, p) - space.distance(x, y));
}

namespace {

// Twice the four-point defect of {a,b,c,d}: largest pair-sum minus the second largest.
inline std::int64_t doubled_defect(const FiniteMetricSpace& s, PointId a, PointId b, PointId c, PointId d) {
  std::int64_t s1 = s(a, b) + s(c, d);
  std::int64_t s2 = s(a, c) + s(b, d);
  std::int64_t s3 = s(a, d) + s(b, c);
  if (s1 < s2) std::swap(s1, s2);
  if (s2 < s3) std::swap(s2, s3);
  if (s1 < s2) std::swap(s1, s2);
  return s1 - s2;
}

} // namespace

HalfInteger four_point_delta(const FiniteMetricSpace& space, const FourPointOptions& options) {
  const std::size_t n = space.size();
  if (n < 4) return HalfInteger{};

  if (n > options.max_exact_points) {
    if (options.sampled_quadruples == 0)
      throw InputError("four-point scan refused: " + std::to_string(n) + " points exceeds the exhaustive limit of " +
                       std::to_string(options.max_exact_points) + " (raise the limit or request sampling)");
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<PointId> pick(0, static_cast<PointId>(n - 1));
    std::int64_t best = 0;
    for (std::size_t t = 0; t < options.sampled_quadruples; ++t)
      best = std::max(best, doubled_defect(space, pick(rng), pick(rng), pick(rng), pick(rng)));
    return HalfInteger::from_doubled(best);
  }

  std::vector<std::int64_t> row_best(n, 0);
  parallel_for(n, [&](std::size_t i) {
    std::int64_t best = 0;
    const auto a = static_cast<PointId>(i);
    for (PointId b = a + 1; b < n; ++b)
      for (PointId c = b + 1; c < n; ++c) {
        const std::int64_t ab = space(a, b), ac = space(a, c), bc = space(b, c);
        for (PointId d = c + 1; d < n; ++d) {
          std::int64_t s1 = ab + space(c, d);
          std::int64_t s2 = ac + space(b, d);
          std::int64_t s3 = space(a, d) + bc;
          if (s1 < s2) std::swap(s1, s2);
          if (s2 < s3) std::swap(s2, s3);
          if (s1 < s2) std::swap(s1, s2);
          if (s1 - s2 > best) best = s1 - s2;
        }
      }
    row_best[i] = best;
  });
  return HalfInteger::from_doubled(*std::max_element(row_best.begin(), row_best.end()));
}

Distance distance_to_set(const FiniteMetricSpace& space, PointId x, std::span<const PointId> segment) {
  if (segment.empty()) throw InputError("distance to an empty point set");
  Distance best = space(x, segment.front());
  for (PointId s : segment) best = std::min(best, space(x, s));
  return best;
}

namespace {

Distance triangle_defect(const FiniteMetricSpace& space, const GeodesicProvider& geodesic, PointId x, PointId y,
                         PointId z) {
  const auto xy = geodesic(x, y);
  const auto xz = geodesic(x, z);
  const auto yz = geodesic(y, z);
  Distance worst = 0;
  for (PointId p : xy) {
    Distance d = std::min(distance_to_set(space, p, xz), distance_to_set(space, p, yz));
    worst = std::max(worst, d);
  }
  return worst;
}

} // namespace

Distance thin_triangle_delta(const FiniteMetricSpace& space, const GeodesicProvider& geodesic,
                             const ThinTriangleOptions& options) {
  const std::size_t n = space.size();
  if (n < 3) return 0;
  Distance worst = 0;
  if (n <= options.exhaustive_max_points) {
    for (PointId x = 0; x < n; ++x)
      for (PointId y = 0; y < n; ++y) {
        if (y == x) continue;
        for (PointId z = 0; z < n; ++z)
          if (z != x && z != y) worst = std::max(worst, triangle_defect(space, geodesic, x, y, z));
      }
    return worst;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<PointId> pick(0, static_cast<PointId>(n - 1));
  for (std::size_t t = 0; t < options.sampled_triangles; ++t) {
    PointId x = pick(rng), y = pick(rng), z = pick(rng);
    if (x == y || y == z || x == z) continue;
    worst = std::max(worst, triangle_defect(space, geodesic, x, y, z));
  }
  return worst;
}

double visual_distance(const FiniteMetricSpace& space, PointId xi, PointId eta, PointId p) {
  return std::exp(-gromov_product(space, xi, eta, p).to_double());
}

} // namespace hypermorse
