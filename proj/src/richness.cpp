#include "hypermorse/richness.hpp"

#include "hypermorse/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <random>

namespace hypermorse {

GeodesicPool build_pool(const GeodesicSpace& space, const std::vector<PointId>& endpoints) {
  const auto& metric = space.metric();
  GeodesicPool pool;
  for (std::size_t i = 0; i < endpoints.size(); ++i)
    for (std::size_t j = i + 1; j < endpoints.size(); ++j)
      if (endpoints[i] != endpoints[j]) pool.geodesics.push_back(space.geodesic(endpoints[i], endpoints[j]));
  pool.distance_to.reserve(pool.geodesics.size());
  for (const auto& g : pool.geodesics) {
    std::vector<Distance> row(metric.size());
    for (PointId v = 0; v < metric.size(); ++v) row[v] = distance_to_set(metric, v, g.points);
    pool.distance_to.push_back(std::move(row));
  }
  return pool;
}

std::vector<PointId> default_pool_endpoints(const Graph& g) {
  std::vector<PointId> leaves;
  for (PointId v = 0; v < g.vertex_count(); ++v)
    if (g.neighbors(v).size() == 1) leaves.push_back(v);
  if (leaves.size() >= 2) return leaves;
  std::vector<PointId> all(g.vertex_count());
  for (PointId v = 0; v < all.size(); ++v) all[v] = v;
  return all;
}

namespace {

template <typename Emit>
void for_each_index_pair(std::size_t rows, std::size_t cols, const SamplingOptions& sampling, Emit&& emit) {
  if (rows * cols <= sampling.max_exhaustive) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) emit(r, c);
    return;
  }
  std::mt19937_64 rng(sampling.seed);
  std::uniform_int_distribution<std::size_t> pr(0, rows - 1), pc(0, cols - 1);
  for (std::size_t t = 0; t < sampling.samples; ++t) {
    const std::size_t r = pr(rng);
    const std::size_t c = pc(rng);
    emit(r, c);
  }
}

// Lexicographic key: max residual, then sum.
struct Score {
  Distance worst = std::numeric_limits<Distance>::max();
  Distance sum = std::numeric_limits<Distance>::max();
  bool operator<(const Score& o) const { return worst != o.worst ? worst < o.worst : sum < o.sum; }
};

} // namespace

std::vector<AlignmentRecord> check_condition1(const FiniteMetricSpace& space, const GeodesicPool& pool, double r0,
                                              const SamplingOptions& sampling) {
  if (pool.size() == 0) throw InputError("richness check needs a nonempty geodesic pool");
  const std::size_t n = space.size();
  std::vector<AlignmentRecord> out;
  for_each_index_pair(n, n, sampling, [&](std::size_t pi, std::size_t qi) {
    const auto p = static_cast<PointId>(pi), q = static_cast<PointId>(qi);
    const Distance pq = space(p, q);
    if (p == q || static_cast<double>(pq) < r0) return;
    AlignmentRecord best{p, q, 0, 0, 0};
    Score best_score;
    for (std::size_t g = 0; g < pool.size(); ++g) {
      const Distance near = pool.distance_to[g][p];
      const Distance offset = std::abs(pool.distance_to[g][q] - pq);
      const Score s{std::max(near, offset), near + offset};
      if (s < best_score) {
        best_score = s;
        best = {p, q, g, near, offset};
      }
    }
    out.push_back(best);
  });
  return out;
}

std::vector<CrossingRecord> check_condition2(const FiniteMetricSpace& space, const GeodesicPool& pool,
                                             const SamplingOptions& sampling) {
  if (pool.size() == 0) throw InputError("richness check needs a nonempty geodesic pool");
  const std::size_t count = pool.size();
  // gap[a][b] = d(geodesic a, geodesic b)
  std::vector<Distance> gap(count * count);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      Distance best = std::numeric_limits<Distance>::max();
      for (PointId v : pool.geodesics[b].points) best = std::min(best, pool.distance_to[a][v]);
      gap[a * count + b] = best;
    }
  std::vector<CrossingRecord> out;
  for_each_index_pair(count, space.size(), sampling, [&](std::size_t g, std::size_t pi) {
    const auto p = static_cast<PointId>(pi);
    const Distance to_gamma = pool.distance_to[g][p];
    CrossingRecord best{g, p, 0, 0, 0};
    Score best_score;
    for (std::size_t w = 0; w < count; ++w) {
      const Distance near = pool.distance_to[w][p];
      const Distance offset = std::abs(to_gamma - gap[g * count + w]);
      const Score s{std::max(near, offset), near + offset};
      if (s < best_score) {
        best_score = s;
        best = {g, p, w, near, offset};
      }
    }
    out.push_back(best);
  });
  return out;
}

RichnessReport check_richness(const GeodesicSpace& space, const RichnessOptions& options) {
  RichnessReport report;
  report.options = options;
  report.endpoints = options.endpoints.empty() ? default_pool_endpoints(space.graph()) : options.endpoints;
  for (PointId e : report.endpoints) space.metric().check_point(e);
  if (options.max_endpoints > 0 && report.endpoints.size() > options.max_endpoints) {
    std::mt19937_64 rng(options.sampling.seed);
    std::shuffle(report.endpoints.begin(), report.endpoints.end(), rng);
    report.endpoints.resize(options.max_endpoints);
    std::sort(report.endpoints.begin(), report.endpoints.end());
  }
  const auto pool = build_pool(space, report.endpoints);
  if (pool.size() == 0) throw InputError("richness check needs a nonempty geodesic pool");
  report.pool_size = pool.size();
  report.condition1 = check_condition1(space.metric(), pool, options.r0, options.sampling);
  report.condition2 = check_condition2(space.metric(), pool, options.sampling);

  for (std::size_t i = 0; i < report.condition1.size(); ++i) {
    const auto& r = report.condition1[i];
    report.fitted_r1 = std::max(report.fitted_r1, r.near);
    report.fitted_r2 = std::max(report.fitted_r2, r.offset);
    if (!(r.near < options.r1) || !(r.offset < options.r2)) report.condition1_violations.push_back(i);
  }
  for (std::size_t i = 0; i < report.condition2.size(); ++i) {
    const auto& r = report.condition2[i];
    report.fitted_r3 = std::max(report.fitted_r3, r.near);
    report.fitted_r4 = std::max(report.fitted_r4, r.offset);
    if (r.near > options.r3 || r.offset > options.r4) report.condition2_violations.push_back(i);
  }
  return report;
}

} // namespace hypermorse
