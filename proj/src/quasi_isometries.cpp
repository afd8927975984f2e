#include "hypermorse/quasi_isometries.hpp"

#include "hypermorse/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hypermorse {

void QuasiIsometryMap::check_total(const FiniteMetricSpace& space) const {
  if (domain.size() != image.size())
    throw InputError("map is partial: " + std::to_string(domain.size()) + " domain points but " +
                     std::to_string(image.size()) + " images");
  for (PointId x : domain) space.check_point(x);
  for (PointId y : image) space.check_point(y);
  std::vector<PointId> sorted = domain;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("map lists a domain point twice");
  if (lambda < Rational(1)) throw InputError("map lambda must be >= 1");
  if (c < Rational(0)) throw InputError("map c must be >= 0");
}

PointId QuasiIsometryMap::operator()(PointId x) const {
  auto it = std::find(domain.begin(), domain.end(), x);
  if (it == domain.end()) throw InputError("point " + std::to_string(x) + " is outside the map's domain");
  return image[static_cast<std::size_t>(it - domain.begin())];
}

QuasiIsometryMap identity_map(const FiniteMetricSpace& space) {
  QuasiIsometryMap m;
  m.domain.resize(space.size());
  std::iota(m.domain.begin(), m.domain.end(), PointId{0});
  m.image = m.domain;
  return m;
}

SandwichCheck verify_quasi_isometry(const FiniteMetricSpace& space, const QuasiIsometryMap& map) {
  map.check_total(space);
  const Sandwich sandwich(map.lambda, map.c);
  const std::size_t n = map.domain.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!sandwich.holds(space(map.domain[i], map.domain[j]), space(map.image[i], map.image[j])))
        return SandwichCheck{false, std::pair{i, j}};
  return {};
}

Rational fit_map_constant(const FiniteMetricSpace& space, const QuasiIsometryMap& map, const Rational& lambda) {
  map.check_total(space);
  if (lambda < Rational(1)) throw InputError("lambda must be >= 1");
  const __int128 a = lambda.num(), b = lambda.den();
  __int128 best = 0;
  const std::size_t n = map.domain.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const __int128 gap = space(map.domain[i], map.domain[j]);
      const __int128 d = space(map.image[i], map.image[j]);
      best = std::max(best, gap * b * b - d * a * b);
      best = std::max(best, d * a * b - gap * a * a);
    }
  // best / (a b), reduced by the Rational constructor.
  return Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(a * b));
}

Distance ball_radius(const FiniteMetricSpace& space, PointId center) {
  auto row = space.row(center);
  return *std::max_element(row.begin(), row.end());
}

std::vector<PointId> outer_sphere(const FiniteMetricSpace& space, PointId center) {
  space.check_point(center);
  const Distance radius = ball_radius(space, center);
  std::vector<PointId> out;
  for (PointId v = 0; v < space.size(); ++v)
    if (space(center, v) == radius) out.push_back(v);
  return out;
}

QuasiIsometryMap ball_center_shift(const GeodesicSpace& tree_ball, PointId center, int lambda, int c) {
  const auto& metric = tree_ball.metric();
  const Graph& g = tree_ball.graph();
  metric.check_point(center);
  if (lambda < 1 || c < 0) throw ConstructionError("center shift needs lambda >= 1 and c >= 0");
  if (!g.is_tree()) throw ConstructionError("center shift needs a tree");
  const Distance inner = lambda * c;
  if (inner % 2 != 0) throw ConstructionError("center shift needs lambda*c even");
  const Distance radius = ball_radius(metric, center);
  if (!(radius > inner))
    throw ConstructionError("center shift needs ball radius " + std::to_string(radius) + " > lambda*c = " +
                            std::to_string(inner));
  const Distance shift = inner / 2;

  // Parents toward the center.
  const std::size_t n = g.vertex_count();
  std::vector<PointId> parent(n, center);
  for (PointId v = 0; v < n; ++v)
    if (v != center)
      for (PointId w : g.neighbors(v))
        if (metric(w, center) + 1 == metric(v, center)) {
          parent[v] = w;
          break;
        }
  auto ancestor_at_depth = [&](PointId v, Distance depth) {
    while (metric(v, center) > depth) v = parent[v];
    return v;
  };

  // Spine [O, f(O)]: follow the lowest-index child.
  std::vector<PointId> spine{center};
  while (static_cast<Distance>(spine.size()) <= shift) {
    const PointId cur = spine.back();
    PointId next = cur;
    for (PointId w : g.neighbors(cur))
      if (metric(w, center) == metric(cur, center) + 1) {
        next = w;
        break;
      }
    spine.push_back(next);
  }
  const PointId target = spine.back();

  QuasiIsometryMap map;
  map.lambda = Rational(lambda);
  map.c = Rational(c);
  map.domain.resize(n);
  std::iota(map.domain.begin(), map.domain.end(), PointId{0});
  map.image = map.domain;
  for (PointId v = 0; v < n; ++v) {
    const Distance depth = metric(center, v);
    if (depth >= inner) continue;
    // Depth of the branch point of v on the spine.
    const Distance k = (depth + shift - metric(v, target)) / 2;
    const Distance from_a = inner - depth;              // |a - v| for any a on the inner sphere below v
    const Distance source_len = inner - k;               // |a - a'|
    const Distance target_len = (inner - k) + (shift - k); // |a - f(O)|
    const Distance reach = static_cast<Distance>(std::int64_t(from_a) * target_len / source_len);
    if (reach <= source_len)
      map.image[v] = ancestor_at_depth(v, inner - reach);
    else
      map.image[v] = spine[static_cast<std::size_t>(k + (reach - source_len))];
  }
  return map;
}

Distance displacement(const FiniteMetricSpace& space, const QuasiIsometryMap& map, PointId x) {
  space.check_point(x);
  return space(x, map(x));
}

bool fixes_proxy_boundary(const FiniteMetricSpace& space, const QuasiIsometryMap& map,
                          const std::vector<PointId>& boundary, Distance tolerance) {
  map.check_total(space);
  for (PointId b : boundary)
    if (space(b, map(b)) > tolerance) return false;
  return true;
}

} // namespace hypermorse
