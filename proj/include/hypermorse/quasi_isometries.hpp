#pragma once

#include "hypermorse/graph_spaces.hpp"
#include "hypermorse/quasi_geodesics.hpp"
#include "hypermorse/rational.hpp"

#include <vector>

namespace hypermorse {

/// Self-map of a finite space, total on `domain`; image[i] is the image of domain[i].
struct QuasiIsometryMap {
  std::vector<PointId> domain;
  std::vector<PointId> image;
  Rational lambda{1};
  Rational c{0};

  /// Throws InputError when the map is not total on its domain or leaves the space.
  void check_total(const FiniteMetricSpace& space) const;
  PointId operator()(PointId x) const;
};

QuasiIsometryMap identity_map(const FiniteMetricSpace& space);

/// Exhaustive pairwise check of the (lambda, c) sandwich over the domain.
SandwichCheck verify_quasi_isometry(const FiniteMetricSpace& space, const QuasiIsometryMap& map);

/// Least additive constant making the map a (lambda, c)-quasi-isometry for the given lambda.
Rational fit_map_constant(const FiniteMetricSpace& space, const QuasiIsometryMap& map, const Rational& lambda);

/// Rooted radius of a tree ball: max distance from the center.
Distance ball_radius(const FiniteMetricSpace& space, PointId center);

/// Self-map of a tree ball moving the center lambda*c/2 toward its lowest-index
/// descendant chain while fixing everything at distance >= lambda*c from the center.
/// Inside that inner ball, each segment [a, a'] (a on the inner sphere, a' its
/// projection on [O, f(O)]) is stretched linearly onto [a, f(O)], rounding toward a.
/// Requires a tree, ball radius > lambda*c and lambda*c even.
QuasiIsometryMap ball_center_shift(const GeodesicSpace& tree_ball, PointId center, int lambda, int c);

/// dist(x, f(x))
Distance displacement(const FiniteMetricSpace& space, const QuasiIsometryMap& map, PointId x);

/// True iff every boundary point moves at most `tolerance`.
bool fixes_proxy_boundary(const FiniteMetricSpace& space, const QuasiIsometryMap& map,
                          const std::vector<PointId>& boundary, Distance tolerance);

/// Points at maximal distance from the center (the leaves of a full tree ball).
std::vector<PointId> outer_sphere(const FiniteMetricSpace& space, PointId center);

} // namespace hypermorse
