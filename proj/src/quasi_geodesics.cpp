#include "hypermorse/quasi_geodesics.hpp"

#include "hypermorse/errors.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>

namespace hypermorse {

void QuasiGeodesic::check_shape() const {
  if (points.empty()) throw InputError("quasi-geodesic has no samples");
  if (params.size() != points.size())
    throw InputError("quasi-geodesic has " + std::to_string(params.size()) + " parameters but " +
                     std::to_string(points.size()) + " points");
  for (std::size_t i = 1; i < params.size(); ++i)
    if (params[i] <= params[i - 1]) throw InputError("quasi-geodesic parameters must be strictly increasing");
  if (lambda < Rational(1)) throw InputError("quasi-geodesic lambda must be >= 1");
  if (c < Rational(0)) throw InputError("quasi-geodesic c must be >= 0");
}

Sandwich::Sandwich(const Rational& lambda, const Rational& c)
    : a_(lambda.num()), b_(lambda.den()), e_(c.num()), f_(c.den()) {
  if (lambda < Rational(1)) throw InputError("lambda must be >= 1");
  if (c < Rational(0)) throw InputError("c must be >= 0");
}

bool Sandwich::holds(std::int64_t gap, std::int64_t distance) const {
  using Wide = __int128;
  // gap*b/a - e/f <= d   <=>  gap*b*f - e*a <= d*a*f
  if (Wide(gap) * b_ * f_ - Wide(e_) * a_ > Wide(distance) * a_ * f_) return false;
  // d <= gap*a/b + e/f   <=>  d*b*f <= gap*a*f + e*b
  return Wide(distance) * b_ * f_ <= Wide(gap) * a_ * f_ + Wide(e_) * b_;
}

SandwichCheck verify_quasi_geodesic(const FiniteMetricSpace& space, const QuasiGeodesic& qg) {
  qg.check_shape();
  for (PointId p : qg.points) space.check_point(p);
  const Sandwich sandwich(qg.lambda, qg.c);
  const std::size_t m = qg.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!sandwich.holds(qg.params[j] - qg.params[i], space(qg.points[i], qg.points[j])))
        return SandwichCheck{false, std::pair{i, j}};
  return {};
}

Rational fit_qi_constants(const FiniteMetricSpace& space, const std::vector<std::int64_t>& params,
                          const std::vector<PointId>& points, const Rational& lambda) {
  QuasiGeodesic shape{params, points, lambda, Rational(0)};
  shape.check_shape();
  for (PointId p : points) space.check_point(p);
  // Residuals are gap/lambda - d and d - lambda*gap; scale both by a*b to stay integral.
  const __int128 a = lambda.num(), b = lambda.den();
  __int128 best = 0; // in units of 1/(a*b)
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const __int128 gap = params[j] - params[i];
      const __int128 d = space(points[i], points[j]);
      best = std::max(best, gap * b * b - d * a * b);
      best = std::max(best, d * a * b - gap * a * a);
    }
  const __int128 den = a * b;
  const __int128 g = [&] {
    __int128 x = best, y = den;
    while (y != 0) {
      __int128 t = x % y;
      x = y;
      y = t;
    }
    return x == 0 ? __int128(1) : x;
  }();
  return Rational(static_cast<std::int64_t>(best / g), static_cast<std::int64_t>(den / g));
}

std::int64_t classical_length(const FiniteMetricSpace& space, const QuasiGeodesic& qg) {
  std::int64_t total = 0;
  for (std::size_t i = 1; i < qg.points.size(); ++i) total += space.distance(qg.points[i - 1], qg.points[i]);
  return total;
}

DeltaLengthResult delta_length(const FiniteMetricSpace& space, const QuasiGeodesic& qg, std::int64_t delta) {
  if (delta < 1) throw InputError("delta-length mesh must be >= 1");
  qg.check_shape();
  const std::size_t m = qg.size();
  if (m < 2) throw InputError("delta-length needs at least two samples");
  for (PointId p : qg.points) space.check_point(p);

  // best[j] = (sum, points) of the best admissible chain from sample 0 to sample j.
  struct Cell {
    std::int64_t sum = -1;
    std::int64_t count = 0;
    std::size_t prev = 0;
  };
  std::vector<Cell> best(m);
  best[0] = {0, 1, 0};
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (best[i].sum < 0) continue;
      const Distance d = space(qg.points[i], qg.points[j]);
      if (d < delta) continue;
      const std::int64_t sum = best[i].sum + d;
      const std::int64_t count = best[i].count + 1;
      if (sum > best[j].sum || (sum == best[j].sum && count > best[j].count)) best[j] = {sum, count, i};
    }

  DeltaLengthResult out;
  if (best[m - 1].sum < 0) {
    out.degenerate = true;
    return out;
  }
  out.value = best[m - 1].sum;
  for (std::size_t k = m - 1;; k = best[k].prev) {
    out.witness.push_back(k);
    if (k == 0) break;
  }
  std::reverse(out.witness.begin(), out.witness.end());
  return out;
}

QuasiGeodesic taut_replacement(const GeodesicSpace& space, const QuasiGeodesic& qg, std::int64_t delta) {
  if (Rational(delta) < qg.c) throw InputError("taut replacement needs delta >= c");
  const auto taut = delta_length(space.metric(), qg, delta);
  if (taut.degenerate) throw InputError("taut replacement of a curve with degenerate delta-length");

  QuasiGeodesic out;
  out.lambda = qg.lambda;
  out.c = Rational(12 * delta) + Rational(3) * qg.c;
  for (std::size_t k = 0; k + 1 < taut.witness.size(); ++k) {
    const std::size_t i = taut.witness[k], j = taut.witness[k + 1];
    const auto seg = space.geodesic(qg.points[i], qg.points[j]);
    const std::int64_t p0 = qg.params[i];
    const std::int64_t span = qg.params[j] - p0;
    const auto len = static_cast<std::int64_t>(seg.length());
    for (std::int64_t t = 0; t < span; ++t) {
      out.params.push_back(p0 + t);
      out.points.push_back(seg.points[static_cast<std::size_t>(t * len / span)]);
    }
  }
  out.params.push_back(qg.params[taut.witness.back()]);
  out.points.push_back(qg.points[taut.witness.back()]);
  return out;
}

std::pair<PointId, PointId> find_segment_endpoints(const GeodesicSpace& tree, std::int64_t length) {
  const auto& metric = tree.metric();
  for (PointId a = 0; a < metric.size(); ++a)
    for (PointId b = 0; b < metric.size(); ++b)
      if (metric(a, b) == length) return {a, b};
  throw ConstructionError("no geodesic segment of length " + std::to_string(length) + " in the tree");
}

QuasiGeodesic extremal_example(int lambda, int c, const GeodesicSpace& tree) {
  if (lambda < 1 || c < 1) throw ConstructionError("extremal example needs lambda >= 1 and c >= 1");
  if ((lambda * c) % 2 != 0) throw ConstructionError("extremal example needs lambda*c even");
  if (!tree.graph().is_tree()) throw ConstructionError("extremal example must live in a tree");
  const std::int64_t span = std::int64_t(lambda) * c;
  const std::int64_t height = std::int64_t(lambda) * lambda * c / 2;
  const auto [a, b] = find_segment_endpoints(tree, height);
  const auto seg = tree.geodesic(a, b);

  QuasiGeodesic qg;
  qg.lambda = Rational(lambda);
  qg.c = Rational(c);
  for (std::int64_t x = 0; x <= span; ++x) {
    const std::int64_t reach = std::int64_t(lambda) * std::min(x, span - x);
    qg.params.push_back(x);
    qg.points.push_back(seg.points[static_cast<std::size_t>(reach)]);
  }
  return qg;
}

void check_endpoints(const QuasiGeodesic& qg, const GeodesicSegment& sigma) {
  qg.check_shape();
  if (sigma.points.empty()) throw InputError("empty geodesic");
  const PointId s = qg.points.front(), t = qg.points.back();
  const bool forward = sigma.front() == s && sigma.back() == t;
  const bool backward = sigma.front() == t && sigma.back() == s;
  if (!forward && !backward) throw InputError("geodesic does not join the curve's endpoints");
}

Distance morse_distance(const FiniteMetricSpace& space, const QuasiGeodesic& qg, const GeodesicSegment& sigma) {
  check_endpoints(qg, sigma);
  Distance worst = 0;
  for (PointId x : qg.points) worst = std::max(worst, distance_to_set(space, x, sigma.points));
  return worst;
}

Distance anti_morse_distance(const FiniteMetricSpace& space, const QuasiGeodesic& qg, const GeodesicSegment& sigma) {
  check_endpoints(qg, sigma);
  Distance worst = 0;
  for (PointId x : sigma.points) worst = std::max(worst, distance_to_set(space, x, qg.points));
  return worst;
}

namespace {

QuasiGeodesic perturbed_walk(const GeodesicSpace& space, const GeodesicSegment& base, const Rational& lambda,
                             const Rational& c, double scale, const RandomQuasiGeodesicOptions& options,
                             std::mt19937_64& rng) {
  const auto& metric = space.metric();
  const auto length = static_cast<std::int64_t>(base.length());
  const std::int64_t max_stride = std::max<std::int64_t>(1, lambda.floor());
  const bool can_dwell = Rational(1) <= lambda * c;
  const auto max_depth = static_cast<std::int64_t>(static_cast<double>((lambda * c).floor() / 2) * scale);
  const std::unordered_set<PointId> on_base(base.points.begin(), base.points.end());

  std::uniform_real_distribution<double> coin(0.0, 1.0);
  QuasiGeodesic qg;
  qg.lambda = lambda;
  qg.c = c;
  std::int64_t t = 0;
  auto push = [&](PointId p) {
    qg.params.push_back(t++);
    qg.points.push_back(p);
  };

  std::int64_t pos = 0;
  push(base.points[0]);
  while (pos < length) {
    const PointId anchor = base.points[static_cast<std::size_t>(pos)];
    const double r = coin(rng);
    if (max_depth >= 1 && r < options.detour_probability * scale) {
      const auto depth = std::uniform_int_distribution<std::int64_t>(1, max_depth)(rng);
      std::vector<PointId> out;
      PointId cur = anchor;
      for (std::int64_t step = 1; step <= depth; ++step) {
        std::vector<PointId> next;
        for (PointId w : space.graph().neighbors(cur))
          if (metric(w, anchor) == step && !on_base.contains(w)) next.push_back(w);
        if (next.empty()) break;
        cur = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
        out.push_back(cur);
      }
      for (PointId p : out) push(p);
      for (std::size_t k = out.size(); k-- > 1;) push(out[k - 1]);
      if (!out.empty()) push(anchor);
      continue;
    }
    if (can_dwell && r < (options.detour_probability + options.dwell_probability) * scale) {
      push(anchor);
      continue;
    }
    std::int64_t stride = 1;
    if (max_stride > 1 && coin(rng) < options.stride_probability * scale)
      stride = std::uniform_int_distribution<std::int64_t>(2, max_stride)(rng);
    pos = std::min(length, pos + stride);
    push(base.points[static_cast<std::size_t>(pos)]);
  }
  return qg;
}

} // namespace

QuasiGeodesic random_quasi_geodesic(const GeodesicSpace& space, PointId from, PointId to, const Rational& lambda,
                                    const Rational& c, std::uint64_t seed, const RandomQuasiGeodesicOptions& options) {
  if (lambda < Rational(1)) throw InputError("lambda must be >= 1");
  if (c < Rational(0)) throw InputError("c must be >= 0");
  if (options.attempts < 1) throw InputError("random quasi-geodesic needs at least one attempt");
  const auto base = space.geodesic(from, to);
  std::mt19937_64 rng(seed);
  double scale = 1.0;
  for (int attempt = 0; attempt < options.attempts; ++attempt) {
    if (attempt + 1 == options.attempts) scale = 0.0;
    auto qg = perturbed_walk(space, base, lambda, c, scale, options, rng);
    if (verify_quasi_geodesic(space.metric(), qg)) return qg;
    scale *= 0.5;
  }
  throw GenerationError("no valid (" + lambda.to_string() + ", " + c.to_string() + ")-quasi-geodesic after " +
                        std::to_string(options.attempts) + " attempts");
}

QuasiGeodesic cycle_arc(const std::vector<PointId>& cycle, std::size_t start, std::size_t steps,
                        const Rational& lambda, const Rational& c) {
  if (cycle.empty()) throw InputError("arc of an empty cycle");
  QuasiGeodesic qg;
  qg.lambda = lambda;
  qg.c = c;
  for (std::size_t i = 0; i <= steps; ++i) {
    qg.params.push_back(static_cast<std::int64_t>(i));
    qg.points.push_back(cycle[(start + i) % cycle.size()]);
  }
  return qg;
}

StaircaseResult widest_staircase(const GeodesicSpace& space, const std::vector<PointId>& cycle,
                                 const Rational& lambda, const Rational& c, std::size_t start_stride) {
  if (cycle.size() < 2) throw InputError("staircase search needs a cycle with at least two points");
  if (start_stride == 0) throw InputError("start stride must be positive");
  const auto& metric = space.metric();
  const Sandwich sandwich(lambda, c);
  const std::size_t m = cycle.size();

  StaircaseResult best;
  bool found = false;
  for (std::size_t start = 0; start < m; start += start_stride) {
    std::vector<PointId> arc{cycle[start]};
    for (std::size_t steps = 1; steps < m; ++steps) {
      const PointId next = cycle[(start + steps) % m];
      bool ok = true;
      for (std::size_t i = 0; i < arc.size() && ok; ++i)
        ok = sandwich.holds(static_cast<std::int64_t>(steps - i), metric(arc[i], next));
      if (!ok) break;
      arc.push_back(next);
      const auto sigma = space.geodesic(arc.front(), arc.back());
      Distance far = 0;
      for (PointId x : sigma.points) far = std::max(far, distance_to_set(metric, x, arc));
      if (!found || far > best.anti_morse) {
        found = true;
        best.anti_morse = far;
        best.curve = cycle_arc(cycle, start, steps, lambda, c);
        best.geodesic = sigma;
      }
    }
  }
  if (!found) throw InputError("no arc of the cycle verifies at the requested constants");
  return best;
}

} // namespace hypermorse
