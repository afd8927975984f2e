// One PASS/FAIL line per acceptance criterion. Exit status 1 if any line fails.

#include "oracles.hpp"

#include "hypermorse/bounds.hpp"
#include "hypermorse/errors.hpp"
#include "hypermorse/quasi_geodesics.hpp"
#include "hypermorse/quasi_isometries.hpp"
#include "hypermorse/richness.hpp"
#include "hypermorse/serialization.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace hypermorse;

namespace {

// pinned tolerances
constexpr double kTreeDeltaSeconds = 60.0;
constexpr double kAntiMorseSpread = 4.0;
constexpr double kQuadraticFactor = 1.5;
constexpr double kVisualRelTol = 1e-12;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::function<Outcome()>& body) {
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  if (!out.pass) ++failures;
  std::cout << "criterion " << id << ": " << (out.pass ? "PASS" : "FAIL") << " (" << out.detail << ")" << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::int64_t mesh(const Rational& c) { return std::max<std::int64_t>(1, (Rational(2) * c).ceil()); }

struct Trial {
  const GeodesicSpace* space;
  HalfInteger delta;
  QuasiGeodesic qg;
  GeodesicSegment sigma;
};

// Shared by criteria 3-5: 100 random quasi-geodesics per space.
std::vector<Trial> build_trials(const std::vector<GeodesicSpace>& spaces) {
  const std::pair<Rational, Rational> constants[] = {{Rational(1), Rational(1)},    {Rational(2), Rational(1)},
                                                      {Rational(2), Rational(2)},    {Rational(3), Rational(2)},
                                                      {Rational(3, 2), Rational(1, 2)}};
  std::vector<Trial> trials;
  FourPointOptions fp;
  fp.max_exact_points = 400;
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    const auto& space = spaces[s];
    const auto& m = space.metric();
    const HalfInteger delta = four_point_delta(m, fp);
    std::mt19937_64 rng(1000 + s);
    std::uniform_int_distribution<PointId> pick(0, static_cast<PointId>(m.size() - 1));
    for (int t = 0; t < 100; ++t) {
      auto [lambda, c] = constants[t % 5];
      PointId u = pick(rng), v = pick(rng);
      // endpoints at least one mesh apart keep the Delta-length nondegenerate
      while (m(u, v) < mesh(c)) v = pick(rng);
      trials.push_back({&space, delta, random_quasi_geodesic(space, u, v, lambda, c, rng()), space.geodesic(u, v)});
    }
  }
  return trials;
}

} // namespace

int main() {
  report(1, [] {
    auto t0 = std::chrono::steady_clock::now();
    FourPointOptions fp;
    fp.max_exact_points = 500;
    int nonzero = 0, spaces = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
      const std::size_t n = 20 + (i * 37) % 101;
      nonzero += four_point_delta(shortest_path_metric(build_random_tree(n, 500 + i)), fp).doubled() != 0;
      ++spaces;
    }
    for (int d : {3, 4})
      for (int r = 1; r <= 5; ++r) {
        nonzero += four_point_delta(shortest_path_metric(build_tree_ball(d, r)), fp).doubled() != 0;
        ++spaces;
      }
    const double secs = seconds_since(t0);
    std::ostringstream s;
    s << spaces << " trees, " << nonzero << " with nonzero delta, " << secs << " s (limit " << kTreeDeltaSeconds << " s)";
    return Outcome{nonzero == 0 && secs < kTreeDeltaSeconds, s.str()};
  });

  report(2, [] {
    GeodesicSpace tree(build_tree_ball(3, 8));
    const auto& m = tree.metric();
    bool pass = true;
    std::ostringstream s;
    for (auto [lambda, c, expected] : std::vector<std::tuple<int, int, int>>{{2, 2, 4}, {4, 2, 16}, {2, 4, 8}}) {
      auto qg = extremal_example(lambda, c, tree);
      auto sigma = tree.geodesic(qg.points.front(), qg.points.back());
      const bool verified = verify_quasi_geodesic(m, qg).ok;
      const Distance h = morse_distance(m, qg, sigma);
      const double bound = morse_bound(lambda, c, 0);
      pass = pass && verified && h == expected && h == lambda * lambda * c / 2 && h <= bound;
      s << "(" << lambda << "," << c << "): H=" << h << " bound=" << bound << (verified ? "" : " unverified") << "; ";
    }
    return Outcome{pass, s.str()};
  });

  std::vector<GeodesicSpace> spaces;
  spaces.emplace_back(build_tree_ball(3, 4));
  spaces.emplace_back(build_tree_ball(3, 5));
  spaces.emplace_back(build_tessellation_patch(7, 3, 4));
  std::vector<Trial> trials;
  try {
    trials = build_trials(spaces);
  } catch (const std::exception& e) {
    std::cerr << "trial generation failed: " << e.what() << '\n';
  }

  report(3, [&] {
    if (trials.size() != 300) return Outcome{false, "trial generation failed"};
    std::size_t violations = 0;
    Distance worst = 0;
    for (const auto& t : trials) {
      const Distance h = morse_distance(t.space->metric(), t.qg, t.sigma);
      worst = std::max(worst, h);
      if (!verify_quasi_geodesic(t.space->metric(), t.qg).ok) ++violations;
      if (h > morse_bound(t.qg.lambda.to_double(), t.qg.c.to_double(), t.delta.to_double())) ++violations;
    }
    std::ostringstream s;
    s << trials.size() << " curves, max Morse distance " << worst << ", delta(7,3)=" << trials.back().delta << ", "
      << violations << " violations";
    return Outcome{violations == 0, s.str()};
  });

  report(4, [&] {
    if (trials.size() != 300) return Outcome{false, "trial generation failed"};
    std::size_t violations = 0, endpoint_checks = 0;
    for (const auto& t : trials) {
      const auto& q = t.qg;
      const auto dl = delta_length(t.space->metric(), q, mesh(q.c));
      if (!(Rational(dl.value) <= Rational(2) * q.lambda * Rational(q.parameter_length()))) ++violations;
      const Distance r = t.space->metric()(q.points.front(), q.points.back());
      if (Rational(r) >= q.c) {
        ++endpoint_checks;
        if (!(Rational(dl.value) <= Rational(4) * q.lambda * q.lambda * Rational(r))) ++violations;
      }
    }
    std::ostringstream s;
    s << trials.size() << " parameter-length checks, " << endpoint_checks << " endpoint-distance checks, " << violations
      << " violations";
    return Outcome{violations == 0, s.str()};
  });

  report(5, [&] {
    if (trials.size() != 300) return Outcome{false, "trial generation failed"};
    std::size_t violations = 0;
    for (const auto& t : trials) {
      const auto& m = t.space->metric();
      const std::int64_t delta = mesh(t.qg.c);
      const auto dl = delta_length(m, t.qg, delta);
      const auto taut = taut_replacement(*t.space, t.qg, delta);
      const bool certificate = taut.lambda == t.qg.lambda && taut.c == Rational(12 * delta) + Rational(3) * t.qg.c;
      if (dl.degenerate || !certificate || !verify_quasi_geodesic(m, taut).ok || classical_length(m, taut) != dl.value)
        ++violations;
    }
    std::ostringstream s;
    s << trials.size() << " replacements, " << violations << " violations";
    return Outcome{violations == 0, s.str()};
  });

  report(6, [] {
    GeodesicSpace space(build_tessellation_patch(7, 3, 3));
    const auto& m = space.metric();
    oracle::Table table(m.size(), std::vector<int>(m.size()));
    for (PointId x = 0; x < m.size(); ++x)
      for (PointId y = 0; y < m.size(); ++y) table[x][y] = m(x, y);
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<PointId> pick(0, static_cast<PointId>(m.size() - 1));
    std::uniform_int_distribution<std::size_t> length(2, 12);
    std::uniform_int_distribution<std::int64_t> mesh_pick(1, 4);
    std::size_t mismatches = 0, degenerate = 0;
    for (int i = 0; i < 200; ++i) {
      std::vector<PointId> pts(length(rng));
      // half the curves wander locally so that long witnesses occur
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k > 0 && i % 2 == 0) {
          const auto& nb = space.graph().neighbors(pts[k - 1]);
          pts[k] = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
        } else {
          pts[k] = pick(rng);
        }
      }
      const std::int64_t delta = mesh_pick(rng);
      QuasiGeodesic qg;
      for (std::size_t k = 0; k < pts.size(); ++k) qg.params.push_back(static_cast<std::int64_t>(k));
      qg.points = pts;
      const auto dp = delta_length(m, qg, delta);
      const long long expected = oracle::delta_length(table, {pts.begin(), pts.end()}, delta);
      if (expected < 0) {
        ++degenerate;
        if (!dp.degenerate) ++mismatches;
      } else if (dp.degenerate || dp.value != expected) {
        ++mismatches;
      }
    }
    std::ostringstream s;
    s << "200 curves (" << degenerate << " degenerate), " << mismatches << " mismatches";
    return Outcome{mismatches == 0, s.str()};
  });

  report(7, [] {
    const int lambdas[] = {2, 4, 8, 16};
    const Rational c(2);
    auto patch = build_tessellation(7, 3, 6);
    GeodesicSpace space(patch.graph);
    std::vector<double> normalized;
    std::ostringstream s;
    s << "anti-Morse/ln(lambda):";
    for (int lambda : lambdas) {
      auto best = widest_staircase(space, patch.boundary_cycles.back(), Rational(lambda), c);
      if (!verify_quasi_geodesic(space.metric(), best.curve).ok) return Outcome{false, "staircase failed to verify"};
      normalized.push_back(best.anti_morse / std::log(static_cast<double>(lambda)));
      s << " " << best.anti_morse << "/" << std::log(static_cast<double>(lambda));
    }
    const double spread = *std::max_element(normalized.begin(), normalized.end()) /
                          *std::min_element(normalized.begin(), normalized.end());
    s << " spread " << spread << " (limit " << kAntiMorseSpread << ");";

    bool quadratic = true;
    Distance previous = 0;
    s << " extremal H:";
    for (int lambda : lambdas) {
      const int c_int = 2;
      GeodesicSpace line(build_control(ControlKind::path, lambda * lambda * c_int / 2 + 1));
      auto qg = extremal_example(lambda, c_int, line);
      const Distance h = morse_distance(line.metric(), qg, line.geodesic(qg.points.front(), qg.points.back()));
      s << " " << h;
      if (previous > 0) {
        const double ratio = static_cast<double>(h) / previous;
        if (ratio > 4.0 * kQuadraticFactor || ratio < 4.0 / kQuadraticFactor) quadratic = false;
      }
      previous = h;
    }
    return Outcome{normalized.front() > 0 && spread <= kAntiMorseSpread && quadratic, s.str()};
  });

  report(8, [] {
    GeodesicSpace ball(build_tree_ball(3, 10));
    const auto& m = ball.metric();
    const Distance radius = ball_radius(m, 0);
    const auto leaves = outer_sphere(m, 0);
    bool pass = true;
    std::ostringstream s;
    for (auto [lambda, c] : std::vector<std::pair<int, int>>{{4, 2}, {6, 2}}) {
      s << "(" << lambda << "," << c << "): ";
      try {
        auto f = ball_center_shift(ball, 0, lambda, c);
        const bool verified = verify_quasi_isometry(m, f).ok;
        const bool fixed = fixes_proxy_boundary(m, f, leaves, 0);
        const Distance moved = displacement(m, f, 0);
        const double bound = prop1_bound(lambda, c, radius);
        const bool ok = verified && fixed && 2 * moved == lambda * c && moved <= bound;
        pass = pass && ok;
        s << "displacement " << moved << ", bound " << bound << (verified ? "" : ", unverified")
          << (fixed ? "" : ", boundary moved") << "; ";
      } catch (const std::exception& e) {
        pass = false;
        s << e.what() << "; ";
      }
    }
    return Outcome{pass, s.str()};
  });

  report(9, [] {
    std::vector<Graph> graphs{build_tessellation_patch(7, 3, 2), build_control(ControlKind::grid, 6),
                              build_control(ControlKind::cycle, 12), build_random_tree(60, 9), build_tree_ball(3, 3),
                              build_tessellation_patch(4, 5, 2)};
    std::size_t violations = 0, checked = 0;
    for (const auto& g : graphs) {
      if (g.vertex_count() > 60) return Outcome{false, "space larger than 60 points"};
      auto m = shortest_path_metric(g);
      const std::size_t n = m.size();
      for (PointId xi = 0; xi < n; ++xi)
        for (PointId eta = 0; eta < n; ++eta)
          for (PointId p = 0; p < n; ++p)
            for (PointId q = 0; q < n; ++q) {
              const double lhs = visual_distance(m, xi, eta, q);
              const double rhs = std::exp(static_cast<double>(m(p, q))) * visual_distance(m, xi, eta, p);
              ++checked;
              if (lhs > rhs * (1.0 + kVisualRelTol)) ++violations;
            }
    }
    std::ostringstream s;
    s << checked << " quadruples over " << graphs.size() << " spaces, " << violations << " violations";
    return Outcome{violations == 0, s.str()};
  });

  report(10, [] {
    RichnessOptions o;
    o.sampling.seed = 10;
    GeodesicSpace path(build_control(ControlKind::path, 20));
    GeodesicSpace ball(build_tree_ball(3, 5));
    auto p1 = check_richness(path, o), p2 = check_richness(path, o);
    auto b1 = check_richness(ball, o), b2 = check_richness(ball, o);
    const bool deterministic = to_json(p1).dump() == to_json(p2).dump() && to_json(b1).dump() == to_json(b2).dump();
    const bool path_ok = !p1.rich() && !p1.condition1_violations.empty();
    const bool ball_ok = b1.rich();
    std::ostringstream s;
    s << "path verdict " << (p1.rich() ? "rich" : "not-rich");
    if (!p1.condition1_violations.empty()) {
      const auto& w = p1.condition1[p1.condition1_violations.front()];
      s << " (witness p=" << w.p << " q=" << w.q << " offset=" << w.offset << ")";
    }
    s << "; tree ball " << (b1.rich() ? "rich" : "not-rich") << " with r1..r4 = " << b1.fitted_r1 << "," << b1.fitted_r2
      << "," << b1.fitted_r3 << "," << b1.fitted_r4 << "; " << (deterministic ? "deterministic" : "nondeterministic");
    return Outcome{path_ok && ball_ok && deterministic, s.str()};
  });

  report(11, [] {
    std::vector<GeodesicSpace> balls;
    balls.emplace_back(build_tree_ball(3, 4));
    balls.emplace_back(build_tree_ball(3, 5));
    balls.emplace_back(build_tree_ball(4, 4));
    std::mt19937_64 rng(11);
    std::size_t curves = 0, nonzero = 0;
    for (int i = 0; i < 50; ++i) {
      const auto& space = balls[i % balls.size()];
      const auto& m = space.metric();
      // lowest-index diametral pair
      const Distance diam = m.diameter();
      PointId a = 0, b = 0;
      for (PointId u = 0; u < m.size() && a == b; ++u)
        for (PointId v = u + 1; v < m.size(); ++v)
          if (m(u, v) == diam) {
            a = u;
            b = v;
            break;
          }
      auto sigma = space.geodesic(a, b);
      std::vector<bool> on(m.size(), false);
      for (PointId p : sigma.points) on[p] = true;
      std::vector<PointId> free;
      for (PointId v = 0; v < m.size(); ++v)
        if (!on[v]) free.push_back(v);
      std::vector<PointId> walk{free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)]};
      const std::size_t target = 2 + static_cast<std::size_t>(i % 15);
      while (walk.size() < target) {
        std::vector<PointId> next;
        for (PointId w : space.graph().neighbors(walk.back()))
          if (!on[w]) next.push_back(w);
        if (next.empty()) break;
        walk.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
      }
      ++curves;
      if (projection_extent(m, walk, sigma) != 0) ++nonzero;
    }
    std::ostringstream s;
    s << curves << " curves, " << nonzero << " with nonzero extent";
    return Outcome{nonzero == 0, s.str()};
  });

  return failures == 0 ? 0 : 1;
}
