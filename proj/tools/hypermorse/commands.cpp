#include "hypermorse/commands.hpp"

#include "hypermorse/errors.hpp"
#include "hypermorse/generator_spec.hpp"
#include "hypermorse/parallel.hpp"
#include "hypermorse/quasi_geodesics.hpp"
#include "hypermorse/quasi_isometries.hpp"
#include "hypermorse/serialization.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

namespace hypermorse::cli {

using nlohmann::json;

namespace {

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

class ReportBuilder {
public:
  ReportBuilder(const std::string& experiment, const SpaceSource& source) {
    j_["schema_version"] = kReportSchemaVersion;
    j_["experiment"] = experiment;
    j_["space"] = {{"descriptor", source.descriptor},
                   {"vertices", source.space.size()},
                   {"edges", source.space.graph().edge_count()}};
    j_["parameters"] = json::object();
    j_["measured"] = json::object();
    j_["bounds"] = json::object();
    j_["checks"] = json::array();
  }

  json& parameters() { return j_["parameters"]; }
  json& measured() { return j_["measured"]; }
  json& bounds() { return j_["bounds"]; }
  json& root() { return j_; }

  void check(const std::string& name, bool pass) {
    j_["checks"].push_back({{"name", name}, {"pass", pass}});
    ok_ = ok_ && pass;
  }
  void fail() { ok_ = false; }

  CommandResult finish(const Stopwatch& clock, std::string csv) {
    j_["ok"] = ok_;
    j_["wall_clock_seconds"] = clock.seconds();
    return {std::move(j_), std::move(csv), ok_};
  }

private:
  json j_;
  bool ok_ = true;
};

FourPointOptions four_point_options(const CommandOptions& o) {
  FourPointOptions f;
  f.max_exact_points = o.max_exact;
  f.sampled_quadruples = o.sample_quadruples;
  f.seed = o.seed;
  return f;
}

json delta_json(HalfInteger h) {
  if (h.is_integer()) return h.doubled() / 2;
  return h.to_double();
}

bool within_parameter_bound(std::int64_t delta_length, const Rational& lambda, std::int64_t param_length) {
  // L <= 2 lambda l
  return Rational(delta_length) <= Rational(2) * lambda * Rational(param_length);
}

bool within_endpoint_bound(std::int64_t delta_length, const Rational& lambda, std::int64_t endpoint_distance) {
  // L <= 4 lambda^2 R
  return Rational(delta_length) <= Rational(4) * lambda * lambda * Rational(endpoint_distance);
}

std::int64_t mesh_for(const Rational& c) { return std::max<std::int64_t>(1, (Rational(2) * c).ceil()); }

void require_integer(const Rational& r, const char* name) {
  if (!r.is_integer()) throw InputError(std::string(name) + " must be an integer for this command");
}

std::pair<PointId, PointId> diametral_pair(const FiniteMetricSpace& metric) {
  const Distance diam = metric.diameter();
  for (PointId u = 0; u < metric.size(); ++u)
    for (PointId v = u + 1; v < metric.size(); ++v)
      if (metric(u, v) == diam) return {u, v};
  return {0, 0};
}

} // namespace

std::string CommandResult::render(Format format) const {
  if (format == Format::csv) return csv;
  return report.dump(2) + "\n";
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  // splitmix64 finalizer over (master, trial)
  std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::vector<PointId> parse_id_list(const std::string& text) {
  std::vector<PointId> out;
  if (text.empty() || text == "none") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw InputError("");
      out.push_back(static_cast<PointId>(v));
    } catch (const std::exception&) {
      throw InputError("bad point id '" + item + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

CommandResult cmd_hyperbolicity(const CommandOptions& options) {
  Stopwatch clock;
  const auto source = load_space(options.gen, options.input);
  const auto& metric = source.space.metric();
  ReportBuilder report("hyperbolicity", source);
  report.parameters() = {{"max_exact", options.max_exact},
                         {"sample_quadruples", options.sample_quadruples},
                         {"seed", options.seed}};

  const auto fp = four_point_delta(metric, four_point_options(options));
  const bool exact = metric.size() <= options.max_exact;
  ThinTriangleOptions thin;
  thin.seed = options.seed;
  const Distance tt = thin_triangle_delta(metric, source.space.provider(), thin);
  report.measured() = {{"four_point_delta", delta_json(fp)},
                       {"four_point_exact", exact},
                       {"thin_triangle_delta", tt},
                       {"thin_triangle_exhaustive", metric.size() <= thin.exhaustive_max_points},
                       {"diameter", metric.diameter()},
                       {"vertices", metric.size()}};

  std::ostringstream csv;
  csv << "space,vertices,four_point_delta,thin_triangle_delta,diameter\n"
      << source.descriptor << ',' << metric.size() << ',' << fp << ',' << tt << ',' << metric.diameter() << '\n';
  return report.finish(clock, csv.str());
}

// ---------------------------------------------------------------------------

namespace {

CommandResult morse_extremal(const CommandOptions& options, const SpaceSource& source, Stopwatch& clock) {
  require_integer(options.lambda, "--lambda");
  require_integer(options.c, "--c");
  const int lambda = static_cast<int>(options.lambda.num());
  const int c = static_cast<int>(options.c.num());
  const auto& metric = source.space.metric();
  ReportBuilder report("morse-extremal", source);
  report.parameters() = {{"lambda", lambda}, {"c", c}};

  const auto qg = extremal_example(lambda, c, source.space);
  const auto sigma = source.space.geodesic(qg.points.front(), qg.points.back());
  const auto verified = verify_quasi_geodesic(metric, qg);
  const Distance measured = morse_distance(metric, qg, sigma);
  const std::int64_t expected = std::int64_t(lambda) * lambda * c / 2;
  const double bound = morse_bound(lambda, c, 0.0, options.constants);

  report.measured() = {{"morse_distance", measured},
                       {"anti_morse_distance", anti_morse_distance(metric, qg, sigma)},
                       {"fitted_c", to_json(fit_qi_constants(metric, qg.params, qg.points, qg.lambda))},
                       {"curve", to_json(qg)}};
  report.bounds() = {{"morse_bound", bound}, {"extremal_value", expected}};
  report.check("extremal curve verifies", verified.ok);
  report.check("morse distance equals lambda^2 c / 2", measured == expected);
  report.check("morse distance within bound", static_cast<double>(measured) <= bound);

  std::ostringstream csv;
  csv << "lambda,c,measured,bound,extremal\n"
      << lambda << ',' << c << ',' << measured << ',' << bound << ',' << expected << '\n';
  return report.finish(clock, csv.str());
}

struct MorseTrial {
  json record;
  std::string csv_row;
  bool ok = true;
};

} // namespace

CommandResult cmd_morse(const CommandOptions& options) {
  Stopwatch clock;
  if (options.lambda < Rational(1)) throw InputError("--lambda must be >= 1");
  if (options.c < Rational(0)) throw InputError("--c must be >= 0");
  const auto source = load_space(options.gen, options.input);
  if (options.extremal) return morse_extremal(options, source, clock);

  const auto& space = source.space;
  const auto& metric = space.metric();
  ReportBuilder report("morse", source);
  report.parameters() = {{"lambda", to_json(options.lambda)},
                         {"c", to_json(options.c)},
                         {"trials", options.trials},
                         {"seed", options.seed},
                         {"delta_param", mesh_for(options.c)}};

  const std::string header =
      "trial,lambda,c,from,to,measured_morse,morse_bound,anti_morse,anti_morse_bound,delta_length,ok\n";
  if (options.trials == 0) {
    report.root()["trials"] = json::array();
    return report.finish(clock, header);
  }
  if (metric.size() < 2) throw InputError("morse experiment needs at least two points");

  const HalfInteger delta = four_point_delta(metric, four_point_options(options));
  const double delta_value = delta.to_double();
  const double lambda = options.lambda.to_double();
  const double c = options.c.to_double();
  const double bound = morse_bound(lambda, c, delta_value, options.constants);
  const bool has_anti_bound = lambda > 1.0;
  const double anti_bound = has_anti_bound ? anti_morse_bound(lambda, c, delta_value, options.constants) : 0.0;
  const std::int64_t mesh = mesh_for(options.c);

  report.measured()["four_point_delta"] = delta_json(delta);
  report.bounds() = {{"morse_bound", bound}};
  if (has_anti_bound) report.bounds()["anti_morse_bound"] = anti_bound;
  report.root()["geodesics"] = "canonical";

  std::vector<MorseTrial> trials(options.trials);
  parallel_for(options.trials, [&](std::size_t t) {
    MorseTrial& out = trials[t];
    const std::uint64_t seed = trial_seed(options.seed, t);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<PointId> pick(0, static_cast<PointId>(metric.size() - 1));
    const PointId from = pick(rng);
    PointId to = pick(rng);
    while (to == from) to = pick(rng);
    out.record = {{"trial", t}, {"seed", seed}, {"from", from}, {"to", to}};
    try {
      const auto qg = random_quasi_geodesic(space, from, to, options.lambda, options.c, rng());
      const auto sigma = space.geodesic(from, to);
      const Distance morse = morse_distance(metric, qg, sigma);
      const Distance anti = anti_morse_distance(metric, qg, sigma);
      const auto dl = delta_length(metric, qg, mesh);
      const Distance endpoint_distance = metric(from, to);

      const bool thm1 = static_cast<double>(morse) <= bound;
      const bool l7 = within_parameter_bound(dl.value, options.lambda, qg.parameter_length());
      const bool l8_applies = Rational(endpoint_distance) >= options.c;
      const bool l8 = !l8_applies || within_endpoint_bound(dl.value, options.lambda, endpoint_distance);
      bool l9 = true;
      if (!dl.degenerate && Rational(mesh) >= options.c) {
        const auto taut = taut_replacement(space, qg, mesh);
        l9 = verify_quasi_geodesic(metric, taut).ok && classical_length(metric, taut) == dl.value;
      }
      out.ok = thm1 && l7 && l8 && l9;
      out.record["samples"] = qg.size();
      out.record["morse_distance"] = morse;
      out.record["anti_morse_distance"] = anti;
      out.record["delta_length"] = dl.value;
      out.record["delta_length_degenerate"] = dl.degenerate;
      out.record["within_morse_bound"] = thm1;
      out.record["delta_length_vs_parameter"] = l7;
      out.record["delta_length_vs_endpoints"] = l8_applies ? json(l8) : json(nullptr);
      out.record["taut_replacement_ok"] = l9;
      out.record["ok"] = out.ok;
      std::ostringstream row;
      row << t << ',' << options.lambda << ',' << options.c << ',' << from << ',' << to << ',' << morse << ','
          << bound << ',' << anti << ',' << (has_anti_bound ? std::to_string(anti_bound) : std::string("")) << ','
          << dl.value << ',' << (out.ok ? 1 : 0) << '\n';
      out.csv_row = row.str();
    } catch (const GenerationError& e) {
      out.ok = false;
      out.record["error"] = e.what();
      out.record["ok"] = false;
      out.csv_row = std::to_string(t) + ",,,,,,,,,,0\n";
    }
  });

  json records = json::array();
  std::string csv = header;
  Distance worst_morse = 0, worst_anti = 0;
  std::size_t failures = 0;
  for (const auto& t : trials) {
    records.push_back(t.record);
    csv += t.csv_row;
    if (!t.ok) ++failures;
    if (t.record.contains("morse_distance")) {
      worst_morse = std::max(worst_morse, t.record["morse_distance"].get<Distance>());
      worst_anti = std::max(worst_anti, t.record["anti_morse_distance"].get<Distance>());
    }
  }
  report.root()["trials"] = records;
  report.measured()["max_morse_distance"] = worst_morse;
  report.measured()["max_anti_morse_distance"] = worst_anti;
  report.measured()["failed_trials"] = failures;
  report.check("every trial within the Morse bound and the delta-length invariants", failures == 0);
  return report.finish(clock, csv);
}

// ---------------------------------------------------------------------------

CommandResult cmd_displacement(const CommandOptions& options) {
  Stopwatch clock;
  require_integer(options.lambda, "--lambda");
  require_integer(options.c, "--c");
  const auto source = load_space(options.gen, options.input);
  const auto& metric = source.space.metric();
  const int lambda = static_cast<int>(options.lambda.num());
  const int c = static_cast<int>(options.c.num());
  const PointId center = 0;
  const Distance radius = ball_radius(metric, center);

  ReportBuilder report("displacement", source);
  report.parameters() = {{"lambda", lambda}, {"c", c}, {"center", center}, {"radius", radius}};

  const auto map = ball_center_shift(source.space, center, lambda, c);
  const auto verified = verify_quasi_isometry(metric, map);
  const Distance moved = displacement(metric, map, center);
  const auto boundary = outer_sphere(metric, center);
  const bool fixed = fixes_proxy_boundary(metric, map, boundary, 0);
  const double p1 = prop1_bound(lambda, c, radius, options.constants);

  report.measured() = {{"displacement", moved},
                       {"image_of_center", map(center)},
                       {"fitted_c", to_json(fit_map_constant(metric, map, map.lambda))},
                       {"boundary_points", boundary.size()}};
  report.bounds() = {{"displacement_bound", p1}};
  report.check("map verifies as a (lambda, c)-quasi-isometry", verified.ok);
  report.check("outer boundary fixed (tolerance 0)", fixed);
  report.check("displacement equals lambda c / 2", std::int64_t(moved) * 2 == std::int64_t(lambda) * c);
  report.check("displacement within the tree-ball bound", static_cast<double>(moved) <= p1);
  report.check("displacement within radius", moved <= radius);
  double t3 = 0;
  if (lambda > 1) {
    t3 = thm3_bound(lambda, c, 0.0, options.constants);
    report.bounds()["rich_displacement_bound"] = t3;
    report.bounds()["richness_constants"] = {{"r0", options.constants.r0}, {"r1", options.constants.r1},
                                             {"r2", options.constants.r2}, {"r3", options.constants.r3},
                                             {"r4", options.constants.r4}};
    report.check("displacement within the rich-space bound", static_cast<double>(moved) <= t3);
  }

  std::ostringstream csv;
  csv << "lambda,c,radius,displacement,displacement_bound,rich_displacement_bound,ok\n"
      << lambda << ',' << c << ',' << radius << ',' << moved << ',' << p1 << ','
      << (lambda > 1 ? std::to_string(t3) : std::string("")) << ',' << 1 << '\n';
  auto result = report.finish(clock, csv.str());
  if (!result.ok) {
    auto pos = result.csv.rfind(",1\n");
    result.csv.replace(pos, 3, ",0\n");
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

struct CurveMeasure {
  std::string origin;
  Distance distance = 0;
  std::size_t extent = 0;
  std::int64_t delta_length = 0;
  std::optional<double> bound;
  bool checked = false;
  bool pass = true;
};

bool is_connected_curve(const FiniteMetricSpace& metric, const std::vector<PointId>& curve) {
  for (std::size_t i = 1; i < curve.size(); ++i)
    if (metric(curve[i - 1], curve[i]) > 1) return false;
  return true;
}

std::vector<PointId> random_avoiding_walk(const GeodesicSpace& space, const std::vector<bool>& on_sigma,
                                          std::size_t length, std::mt19937_64& rng) {
  std::vector<PointId> free;
  for (PointId v = 0; v < space.size(); ++v)
    if (!on_sigma[v]) free.push_back(v);
  if (free.empty()) return {};
  std::vector<PointId> walk{free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)]};
  while (walk.size() < length) {
    std::vector<PointId> next;
    for (PointId w : space.graph().neighbors(walk.back()))
      if (!on_sigma[w]) next.push_back(w);
    if (next.empty()) break;
    walk.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
  }
  return walk;
}

} // namespace

CommandResult cmd_contraction(const CommandOptions& options) {
  Stopwatch clock;
  if (options.delta_param < 1) throw InputError("--delta-param must be >= 1");
  const auto source = load_space(options.gen, options.input);
  const auto& space = source.space;
  const auto& metric = space.metric();
  auto [from, to] = diametral_pair(metric);
  if (options.from) from = *options.from;
  if (options.to) to = *options.to;
  const auto sigma = space.geodesic(from, to);
  std::vector<bool> on_sigma(metric.size(), false);
  for (PointId p : sigma.points) on_sigma[p] = true;

  ReportBuilder report("contraction", source);
  report.parameters() = {{"from", from},
                         {"to", to},
                         {"delta_param", options.delta_param},
                         {"walk_length", options.walk_length},
                         {"trials", options.trials},
                         {"seed", options.seed}};

  const HalfInteger delta = four_point_delta(metric, four_point_options(options));
  const double delta_value = delta.to_double();
  report.measured()["four_point_delta"] = delta_json(delta);
  report.measured()["geodesic_length"] = sigma.length();

  std::vector<std::pair<std::string, std::vector<PointId>>> curves;
  if (!options.curve_file.empty()) {
    auto qg = read_quasi_geodesic_file(options.curve_file);
    curves.emplace_back("file", qg.points);
  } else {
    for (std::size_t k = 0; k < source.cycles.size(); ++k) {
      const auto& cycle = source.cycles[k];
      const std::size_t len = std::min(options.walk_length, cycle.size());
      for (std::size_t start = 0; start < cycle.size(); ++start) {
        std::vector<PointId> arc;
        for (std::size_t i = 0; i < len; ++i) arc.push_back(cycle[(start + i) % cycle.size()]);
        if (std::none_of(arc.begin(), arc.end(), [&](PointId p) { return on_sigma[p]; }))
          curves.emplace_back("ring" + std::to_string(k + 1) + "@" + std::to_string(start), std::move(arc));
      }
    }
    for (std::size_t t = 0; t < options.trials; ++t) {
      std::mt19937_64 rng(trial_seed(options.seed, t));
      auto walk = random_avoiding_walk(space, on_sigma, options.walk_length, rng);
      if (!walk.empty()) curves.emplace_back("walk" + std::to_string(t), std::move(walk));
    }
  }

  std::vector<CurveMeasure> measures;
  for (const auto& [origin, curve] : curves) {
    CurveMeasure m;
    m.origin = origin;
    m.distance = distance_to_set(metric, curve.front(), sigma.points);
    for (PointId p : curve) m.distance = std::min(m.distance, distance_to_set(metric, p, sigma.points));
    m.extent = projection_extent(metric, curve, sigma);
    if (curve.size() >= 2) {
      QuasiGeodesic shape;
      for (std::size_t i = 0; i < curve.size(); ++i) shape.params.push_back(static_cast<std::int64_t>(i));
      shape.points = curve;
      auto dl = delta_length(metric, shape, options.delta_param);
      m.delta_length = dl.value;
    }
    const bool connected = is_connected_curve(metric, curve);
    if (delta.doubled() == 0) {
      if (connected && m.distance >= 1) {
        m.checked = true;
        m.bound = 0.0;
        m.pass = m.extent == 0;
      }
    } else if (connected && m.distance >= options.delta_param + 58.0 * delta_value) {
      m.checked = true;
      m.bound = contraction_bound(static_cast<double>(options.delta_param), delta_value, m.distance,
                                  static_cast<double>(m.delta_length), options.constants);
      m.pass = static_cast<double>(m.extent) <= *m.bound;
    }
    measures.push_back(std::move(m));
  }

  // max extent among curves at exactly distance r, and over distance >= r
  std::map<Distance, std::size_t> extent_at;
  for (const auto& m : measures)
    if (m.distance >= 1) extent_at[m.distance] = std::max(extent_at[m.distance], m.extent);
  std::vector<std::size_t> envelope(extent_at.size(), 0);
  {
    std::size_t running = 0, i = extent_at.size();
    for (auto it = extent_at.rbegin(); it != extent_at.rend(); ++it) envelope[--i] = running = std::max(running, it->second);
  }
  json profile = json::array();
  bool monotone = true;
  std::optional<std::size_t> previous;
  std::size_t i = 0;
  for (const auto& [r, extent] : extent_at) {
    profile.push_back({{"distance", r}, {"max_extent", extent}, {"max_extent_beyond", envelope[i++]}});
    if (previous && extent > *previous) monotone = false;
    previous = extent;
  }

  std::size_t checked = 0, failed = 0;
  json rows = json::array();
  std::ostringstream csv;
  csv << "curve,distance,extent,delta_length,bound,checked,pass\n";
  for (const auto& m : measures) {
    checked += m.checked;
    failed += m.checked && !m.pass;
    rows.push_back({{"curve", m.origin},
                    {"distance", m.distance},
                    {"extent", m.extent},
                    {"delta_length", m.delta_length},
                    {"bound", m.bound ? json(*m.bound) : json(nullptr)},
                    {"precondition_met", m.checked},
                    {"pass", m.pass}});
    csv << m.origin << ',' << m.distance << ',' << m.extent << ',' << m.delta_length << ','
        << (m.bound ? std::to_string(*m.bound) : std::string("")) << ',' << m.checked << ',' << m.pass << '\n';
  }
  report.root()["curves"] = rows;
  report.root()["profile"] = profile;
  report.measured()["curves"] = measures.size();
  report.measured()["curves_meeting_precondition"] = checked;
  report.measured()["precondition_unmet"] = measures.size() - checked;
  report.measured()["profile_non_increasing"] = monotone;
  report.check("projection extent within contraction bound", failed == 0);
  return report.finish(clock, csv.str());
}

// ---------------------------------------------------------------------------

CommandResult cmd_richness(const CommandOptions& options) {
  Stopwatch clock;
  const auto source = load_space(options.gen, options.input);
  RichnessOptions ro = options.richness;
  ro.sampling.seed = options.seed;
  if (options.endpoints_given && ro.endpoints.empty()) throw InputError("richness check needs a nonempty geodesic pool");
  const auto rich = check_richness(source.space, ro);
  if (rich.pool_size == 0) throw InputError("richness check needs a nonempty geodesic pool");

  ReportBuilder report("richness", source);
  report.parameters() = {{"seed", options.seed}, {"max_endpoints", ro.max_endpoints}};
  const json detail = to_json(rich);
  report.measured() = {{"fitted_constants", detail["fitted_constants"]},
                       {"verdict", detail["verdict"]},
                       {"condition1_records", rich.condition1.size()},
                       {"condition2_records", rich.condition2.size()},
                       {"condition1_violations", rich.condition1_violations.size()},
                       {"condition2_violations", rich.condition2_violations.size()}};
  report.root()["richness"] = detail;
  std::ostringstream csv;
  write_richness_csv(csv, rich);
  return report.finish(clock, csv.str());
}

// ---------------------------------------------------------------------------

CommandResult cmd_delta_length(const CommandOptions& options) {
  Stopwatch clock;
  if (options.curve_file.empty()) throw InputError("delta-length needs --curve");
  const auto source = load_space(options.gen, options.input);
  const auto qg = read_quasi_geodesic_file(options.curve_file);
  const auto& metric = source.space.metric();
  const auto dl = delta_length(metric, qg, options.delta_param);

  ReportBuilder report("delta-length", source);
  report.parameters() = {{"delta_param", options.delta_param}, {"curve_samples", qg.size()}};
  report.measured() = {{"delta_length", dl.value},
                       {"witness", dl.witness},
                       {"degenerate", dl.degenerate},
                       {"classical_length", classical_length(metric, qg)}};
  const auto verified = verify_quasi_geodesic(metric, qg);
  report.measured()["certificate_holds"] = verified.ok;
  if (Rational(options.delta_param) >= Rational(2) * qg.c) {
    const bool l7 = within_parameter_bound(dl.value, qg.lambda, qg.parameter_length());
    report.bounds()["parameter_length_bound"] = (Rational(2) * qg.lambda * Rational(qg.parameter_length())).to_double();
    if (verified.ok) report.check("delta-length within 2 lambda l", l7);
  }
  std::ostringstream csv;
  csv << "delta_param,delta_length,degenerate,classical_length\n"
      << options.delta_param << ',' << dl.value << ',' << dl.degenerate << ',' << classical_length(metric, qg) << '\n';
  return report.finish(clock, csv.str());
}

} // namespace hypermorse::cli
