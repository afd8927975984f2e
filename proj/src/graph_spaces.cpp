#include "hypermorse/graph_spaces.hpp"

#include "hypermorse/errors.hpp"
#include "hypermorse/parallel.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <random>
#include <sstream>

namespace hypermorse {

Graph Graph::from_edges(std::size_t vertex_count, const std::vector<Edge>& edges) {
  Graph g(vertex_count);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

PointId Graph::add_vertex() {
  adjacency_.emplace_back();
  return static_cast<PointId>(adjacency_.size() - 1);
}

void Graph::add_edge(PointId u, PointId v) {
  if (u >= vertex_count() || v >= vertex_count())
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") references a missing vertex");
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v)
    throw InputError("repeated edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

bool Graph::has_edge(PointId u, PointId v) const {
  const auto& nu = adjacency_.at(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (PointId u = 0; u < vertex_count(); ++u)
    for (PointId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<Distance> Graph::bfs(PointId source) const {
  std::vector<Distance> dist(vertex_count(), -1);
  std::vector<PointId> queue;
  queue.reserve(vertex_count());
  dist.at(source) = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    PointId u = queue[head];
    for (PointId w : adjacency_[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return false;
  auto d = bfs(0);
  return std::none_of(d.begin(), d.end(), [](Distance x) { return x < 0; });
}

void Graph::require_connected() const {
  if (vertex_count() == 0) throw InputError("graph has no vertices");
  if (!is_connected()) throw InputError("graph is disconnected");
}

FiniteMetricSpace shortest_path_metric(const Graph& g) {
  g.require_connected();
  const std::size_t n = g.vertex_count();
  std::vector<Distance> table(n * n);
  parallel_for(n, [&](std::size_t u) {
    auto d = g.bfs(static_cast<PointId>(u));
    std::copy(d.begin(), d.end(), table.begin() + static_cast<std::ptrdiff_t>(u * n));
  });
  return FiniteMetricSpace(n, std::move(table));
}

GeodesicSpace::GeodesicSpace(Graph graph) : graph_(std::move(graph)), metric_(shortest_path_metric(graph_)) {}

GeodesicSegment GeodesicSpace::geodesic(PointId u, PointId v) const {
  metric_.check_point(u);
  metric_.check_point(v);
  GeodesicSegment seg;
  seg.points.reserve(std::size_t(metric_(u, v)) + 1);
  seg.points.push_back(u);
  PointId cur = u;
  while (cur != v) {
    const Distance want = metric_(cur, v) - 1;
    for (PointId w : graph_.neighbors(cur))
      if (metric_(w, v) == want) {
        cur = w;
        break;
      }
    seg.points.push_back(cur);
  }
  return seg;
}

GeodesicProvider GeodesicSpace::provider() const {
  return [this](PointId u, PointId v) { return geodesic(u, v).points; };
}

GeodesicSegment canonical_geodesic(const GeodesicSpace& space, PointId u, PointId v) { return space.geodesic(u, v); }

GeodesicSegment canonical_geodesic(const Graph& g, PointId u, PointId v) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) throw InputError("geodesic endpoint out of range");
  auto to_v = g.bfs(v);
  if (to_v[u] < 0) throw InputError("no path between " + std::to_string(u) + " and " + std::to_string(v));
  GeodesicSegment seg;
  seg.points.push_back(u);
  PointId cur = u;
  while (cur != v) {
    for (PointId w : g.neighbors(cur))
      if (to_v[w] == to_v[cur] - 1) {
        cur = w;
        break;
      }
    seg.points.push_back(cur);
  }
  return seg;
}

bool is_geodesic(const FiniteMetricSpace& metric, const GeodesicSegment& sigma) {
  const auto& pts = sigma.points;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j)
      if (metric.distance(pts[i], pts[j]) != static_cast<Distance>(j - i)) return false;
  return true;
}

std::vector<std::size_t> projection_indices(const FiniteMetricSpace& metric, PointId x, const GeodesicSegment& sigma) {
  if (sigma.points.empty()) throw InputError("projection onto an empty geodesic");
  metric.check_point(x);
  Distance best = std::numeric_limits<Distance>::max();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sigma.points.size(); ++i) {
    Distance d = metric.distance(x, sigma.points[i]);
    if (d < best) {
      best = d;
      out.clear();
    }
    if (d == best) out.push_back(i);
  }
  return out;
}

std::vector<PointId> project_to_geodesic(const FiniteMetricSpace& metric, PointId x, const GeodesicSegment& sigma) {
  std::vector<PointId> out;
  for (std::size_t i : projection_indices(metric, x, sigma)) out.push_back(sigma.points[i]);
  return out;
}

std::size_t projection_extent(const FiniteMetricSpace& metric, const std::vector<PointId>& curve,
                              const GeodesicSegment& sigma) {
  if (curve.empty()) throw InputError("projection extent of an empty curve");
  std::size_t lo = std::numeric_limits<std::size_t>::max();
  std::size_t hi = 0;
  for (PointId x : curve) {
    auto idx = projection_indices(metric, x, sigma);
    lo = std::min(lo, idx.front());
    hi = std::max(hi, idx.back());
  }
  return hi - lo;
}

// ---- builders ----

std::size_t tree_ball_size(int degree, int radius) {
  if (degree < 3) throw InputError("tree ball degree must be >= 3");
  if (radius < 1) throw InputError("tree ball radius must be >= 1");
  std::size_t total = 1;
  std::size_t shell = static_cast<std::size_t>(degree);
  for (int r = 1; r <= radius; ++r) {
    total += shell;
    if (total > kMaxBuilderVertices)
      throw ConstructionError("tree ball d=" + std::to_string(degree) + " R=" + std::to_string(radius) +
                              " exceeds the vertex cap");
    shell *= static_cast<std::size_t>(degree - 1);
  }
  return total;
}

Graph build_tree_ball(int degree, int radius) {
  tree_ball_size(degree, radius);
  Graph g(1);
  std::vector<PointId> frontier{0};
  for (int depth = 1; depth <= radius; ++depth) {
    std::vector<PointId> next;
    for (PointId parent : frontier) {
      int children = parent == 0 ? degree : degree - 1;
      for (int k = 0; k < children; ++k) {
        PointId child = g.add_vertex();
        g.add_edge(parent, child);
        next.push_back(child);
      }
    }
    frontier = std::move(next);
  }
  return g;
}

Graph build_random_tree(std::size_t vertex_count, std::uint64_t seed) {
  if (vertex_count == 0) throw InputError("random tree needs at least one vertex");
  if (vertex_count > kMaxBuilderVertices) throw ConstructionError("random tree exceeds the vertex cap");
  std::mt19937_64 rng(seed);
  Graph g(vertex_count);
  for (PointId v = 1; v < vertex_count; ++v) {
    std::uniform_int_distribution<PointId> parent(0, v - 1);
    g.add_edge(parent(rng), v);
  }
  return g;
}

Graph build_control(ControlKind kind, int size) {
  if (size < 2) throw InputError("control graph size must be >= 2");
  switch (kind) {
  case ControlKind::path: {
    Graph g(static_cast<std::size_t>(size));
    for (PointId v = 0; v + 1 < static_cast<PointId>(size); ++v) g.add_edge(v, v + 1);
    return g;
  }
  case ControlKind::cycle: {
    if (size < 3) throw InputError("cycle needs at least 3 vertices");
    Graph g(static_cast<std::size_t>(size));
    for (PointId v = 0; v < static_cast<PointId>(size); ++v) g.add_edge(v, (v + 1) % size);
    return g;
  }
  case ControlKind::grid: {
    const auto s = static_cast<std::size_t>(size);
    if (s * s > kMaxBuilderVertices) throw ConstructionError("grid exceeds the vertex cap");
    Graph g(s * s);
    auto id = [s](std::size_t r, std::size_t c) { return static_cast<PointId>(r * s + c); };
    for (std::size_t r = 0; r < s; ++r)
      for (std::size_t c = 0; c < s; ++c) {
        if (c + 1 < s) g.add_edge(id(r, c), id(r, c + 1));
        if (r + 1 < s) g.add_edge(id(r, c), id(r + 1, c));
      }
    return g;
  }
  }
  throw InputError("unknown control kind");
}

// ---- edge lists ----

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra) || u < 0 || v < 0 ||
        u > std::numeric_limits<PointId>::max() / 2 || v > std::numeric_limits<PointId>::max() / 2)
      throw InputError("edge list line " + std::to_string(line_no) + ": expected two non-negative ids");
    edges.emplace_back(static_cast<PointId>(u), static_cast<PointId>(v));
    n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  if (n > kMaxBuilderVertices) throw InputError("edge list exceeds the vertex cap");
  Graph g = Graph::from_edges(n, edges);
  g.require_connected();
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

} // namespace hypermorse
