#pragma once

#include "hypermorse/metric_core.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hypermorse {

using Edge = std::pair<PointId, PointId>;

/// Simple undirected graph with unit edge weights. Neighbor lists are kept sorted,
/// which is what makes canonical geodesics deterministic.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

  /// Rejects self-loops, repeated edges and unknown vertices.
  static Graph from_edges(std::size_t vertex_count, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  PointId add_vertex();
  void add_edge(PointId u, PointId v);
  bool has_edge(PointId u, PointId v) const;

  const std::vector<PointId>& neighbors(PointId v) const { return adjacency_.at(v); }
  std::vector<Edge> edges() const;

  bool is_connected() const;
  bool is_tree() const { return is_connected() && edge_count_ + 1 == vertex_count(); }
  /// Throws InputError when the graph is empty or disconnected.
  void require_connected() const;

  /// Unit-weight breadth-first distances from one source; -1 for unreachable.
  std::vector<Distance> bfs(PointId source) const;

private:
  std::vector<std::vector<PointId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Hop metric of a connected graph (one BFS per vertex).
FiniteMetricSpace shortest_path_metric(const Graph& g);

/// Shortest path as a point sequence; dist(points[i], points[j]) = |i - j|.
struct GeodesicSegment {
  std::vector<PointId> points;

  std::size_t length() const { return points.empty() ? 0 : points.size() - 1; }
  PointId front() const { return points.front(); }
  PointId back() const { return points.back(); }
};

/// A connected graph together with its hop metric.
class GeodesicSpace {
public:
  explicit GeodesicSpace(Graph graph);

  const Graph& graph() const { return graph_; }
  const FiniteMetricSpace& metric() const { return metric_; }
  std::size_t size() const { return graph_.vertex_count(); }

  /// Canonical u-v geodesic: from u, always step to the lowest-index neighbor
  /// one unit closer to v (the BFS-parent chain of v's tree with lowest-index ties).
  GeodesicSegment geodesic(PointId u, PointId v) const;

  GeodesicProvider provider() const;

private:
  Graph graph_;
  FiniteMetricSpace metric_;
};

GeodesicSegment canonical_geodesic(const Graph& g, PointId u, PointId v);
GeodesicSegment canonical_geodesic(const GeodesicSpace& space, PointId u, PointId v);

/// Checks the isometric-embedding property pairwise.
bool is_geodesic(const FiniteMetricSpace& metric, const GeodesicSegment& sigma);

/// Positions along sigma (ascending) of every point of sigma nearest to x.
std::vector<std::size_t> projection_indices(const FiniteMetricSpace& metric, PointId x, const GeodesicSegment& sigma);

/// All points of sigma at minimal distance from x, in sigma order.
std::vector<PointId> project_to_geodesic(const FiniteMetricSpace& metric, PointId x, const GeodesicSegment& sigma);

/// Diameter, in index steps along sigma, of the union of the projections of the curve's points.
std::size_t projection_extent(const FiniteMetricSpace& metric, const std::vector<PointId>& curve,
                              const GeodesicSegment& sigma);

// ---- builders ----

/// Ball of radius `radius` around the root (vertex 0) of the d-regular tree.
/// Vertices are numbered breadth-first, children in creation order.
Graph build_tree_ball(int degree, int radius);

/// Closed-form vertex count of build_tree_ball; throws ConstructionError past the cap.
std::size_t tree_ball_size(int degree, int radius);

/// Uniformly random recursive tree: vertex i attaches to a uniform earlier vertex.
Graph build_random_tree(std::size_t vertex_count, std::uint64_t seed);

enum class ControlKind { path, cycle, grid };

/// Path P_size, cycle C_size, or the size x size grid.
Graph build_control(ControlKind kind, int size);

/// Concentric rings of a {p,q} tessellation. boundary_cycles[k] lists, in
/// cyclic order, the outer boundary of the patch after k + 1 layers.
struct TessellationPatch {
  Graph graph;
  std::vector<std::vector<PointId>> boundary_cycles;
  std::size_t face_count = 0;
};

/// Requires 1/p + 1/q < 1/2 and layers >= 1. Layer 1 is a single p-gon.
TessellationPatch build_tessellation(int p, int q, int layers);
Graph build_tessellation_patch(int p, int q, int layers);

/// Upper limit on builder output sizes.
inline constexpr std::size_t kMaxBuilderVertices = 2'000'000;

// ---- edge lists ----

/// One "u v" pair per line, 0-based ids. Blank lines are skipped. Vertex count is
/// max id + 1. The result must be connected.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace hypermorse
