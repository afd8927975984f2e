#include "hypermorse/errors.hpp"
#include "hypermorse/graph_spaces.hpp"

#include <numeric>
#include <string>

namespace hypermorse {

namespace {

struct Slots {
  std::vector<std::size_t> parent;
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Grows one ring of faces around the current boundary cycle.
//
// Every boundary vertex b with f incident faces needs q - f more, which means
// q - f - 1 new edges ("spokes") leaving b outward. Between two consecutive
// spokes of the same vertex sits a face touching the old patch only at b.
// Between the last spoke of one spoked vertex and the first spoke of the next
// sits a face running along the boundary through the saturated (spoke-free)
// vertices in between. When such a face already has p - 1 vertices on the old
// boundary, its two spokes share their outer endpoint.
std::vector<PointId> grow_ring(Graph& g, std::vector<int>& faces, const std::vector<PointId>& boundary, int p,
                               int q, std::size_t& face_total) {
  const std::size_t m = boundary.size();
  std::vector<int> spokes(m);
  for (std::size_t i = 0; i < m; ++i) {
    spokes[i] = q - faces[boundary[i]] - 1;
    if (spokes[i] < 0) throw ConstructionError("tessellation boundary vertex already saturated");
  }
  std::size_t start = 0;
  while (start < m && spokes[start] == 0) ++start;
  if (start == m) throw ConstructionError("tessellation boundary has no free vertex");

  std::vector<std::size_t> spoked;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t i = (start + k) % m;
    if (spokes[i] > 0) spoked.push_back(i);
  }
  const std::size_t count = spoked.size();
  if (count < 2) throw ConstructionError("tessellation layer degenerates (single spoked vertex)");

  // Slot numbering: all spokes of spoked[0], then spoked[1], ...
  std::vector<std::size_t> first_slot(count + 1, 0);
  for (std::size_t j = 0; j < count; ++j) first_slot[j + 1] = first_slot[j] + spokes[spoked[j]];
  const std::size_t slot_total = first_slot[count];

  std::vector<int> run_new(count);
  Slots slots{std::vector<std::size_t>(slot_total)};
  std::iota(slots.parent.begin(), slots.parent.end(), 0);
  for (std::size_t j = 0; j < count; ++j) {
    std::size_t next = spoked[(j + 1) % count];
    std::size_t gap = (next + m - spoked[j]) % m;
    int on_boundary = static_cast<int>(gap) + 1;
    run_new[j] = p - on_boundary - 2;
    if (run_new[j] < -1)
      throw ConstructionError("tessellation face along the boundary would exceed " + std::to_string(p) + " vertices");
    if (run_new[j] == -1) slots.unite(first_slot[j + 1] - 1, first_slot[(j + 1) % count]);
  }

  std::vector<PointId> slot_vertex(slot_total, 0);
  std::vector<bool> assigned(slot_total, false);
  std::vector<int> class_size(slot_total, 0);
  for (std::size_t s = 0; s < slot_total; ++s) ++class_size[slots.find(s)];
  auto vertex_of = [&](std::size_t s) {
    std::size_t root = slots.find(s);
    if (!assigned[root]) {
      slot_vertex[root] = g.add_vertex();
      faces.push_back(class_size[root] + 1);
      assigned[root] = true;
    }
    return slot_vertex[root];
  };
  auto fresh = [&] {
    PointId v = g.add_vertex();
    faces.push_back(1);
    return v;
  };

  std::vector<PointId> ring;
  auto emit = [&](PointId v) {
    if (!ring.empty() && ring.back() == v) return;
    if (!ring.empty()) g.add_edge(ring.back(), v);
    ring.push_back(v);
  };

  for (std::size_t j = 0; j < count; ++j) {
    const PointId b = boundary[spoked[j]];
    for (int k = 0; k < spokes[spoked[j]]; ++k) {
      PointId tip = vertex_of(first_slot[j] + static_cast<std::size_t>(k));
      g.add_edge(b, tip);
      if (k > 0) ++face_total;
      emit(tip);
      if (k + 1 < spokes[spoked[j]])
        for (int t = 0; t < p - 3; ++t) emit(fresh());
    }
    for (int t = 0; t < run_new[j]; ++t) emit(fresh());
    ++face_total;
    // The run face ends at the first spoke of the next vertex, emitted on the next pass.
  }
  if (ring.size() > 1 && ring.back() != ring.front()) {
    g.add_edge(ring.back(), ring.front());
  } else if (ring.size() > 1) {
    ring.pop_back();
  }
  for (PointId b : boundary) faces[b] = q;
  return ring;
}

} // namespace

TessellationPatch build_tessellation(int p, int q, int layers) {
  if (p < 3 || q < 3) throw InputError("tessellation needs p >= 3 and q >= 3");
  if (layers < 1) throw InputError("tessellation needs at least one layer");
  // 1/p + 1/q < 1/2  <=>  2(p + q) < pq
  if (2 * (p + q) >= p * q)
    throw InputError("{" + std::to_string(p) + "," + std::to_string(q) + "} is not of hyperbolic type");

  TessellationPatch patch;
  Graph& g = patch.graph;
  std::vector<int> faces;
  std::vector<PointId> boundary;
  for (int i = 0; i < p; ++i) {
    boundary.push_back(g.add_vertex());
    faces.push_back(1);
  }
  for (int i = 0; i < p; ++i) g.add_edge(boundary[i], boundary[(i + 1) % p]);
  patch.boundary_cycles.push_back(boundary);

  std::size_t face_total = 1;
  for (int layer = 2; layer <= layers; ++layer) {
    boundary = grow_ring(g, faces, boundary, p, q, face_total);
    if (g.vertex_count() > kMaxBuilderVertices) throw ConstructionError("tessellation patch exceeds the vertex cap");
    patch.boundary_cycles.push_back(boundary);
  }
  patch.face_count = face_total;
  return patch;
}

Graph build_tessellation_patch(int p, int q, int layers) { return build_tessellation(p, q, layers).graph; }

} // namespace hypermorse
