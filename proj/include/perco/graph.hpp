#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "perco/rational.hpp"

namespace perco {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// ---------------------------------------------------------------------------
// Graph description (what a spec file holds). Vertex references are ids.

struct VertexSpec {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
};

struct EdgeSpec {
  int id = 0;
  int tail = 0;
  int head = 0;
  bool oriented = true;
  Rational p;
};

enum class Role { U, A, W, B };

char role_letter(Role r);

struct CycleSpec {
  std::vector<int> vertices;  // clockwise
  std::vector<Role> roles;    // parallel to vertices
  std::vector<int> U;
  std::vector<int> W;
};

struct GraphSpec {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  std::optional<CycleSpec> cycle;
};

// ---------------------------------------------------------------------------
// Validated graph. Everything below uses dense indices: vertex index in
// [0, num_vertices()), edge index in [0, num_edges()).

struct Vertex {
  int id = 0;
  Point pos;
};

struct Edge {
  int id = 0;
  int tail = 0;  // vertex index
  int head = 0;  // vertex index
  bool oriented = true;
  Rational p;
  double p_approx = 0.0;  // p rounded to double, for sampling
};

/// One drawn straight segment. Every edge between the same two vertices
/// (either orientation, or undirected) shares it. a < b.
struct Segment {
  int a = 0;
  int b = 0;
  std::vector<int> edges;
};

/// Traversal step out of a vertex: edge index and the vertex it leads to.
struct Arc {
  int edge = 0;
  int to = 0;
};

/// A dart is a segment traversed in one direction: dart = 2*segment + dir,
/// dir 0 running a->b and dir 1 running b->a.
inline int dart_of(int segment, bool reversed) { return 2 * segment + (reversed ? 1 : 0); }
inline int dart_segment(int dart) { return dart >> 1; }
inline int dart_reverse(int dart) { return dart ^ 1; }

/// Per-vertex counterclockwise order of outgoing darts, starting from the
/// positive x axis.
class RotationSystem {
 public:
  RotationSystem() = default;
  RotationSystem(std::vector<std::vector<int>> order, std::size_t num_darts);

  std::span<const int> around(int vertex) const { return order_[vertex]; }
  int position(int dart) const { return position_[dart]; }

  /// Next dart counterclockwise around the origin of `dart`.
  int ccw_next(int origin, int dart) const;
  /// Next dart clockwise around the origin of `dart`.
  int cw_next(int origin, int dart) const;

 private:
  std::vector<std::vector<int>> order_;
  std::vector<int> position_;
};

struct Faces {
  std::vector<std::vector<int>> boundary;  // dart cycles, face on the left of each dart
  std::vector<int> face_of_dart;
  std::vector<double> signed_area;
  int outer = 0;

  std::size_t size() const { return boundary.size(); }
  bool bounded(int face) const { return face != outer; }
};

class MixedPlanarGraph {
 public:
  MixedPlanarGraph() = default;

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_segments() const { return segments_.size(); }

  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Segment> segments() const { return segments_; }
  const Vertex& vertex(int v) const { return vertices_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }
  const Segment& segment(int s) const { return segments_[s]; }

  int segment_of(int edge) const { return edge_segment_[edge]; }
  /// Segment joining two vertices, or -1.
  int segment_between(int x, int y) const;

  int dart_origin(int dart) const;
  int dart_target(int dart) const;
  /// Dart leaving `from` along segment s.
  int dart_from(int segment, int from) const;

  /// Arcs that can be traversed out of v (directed edges with tail v, and
  /// undirected edges incident to v).
  std::span<const Arc> out_arcs(int v) const { return out_arcs_[v]; }
  std::span<const Arc> in_arcs(int v) const { return in_arcs_[v]; }

  const RotationSystem& rotation() const { return rotation_; }
  const Faces& faces() const { return faces_; }

  /// Vertex index for an external id, or -1.
  int index_of(int id) const;
  /// Edge index for an external id, or -1.
  int edge_index_of(int id) const;

  bool all_directed() const;
  int max_vertex_id() const;
  int max_edge_id() const;

  /// Round trip back to a description.
  GraphSpec to_spec() const;

 private:
  friend MixedPlanarGraph build_graph(const GraphSpec& spec, bool require_planar);

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Segment> segments_;
  std::vector<int> edge_segment_;
  std::vector<std::vector<Arc>> out_arcs_;
  std::vector<std::vector<Arc>> in_arcs_;
  std::unordered_map<int, int> index_of_id_;
  std::unordered_map<int, int> edge_index_of_id_;
  std::unordered_map<long long, int> segment_of_pair_;
  RotationSystem rotation_;
  Faces faces_;
};

/// Validates a description and builds the graph with its rotation system and
/// faces. Throws Error on duplicate ids or coordinates, p outside [0,1],
/// self-loops, disconnected graphs, and (when require_planar) crossings.
MixedPlanarGraph build_graph(const GraphSpec& spec, bool require_planar = true);

/// Counterclockwise angular order of darts around each vertex.
RotationSystem rotation_system(const MixedPlanarGraph& g);

/// Face traversal of the rotation system. The outer face is the one with
/// negative signed area (or the only face, for trees).
Faces enumerate_faces(const MixedPlanarGraph& g);

/// Cyclic vertex sequence of the outer face, in clockwise order.
std::vector<int> outer_face_vertices(const MixedPlanarGraph& g);

// ---------------------------------------------------------------------------

/// Face-bounding cycle with u/a/w/b role blocks, in clockwise order.
class BoundaryCycle {
 public:
  BoundaryCycle() = default;

  std::span<const int> vertices() const { return vertices_; }
  std::span<const Role> roles() const { return roles_; }
  std::span<const int> U() const { return U_; }
  std::span<const int> W() const { return W_; }
  std::size_t size() const { return vertices_.size(); }

  /// Position of a vertex on the cycle, or -1.
  int position(int v) const;
  bool contains(int v) const { return position(v) >= 0; }
  Role role_of(int v) const;

  int successor(int v) const;    // clockwise
  int predecessor(int v) const;  // clockwise

  /// Vertices of the a-block (resp. b-block) in clockwise order.
  std::vector<int> block(Role r) const;

  /// Segments on the clockwise walk along the cycle from x to y (empty when
  /// x == y). This is the arc [x, y].
  std::vector<int> arc_segments(int x, int y) const;
  /// Segment index for each cycle step i -> i+1.
  std::span<const int> segments() const { return segments_; }

 private:
  friend BoundaryCycle make_cycle(const MixedPlanarGraph& g, const CycleSpec& spec);
  friend BoundaryCycle make_cycle_from_indices(const MixedPlanarGraph& g,
                                               std::vector<int> vertices,
                                               std::vector<Role> roles, std::vector<int> U,
                                               std::vector<int> W);

  std::vector<int> vertices_;
  std::vector<Role> roles_;
  std::vector<int> U_;
  std::vector<int> W_;
  std::vector<int> segments_;
  std::unordered_map<int, int> position_;
};

/// Validates the cycle against g: consecutive vertices adjacent, contiguous
/// role blocks in cyclic order u,a,w,b, U/W inside their blocks, and the
/// cycle equal to the clockwise outer face boundary.
BoundaryCycle make_cycle(const MixedPlanarGraph& g, const CycleSpec& spec);
BoundaryCycle make_cycle_from_indices(const MixedPlanarGraph& g, std::vector<int> vertices,
                                      std::vector<Role> roles, std::vector<int> U,
                                      std::vector<int> W);

CycleSpec to_cycle_spec(const MixedPlanarGraph& g, const BoundaryCycle& c);

// ---------------------------------------------------------------------------

struct NormalizedGraph {
  MixedPlanarGraph graph;
  BoundaryCycle cycle;
  int u = 0;  // source vertex index
  int w = 0;  // target vertex index
  /// For each edge of `graph`: the originating edge index in the input, or
  /// -1 for apex edges and added zero-probability reverses.
  std::vector<int> origin_edge;
};

/// Reduces (g, C) to a graph where every edge is directed, every (x,y) has a
/// partner (y,x), and U, W are single vertices. Original vertices keep their
/// indices; apex vertices are appended.
NormalizedGraph normalize(const MixedPlanarGraph& g, const BoundaryCycle& C);

}  // namespace perco

namespace perco {

/// build_graph + make_cycle + normalize. Throws Error(Input) if the
/// description has no boundary cycle.
NormalizedGraph normalize_spec(const GraphSpec& spec);

}  // namespace perco
