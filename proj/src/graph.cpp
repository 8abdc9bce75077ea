#include "perco/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <set>
#include <utility>

#include "perco/error.hpp"

namespace perco {

char role_letter(Role r) {
  switch (r) {
    case Role::U: return 'u';
    case Role::A: return 'a';
    case Role::W: return 'w';
    case Role::B: return 'b';
  }
  return '?';
}

// ---------------------------------------------------------------------------
// RotationSystem

RotationSystem::RotationSystem(std::vector<std::vector<int>> order, std::size_t num_darts)
    : order_(std::move(order)), position_(num_darts, -1) {
  for (const auto& around : order_)
    for (std::size_t i = 0; i < around.size(); ++i) position_[around[i]] = static_cast<int>(i);
}

int RotationSystem::ccw_next(int origin, int dart) const {
  const auto& around = order_[origin];
  return around[(position_[dart] + 1) % around.size()];
}

int RotationSystem::cw_next(int origin, int dart) const {
  const auto& around = order_[origin];
  const auto n = around.size();
  return around[(position_[dart] + n - 1) % n];
}

// ---------------------------------------------------------------------------
// geometry helpers

namespace {

double cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

int sign(double v) { return (v > 0) - (v < 0); }

bool on_segment(Point p, Point q, Point r) {
  // r collinear with p-q assumed
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

bool segments_intersect(Point p1, Point p2, Point p3, Point p4) {
  const int d1 = sign(cross(p3, p4, p1));
  const int d2 = sign(cross(p3, p4, p2));
  const int d3 = sign(cross(p1, p2, p3));
  const int d4 = sign(cross(p1, p2, p4));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(p3, p4, p1)) return true;
  if (d2 == 0 && on_segment(p3, p4, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, p3)) return true;
  if (d4 == 0 && on_segment(p1, p2, p4)) return true;
  return false;
}

long long pair_key(int a, int b, std::size_t n) {
  if (a > b) std::swap(a, b);
  return static_cast<long long>(a) * static_cast<long long>(n) + b;
}

}  // namespace

// ---------------------------------------------------------------------------
// MixedPlanarGraph

int MixedPlanarGraph::segment_between(int x, int y) const {
  auto it = segment_of_pair_.find(pair_key(x, y, vertices_.size()));
  return it == segment_of_pair_.end() ? -1 : it->second;
}

int MixedPlanarGraph::dart_origin(int dart) const {
  const auto& s = segments_[dart_segment(dart)];
  return (dart & 1) ? s.b : s.a;
}

int MixedPlanarGraph::dart_target(int dart) const {
  const auto& s = segments_[dart_segment(dart)];
  return (dart & 1) ? s.a : s.b;
}

int MixedPlanarGraph::dart_from(int segment, int from) const {
  return dart_of(segment, segments_[segment].a != from);
}

int MixedPlanarGraph::index_of(int id) const {
  auto it = index_of_id_.find(id);
  return it == index_of_id_.end() ? -1 : it->second;
}

int MixedPlanarGraph::edge_index_of(int id) const {
  auto it = edge_index_of_id_.find(id);
  return it == edge_index_of_id_.end() ? -1 : it->second;
}

bool MixedPlanarGraph::all_directed() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.oriented; });
}

int MixedPlanarGraph::max_vertex_id() const {
  int m = 0;
  for (const auto& v : vertices_) m = std::max(m, v.id);
  return m;
}

int MixedPlanarGraph::max_edge_id() const {
  int m = 0;
  for (const auto& e : edges_) m = std::max(m, e.id);
  return m;
}

GraphSpec MixedPlanarGraph::to_spec() const {
  GraphSpec spec;
  for (const auto& v : vertices_) spec.vertices.push_back({v.id, v.pos.x, v.pos.y});
  for (const auto& e : edges_)
    spec.edges.push_back({e.id, vertices_[e.tail].id, vertices_[e.head].id, e.oriented, e.p});
  return spec;
}

MixedPlanarGraph build_graph(const GraphSpec& spec, bool require_planar) {
  using Kind = Error::Kind;
  MixedPlanarGraph g;
  if (spec.vertices.empty()) throw Error(Kind::Input, "graph has no vertices");

  std::set<std::pair<double, double>> coords;
  for (const auto& v : spec.vertices) {
    if (!g.index_of_id_.emplace(v.id, static_cast<int>(g.vertices_.size())).second)
      throw Error(Kind::Input, "duplicate vertex id " + std::to_string(v.id));
    if (!coords.emplace(v.x, v.y).second)
      throw Error(Kind::Geometry, "vertex " + std::to_string(v.id) + " repeats coordinates of another vertex");
    g.vertices_.push_back({v.id, {v.x, v.y}});
  }
  const auto n = g.vertices_.size();
  g.out_arcs_.resize(n);
  g.in_arcs_.resize(n);

  for (const auto& es : spec.edges) {
    const int e = static_cast<int>(g.edges_.size());
    if (!g.edge_index_of_id_.emplace(es.id, e).second)
      throw Error(Kind::Input, "duplicate edge id " + std::to_string(es.id));
    int tail = g.index_of(es.tail);
    int head = g.index_of(es.head);
    if (tail < 0 || head < 0)
      throw Error(Kind::Input, "edge " + std::to_string(es.id) + " references an unknown vertex");
    if (tail == head) throw Error(Kind::Input, "edge " + std::to_string(es.id) + " is a self-loop");
    if (es.p < 0 || es.p > 1)
      throw Error(Kind::Input, "edge " + std::to_string(es.id) + " has probability " + to_string(es.p) +
                                   " outside [0,1]");
    if (!es.oriented && tail > head) std::swap(tail, head);
    g.edges_.push_back({es.id, tail, head, es.oriented, es.p, to_double(es.p)});

    const auto key = pair_key(tail, head, n);
    auto [it, inserted] = g.segment_of_pair_.emplace(key, static_cast<int>(g.segments_.size()));
    if (inserted) g.segments_.push_back({std::min(tail, head), std::max(tail, head), {}});
    g.segments_[it->second].edges.push_back(e);
    g.edge_segment_.push_back(it->second);

    g.out_arcs_[tail].push_back({e, head});
    g.in_arcs_[head].push_back({e, tail});
    if (!es.oriented) {
      g.out_arcs_[head].push_back({e, tail});
      g.in_arcs_[tail].push_back({e, head});
    }
  }

  // connectivity, orientations disregarded
  {
    std::vector<std::vector<int>> nbr(n);
    for (const auto& s : g.segments_) {
      nbr[s.a].push_back(s.b);
      nbr[s.b].push_back(s.a);
    }
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int x : nbr[v])
        if (!seen[x]) {
          seen[x] = 1;
          ++count;
          queue.push_back(x);
        }
    }
    if (count != n) throw Error(Kind::Geometry, "graph is disconnected");
  }

  if (require_planar) {
    const auto& V = g.vertices_;
    const auto& S = g.segments_;
    for (std::size_t i = 0; i < S.size(); ++i) {
      for (std::size_t j = i + 1; j < S.size(); ++j) {
        const auto& s = S[i];
        const auto& t = S[j];
        int shared = -1;
        if (s.a == t.a || s.a == t.b) shared = s.a;
        if (s.b == t.a || s.b == t.b) shared = s.b;
        bool bad = false;
        if (shared >= 0) {
          const int so = s.a == shared ? s.b : s.a;
          const int to = t.a == shared ? t.b : t.a;
          const Point o = V[shared].pos, p = V[so].pos, q = V[to].pos;
          if (sign(cross(o, p, q)) == 0 &&
              (p.x - o.x) * (q.x - o.x) + (p.y - o.y) * (q.y - o.y) > 0)
            bad = true;
        } else {
          bad = segments_intersect(V[s.a].pos, V[s.b].pos, V[t.a].pos, V[t.b].pos);
        }
        if (bad)
          throw Error(Kind::Geometry, "segments " + std::to_string(V[s.a].id) + "-" + std::to_string(V[s.b].id) +
                                          " and " + std::to_string(V[t.a].id) + "-" +
                                          std::to_string(V[t.b].id) + " cross");
      }
      for (std::size_t v = 0; v < V.size(); ++v) {
        const auto& s = S[i];
        if (static_cast<int>(v) == s.a || static_cast<int>(v) == s.b) continue;
        if (sign(cross(V[s.a].pos, V[s.b].pos, V[v].pos)) == 0 && on_segment(V[s.a].pos, V[s.b].pos, V[v].pos))
          throw Error(Kind::Geometry, "vertex " + std::to_string(V[v].id) + " lies on a segment");
      }
    }
  }

  g.rotation_ = rotation_system(g);
  g.faces_ = enumerate_faces(g);

  if (require_planar) {
    const auto lhs = static_cast<long long>(n) - static_cast<long long>(g.segments_.size()) +
                     static_cast<long long>(g.faces_.size());
    if (lhs != 2) throw Error(Kind::Internal, "Euler formula violated: V - E + F = " + std::to_string(lhs));
  }
  return g;
}

RotationSystem rotation_system(const MixedPlanarGraph& g) {
  const auto n = g.num_vertices();
  std::vector<std::vector<std::pair<double, int>>> keyed(n);
  for (std::size_t s = 0; s < g.num_segments(); ++s) {
    const auto& seg = g.segment(static_cast<int>(s));
    const Point a = g.vertex(seg.a).pos, b = g.vertex(seg.b).pos;
    auto angle = [](double dx, double dy) {
      double t = std::atan2(dy, dx);
      return t < 0 ? t + 2 * std::numbers::pi : t;
    };
    keyed[seg.a].emplace_back(angle(b.x - a.x, b.y - a.y), dart_of(static_cast<int>(s), false));
    keyed[seg.b].emplace_back(angle(a.x - b.x, a.y - b.y), dart_of(static_cast<int>(s), true));
  }
  std::vector<std::vector<int>> order(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(keyed[v].begin(), keyed[v].end());
    for (const auto& [angle, dart] : keyed[v]) order[v].push_back(dart);
  }
  return RotationSystem(std::move(order), 2 * g.num_segments());
}

Faces enumerate_faces(const MixedPlanarGraph& g) {
  const auto& rot = g.rotation();
  const std::size_t darts = 2 * g.num_segments();
  Faces f;
  f.face_of_dart.assign(darts, -1);
  for (std::size_t start = 0; start < darts; ++start) {
    if (f.face_of_dart[start] >= 0) continue;
    const int face = static_cast<int>(f.boundary.size());
    std::vector<int> cycle;
    double area = 0.0;
    int d = static_cast<int>(start);
    do {
      if (f.face_of_dart[d] >= 0)
        throw Error(Error::Kind::Internal, "inconsistent face traversal");
      f.face_of_dart[d] = face;
      cycle.push_back(d);
      const Point p = g.vertex(g.dart_origin(d)).pos, q = g.vertex(g.dart_target(d)).pos;
      area += p.x * q.y - q.x * p.y;
      const int back = dart_reverse(d);
      d = rot.cw_next(g.dart_target(d), back);
    } while (d != static_cast<int>(start));
    f.boundary.push_back(std::move(cycle));
    f.signed_area.push_back(area / 2);
  }
  if (f.boundary.empty()) {
    // single vertex: one face, the outer one
    f.boundary.emplace_back();
    f.signed_area.push_back(0.0);
  }
  f.outer = static_cast<int>(std::min_element(f.signed_area.begin(), f.signed_area.end()) - f.signed_area.begin());
  return f;
}

std::vector<int> outer_face_vertices(const MixedPlanarGraph& g) {
  std::vector<int> out;
  for (int d : g.faces().boundary[g.faces().outer]) out.push_back(g.dart_origin(d));
  return out;
}

// ---------------------------------------------------------------------------
// BoundaryCycle

int BoundaryCycle::position(int v) const {
  auto it = position_.find(v);
  return it == position_.end() ? -1 : it->second;
}

Role BoundaryCycle::role_of(int v) const {
  const int i = position(v);
  if (i < 0) throw Error(Error::Kind::Domain, "vertex is not on the boundary cycle");
  return roles_[i];
}

int BoundaryCycle::successor(int v) const {
  const int i = position(v);
  return vertices_[(i + 1) % vertices_.size()];
}

int BoundaryCycle::predecessor(int v) const {
  const int i = position(v);
  const auto n = vertices_.size();
  return vertices_[(i + n - 1) % n];
}

std::vector<int> BoundaryCycle::block(Role r) const {
  // rotate so we start at the first u-vertex following a non-u vertex
  const auto n = vertices_.size();
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (roles_[i] == Role::U && roles_[(i + n - 1) % n] != Role::U) {
      start = i;
      break;
    }
  std::vector<int> out;
  for (std::size_t k = 0; k < n; ++k) {
    const auto i = (start + k) % n;
    if (roles_[i] == r) out.push_back(vertices_[i]);
  }
  return out;
}

std::vector<int> BoundaryCycle::arc_segments(int x, int y) const {
  const int i = position(x), j = position(y);
  if (i < 0 || j < 0) throw Error(Error::Kind::Domain, "arc endpoint is not on the boundary cycle");
  std::vector<int> out;
  const auto n = static_cast<int>(vertices_.size());
  for (int k = i; k != j; k = (k + 1) % n) out.push_back(segments_[k]);
  return out;
}

BoundaryCycle make_cycle_from_indices(const MixedPlanarGraph& g, std::vector<int> vertices,
                                      std::vector<Role> roles, std::vector<int> U, std::vector<int> W) {
  using Kind = Error::Kind;
  BoundaryCycle c;
  const auto n = vertices.size();
  if (n < 3) throw Error(Kind::Geometry, "boundary cycle needs at least 3 vertices");
  if (roles.size() != n) throw Error(Kind::Input, "boundary cycle roles do not match its vertices");
  for (std::size_t i = 0; i < n; ++i)
    if (!c.position_.emplace(vertices[i], static_cast<int>(i)).second)
      throw Error(Kind::Geometry, "boundary cycle repeats a vertex");
  for (std::size_t i = 0; i < n; ++i) {
    const int s = g.segment_between(vertices[i], vertices[(i + 1) % n]);
    if (s < 0)
      throw Error(Kind::Geometry, "boundary cycle vertices " + std::to_string(g.vertex(vertices[i]).id) + " and " +
                                      std::to_string(g.vertex(vertices[(i + 1) % n]).id) + " are not adjacent");
    c.segments_.push_back(s);
  }

  // role blocks: cyclic runs must read u, a?, w, b? exactly once each
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i)
    if (roles[i] == Role::U && roles[(i + n - 1) % n] != Role::U) {
      start = i;
      break;
    }
  if (start == n) throw Error(Kind::Geometry, "boundary cycle needs both a u-block and a w-block");
  std::vector<Role> runs;
  for (std::size_t k = 0; k < n; ++k) {
    const Role r = roles[(start + k) % n];
    if (runs.empty() || runs.back() != r) runs.push_back(r);
  }
  for (std::size_t k = 1; k < runs.size(); ++k)
    if (static_cast<int>(runs[k]) <= static_cast<int>(runs[k - 1]))
      throw Error(Kind::Geometry, "boundary roles must form contiguous blocks in the order u, a, w, b");
  if (std::find(runs.begin(), runs.end(), Role::W) == runs.end())
    throw Error(Kind::Geometry, "boundary cycle needs both a u-block and a w-block");

  if (U.empty() || W.empty()) throw Error(Kind::Input, "U and W must be non-empty");
  for (int v : U)
    if (c.position(v) < 0 || roles[c.position(v)] != Role::U)
      throw Error(Kind::Input, "U must be a subset of the u-block");
  for (int v : W)
    if (c.position(v) < 0 || roles[c.position(v)] != Role::W)
      throw Error(Kind::Input, "W must be a subset of the w-block");

  // the cycle must be the clockwise outer face boundary
  const auto outer = outer_face_vertices(g);
  bool match = outer.size() == n;
  if (match) {
    const auto it = std::find(outer.begin(), outer.end(), vertices[0]);
    match = it != outer.end();
    if (match) {
      const auto off = static_cast<std::size_t>(it - outer.begin());
      for (std::size_t i = 0; i < n && match; ++i) match = outer[(off + i) % n] == vertices[i];
    }
  }
  if (!match)
    throw Error(Kind::Geometry, "boundary cycle is not the clockwise outer face boundary of the drawing");

  std::sort(U.begin(), U.end());
  U.erase(std::unique(U.begin(), U.end()), U.end());
  std::sort(W.begin(), W.end());
  W.erase(std::unique(W.begin(), W.end()), W.end());
  c.vertices_ = std::move(vertices);
  c.roles_ = std::move(roles);
  c.U_ = std::move(U);
  c.W_ = std::move(W);
  return c;
}

BoundaryCycle make_cycle(const MixedPlanarGraph& g, const CycleSpec& spec) {
  auto lookup = [&](int id) {
    const int v = g.index_of(id);
    if (v < 0) throw Error(Error::Kind::Input, "boundary cycle references unknown vertex " + std::to_string(id));
    return v;
  };
  std::vector<int> vs, U, W;
  for (int id : spec.vertices) vs.push_back(lookup(id));
  for (int id : spec.U) U.push_back(lookup(id));
  for (int id : spec.W) W.push_back(lookup(id));
  return make_cycle_from_indices(g, std::move(vs), spec.roles, std::move(U), std::move(W));
}

CycleSpec to_cycle_spec(const MixedPlanarGraph& g, const BoundaryCycle& c) {
  CycleSpec spec;
  for (int v : c.vertices()) spec.vertices.push_back(g.vertex(v).id);
  spec.roles.assign(c.roles().begin(), c.roles().end());
  for (int v : c.U()) spec.U.push_back(g.vertex(v).id);
  for (int v : c.W()) spec.W.push_back(g.vertex(v).id);
  return spec;
}

// ---------------------------------------------------------------------------
// normalize

namespace {

struct ApexPlan {
  Point pos;
  std::vector<int> cycle;  // new clockwise order
  std::vector<Role> roles;
};

// Replaces the stretch of the `role` block spanned by `members` with a new
// apex vertex, index `apex`, placed outside the cycle.
ApexPlan plan_apex(const std::vector<Point>& pos, std::vector<int> cycle, std::vector<Role> roles, Role role,
                   const std::vector<int>& members, int apex) {
  const auto n = cycle.size();
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (roles[i] == role && roles[(i + n - 1) % n] != role) {
      start = i;
      break;
    }
  std::rotate(cycle.begin(), cycle.begin() + static_cast<long>(start), cycle.end());
  std::rotate(roles.begin(), roles.begin() + static_cast<long>(start), roles.end());
  std::size_t first = n, last = 0;
  for (std::size_t i = 0; i < n && roles[i] == role; ++i)
    if (std::find(members.begin(), members.end(), cycle[i]) != members.end()) {
      first = std::min(first, i);
      last = std::max(last, i);
    }

  Point mean{0, 0}, centroid{0, 0};
  for (int v : members) {
    mean.x += pos[v].x / static_cast<double>(members.size());
    mean.y += pos[v].y / static_cast<double>(members.size());
  }
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (int v : cycle) {
    const Point p = pos[v];
    centroid.x += p.x / static_cast<double>(n);
    centroid.y += p.y / static_cast<double>(n);
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  double dx = mean.x - centroid.x, dy = mean.y - centroid.y;
  double len = std::hypot(dx, dy);
  if (len < 1e-12) {
    // outward normal of the chord; the interior lies to the right of a clockwise walk
    const Point p = pos[cycle[first]], q = pos[cycle[last]];
    dx = -(q.y - p.y);
    dy = q.x - p.x;
    len = std::hypot(dx, dy);
  }
  if (len < 1e-12) throw Error(Error::Kind::Geometry, "cannot choose an outward direction for the apex vertex");
  const double dist = std::max(1.0, std::hypot(xmax - xmin, ymax - ymin));

  ApexPlan plan;
  plan.pos = {mean.x + dx / len * dist, mean.y + dy / len * dist};
  for (std::size_t i = 0; i < n; ++i) {
    if (i > first && i < last) continue;
    plan.cycle.push_back(cycle[i]);
    plan.roles.push_back(roles[i]);
    if (i == first) {
      plan.cycle.push_back(apex);
      plan.roles.push_back(role);
    }
  }
  return plan;
}

}  // namespace

NormalizedGraph normalize(const MixedPlanarGraph& g, const BoundaryCycle& C) {
  GraphSpec spec;
  for (const auto& v : g.vertices()) spec.vertices.push_back({v.id, v.pos.x, v.pos.y});
  std::vector<int> origin;
  int next_edge_id = g.max_edge_id() + 1;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& edge = g.edge(static_cast<int>(e));
    const int tail = g.vertex(edge.tail).id, head = g.vertex(edge.head).id;
    spec.edges.push_back({edge.id, tail, head, true, edge.p});
    origin.push_back(static_cast<int>(e));
    if (!edge.oriented) {
      spec.edges.push_back({next_edge_id++, head, tail, true, edge.p});
      origin.push_back(static_cast<int>(e));
    }
  }

  std::vector<int> cycle(C.vertices().begin(), C.vertices().end());
  std::vector<Role> roles(C.roles().begin(), C.roles().end());
  std::vector<int> U(C.U().begin(), C.U().end()), W(C.W().begin(), C.W().end());
  int next_vertex = static_cast<int>(g.num_vertices());
  int next_vertex_id = g.max_vertex_id() + 1;

  auto add_apex = [&](Role role, std::vector<int>& members, bool outward) {
    const int apex = next_vertex++;
    std::vector<Point> pos;
    for (const auto& v : spec.vertices) pos.push_back({v.x, v.y});
    auto plan = plan_apex(pos, cycle, roles, role, members, apex);
    const int apex_id = next_vertex_id++;
    spec.vertices.push_back({apex_id, plan.pos.x, plan.pos.y});
    for (int m : members) {
      const int mid = spec.vertices[m].id;
      if (outward)
        spec.edges.push_back({next_edge_id++, apex_id, mid, true, Rational(1)});
      else
        spec.edges.push_back({next_edge_id++, mid, apex_id, true, Rational(1)});
      origin.push_back(-1);
    }
    cycle = std::move(plan.cycle);
    roles = std::move(plan.roles);
    members = {apex};
  };
  if (U.size() > 1) add_apex(Role::U, U, true);
  if (W.size() > 1) add_apex(Role::W, W, false);

  std::set<std::pair<int, int>> present;
  for (const auto& e : spec.edges) present.emplace(e.tail, e.head);
  const auto base = spec.edges.size();
  for (std::size_t i = 0; i < base; ++i) {
    const auto e = spec.edges[i];
    if (present.emplace(e.head, e.tail).second) {
      spec.edges.push_back({next_edge_id++, e.head, e.tail, true, Rational(0)});
      origin.push_back(-1);
    }
  }

  NormalizedGraph out;
  try {
    out.graph = build_graph(spec, true);
  } catch (const Error& err) {
    if (err.kind() == Error::Kind::Geometry)
      throw Error(Error::Kind::Geometry, std::string("apex placement failed: ") + err.what());
    throw;
  }
  out.cycle = make_cycle_from_indices(out.graph, std::move(cycle), std::move(roles), U, W);
  out.u = U.front();
  out.w = W.front();
  out.origin_edge = std::move(origin);
  return out;
}

}  // namespace perco

namespace perco {

NormalizedGraph normalize_spec(const GraphSpec& spec) {
  if (!spec.cycle) throw Error(Error::Kind::Input, "graph spec has no boundary cycle");
  const auto g = build_graph(spec);
  return normalize(g, make_cycle(g, *spec.cycle));
}

}  // namespace perco
