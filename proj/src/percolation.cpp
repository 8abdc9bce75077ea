#include "perco/percolation.hpp"

#include <algorithm>

#include "perco/error.hpp"

namespace perco {

Configuration::Configuration(std::size_t num_edges, bool open)
    : size_(num_edges), words_((num_edges + 63) / 64, open ? ~std::uint64_t{0} : 0) {
  if (open && (num_edges & 63)) words_.back() &= (std::uint64_t{1} << (num_edges & 63)) - 1;
}

Configuration Configuration::from_bits(std::size_t num_edges, std::uint64_t bits) {
  if (num_edges > 64) throw Error(Error::Kind::Guard, "configuration index needs at most 64 edges");
  Configuration c(num_edges);
  if (num_edges > 0) c.words_[0] = num_edges == 64 ? bits : bits & ((std::uint64_t{1} << num_edges) - 1);
  return c;
}

std::size_t Configuration::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

std::uint64_t Configuration::bits() const {
  if (size_ > 64) throw Error(Error::Kind::Guard, "configuration index needs at most 64 edges");
  return words_.empty() ? 0 : words_[0];
}

std::string Configuration::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  const std::size_t nibbles = std::max<std::size_t>(1, (size_ + 3) / 4);
  std::string out(nibbles, '0');
  for (std::size_t k = 0; k < nibbles; ++k) {
    unsigned v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t e = 4 * k + b;
      if (e < size_ && (*this)[e]) v |= 1U << b;
    }
    out[nibbles - 1 - k] = digits[v];
  }
  return out;
}

Configuration sample_config(const MixedPlanarGraph& g, Rng& rng) {
  Configuration c(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) c.set(e, bernoulli(rng, g.edge(static_cast<int>(e)).p_approx));
  return c;
}

// ---------------------------------------------------------------------------

Reacher::Reacher(const MixedPlanarGraph& g) : g_(&g), seen_(g.num_vertices(), 0) { queue_.reserve(g.num_vertices()); }

const VertexSet& Reacher::from(const Configuration& omega, std::span<const int> sources) {
  std::fill(seen_.begin(), seen_.end(), 0);
  queue_.clear();
  for (int s : sources)
    if (!seen_[s]) {
      seen_[s] = 1;
      queue_.push_back(s);
    }
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const int v = queue_[head];
    for (const Arc& a : g_->out_arcs(v))
      if (!seen_[a.to] && omega[a.edge]) {
        seen_[a.to] = 1;
        queue_.push_back(a.to);
      }
  }
  return seen_;
}

VertexSet reachable(const MixedPlanarGraph& g, const Configuration& omega, std::span<const int> sources) {
  Reacher r(g);
  return r.from(omega, sources);
}

VertexSet coreachable(const MixedPlanarGraph& g, const Configuration& omega, std::span<const int> targets) {
  VertexSet seen(g.num_vertices(), 0);
  std::vector<int> queue;
  for (int t : targets)
    if (!seen[t]) {
      seen[t] = 1;
      queue.push_back(t);
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (const Arc& a : g.in_arcs(v))
      if (!seen[a.to] && omega[a.edge]) {
        seen[a.to] = 1;
        queue.push_back(a.to);
      }
  }
  return seen;
}

bool reaches_avoiding(const MixedPlanarGraph& g, const Configuration& omega, int from, int to,
                      const VertexSet& blocked) {
  if (blocked[from]) return false;
  if (from == to) return true;
  VertexSet seen(blocked);
  std::vector<int> queue{from};
  seen[from] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (const Arc& a : g.out_arcs(v)) {
      if (seen[a.to] || !omega[a.edge]) continue;
      if (a.to == to) return true;
      seen[a.to] = 1;
      queue.push_back(a.to);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

std::optional<Path> extreme_path(const MixedPlanarGraph& g, const BoundaryCycle& C, const Configuration& omega,
                                 int u, int w, Side side) {
  if (u == w) throw Error(Error::Kind::Domain, "extreme path needs distinct endpoints");
  if (!C.contains(u)) throw Error(Error::Kind::Domain, "extreme path must start on the boundary cycle");

  VertexSet visited(g.num_vertices(), 0);
  if (!reaches_avoiding(g, omega, u, w, visited)) return std::nullopt;

  const auto& rot = g.rotation();
  Path path;
  path.vertices.push_back(u);
  visited[u] = 1;

  const int toward = side == Side::Left ? C.predecessor(u) : C.successor(u);
  int reference = g.dart_from(g.segment_between(u, toward), u);
  int v = u;
  while (v != w) {
    const auto degree = rot.around(v).size();
    int dart = reference;
    bool moved = false;
    for (std::size_t k = 0; k < degree && !moved; ++k) {
      dart = side == Side::Left ? rot.cw_next(v, dart) : rot.ccw_next(v, dart);
      const int next = g.dart_target(dart);
      if (visited[next]) continue;
      const auto& seg = g.segment(dart_segment(dart));
      int chosen = -1;
      for (int e : seg.edges) {
        const auto& edge = g.edge(e);
        const bool forward = edge.tail == v || !edge.oriented;
        if (forward && omega[e]) {
          chosen = e;
          break;
        }
      }
      if (chosen < 0) continue;
      if (next != w && !reaches_avoiding(g, omega, next, w, visited)) continue;
      path.edges.push_back(chosen);
      path.vertices.push_back(next);
      visited[next] = 1;
      reference = dart_reverse(dart);
      v = next;
      moved = true;
    }
    if (!moved) throw Error(Error::Kind::Internal, "extreme path walk got stuck");
  }
  return path;
}

// ---------------------------------------------------------------------------

std::vector<int> PathPartition::edges_with(EdgeSide s) const {
  std::vector<int> out;
  for (std::size_t e = 0; e < side.size(); ++e)
    if (side[e] == s) out.push_back(static_cast<int>(e));
  return out;
}

PathPartition partition_edges(const MixedPlanarGraph& g, const Path& pi) {
  using Kind = Error::Kind;
  if (pi.vertices.size() < 2 || pi.edges.size() + 1 != pi.vertices.size())
    throw Error(Kind::Domain, "partition needs a path with at least one edge");
  const auto& F = g.faces();

  VertexSet on_outer(g.num_vertices(), 0);
  for (int d : F.boundary[F.outer]) on_outer[g.dart_origin(d)] = 1;
  if (!on_outer[pi.vertices.front()] || !on_outer[pi.vertices.back()])
    throw Error(Kind::Domain, "path endpoints must lie on the outer boundary");

  VertexSet seen(g.num_vertices(), 0);
  std::vector<char> path_segment(g.num_segments(), 0);
  std::vector<std::int8_t> face_side(F.size(), 0);  // 0 unknown, 1 left, 2 right
  std::vector<int> queue;
  auto seed = [&](int face, std::int8_t s) {
    if (!F.bounded(face)) return;
    if (face_side[face] == 0) {
      face_side[face] = s;
      queue.push_back(face);
    } else if (face_side[face] != s) {
      throw Error(Kind::Internal, "face lies on both sides of the path");
    }
  };

  for (std::size_t i = 0; i < pi.edges.size(); ++i) {
    const int x = pi.vertices[i], y = pi.vertices[i + 1];
    const auto& e = g.edge(pi.edges[i]);
    const bool matches = (e.tail == x && e.head == y) || (!e.oriented && e.tail == y && e.head == x);
    if (!matches) throw Error(Kind::Domain, "path edge does not run between consecutive path vertices");
    if (seen[x]) throw Error(Kind::Domain, "path is not self-avoiding");
    seen[x] = 1;
    const int s = g.segment_of(pi.edges[i]);
    path_segment[s] = 1;
    const int d = g.dart_from(s, x);
    seed(F.face_of_dart[d], 1);
    seed(F.face_of_dart[dart_reverse(d)], 2);
  }
  if (seen[pi.vertices.back()]) throw Error(Kind::Domain, "path is not self-avoiding");

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int f = queue[head];
    for (int d : F.boundary[f]) {
      if (path_segment[dart_segment(d)]) continue;
      const int other = F.face_of_dart[dart_reverse(d)];
      if (!F.bounded(other)) continue;
      if (face_side[other] == 0) {
        face_side[other] = face_side[f];
        queue.push_back(other);
      } else if (face_side[other] != face_side[f]) {
        throw Error(Kind::Internal, "face flood crossed the path");
      }
    }
  }

  PathPartition part;
  part.side.resize(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const int s = g.segment_of(static_cast<int>(e));
    if (path_segment[s]) {
      part.side[e] = EdgeSide::OnPath;
      continue;
    }
    std::int8_t label = 0;
    for (int d : {dart_of(s, false), dart_of(s, true)}) {
      const int f = F.face_of_dart[d];
      if (F.bounded(f) && face_side[f] != 0) label = face_side[f];
    }
    if (label == 0) throw Error(Kind::Internal, "edge borders no classified face");
    part.side[e] = label == 1 ? EdgeSide::Left : EdgeSide::Right;
  }
  return part;
}

Extremes extremes(const NormalizedGraph& ng, const Configuration& omega) {
  auto left = extreme_path(ng, omega, Side::Left);
  if (!left) throw Error(Error::Kind::Domain, "configuration has no open u -> w path");
  auto right = extreme_path(ng, omega, Side::Right);
  Extremes x;
  x.left_partition = partition_edges(ng.graph, *left);
  x.right_partition = partition_edges(ng.graph, *right);
  x.left = std::move(*left);
  x.right = std::move(*right);
  return x;
}

bool is_more_leftish(const Configuration& hat, const Extremes& hx, const Configuration& omega, const Extremes& ox) {
  const auto n = hat.size();
  for (std::size_t e = 0; e < n; ++e) {
    // (a) leftmost of hat weakly left of leftmost of omega; rightmost of omega weakly right of rightmost of hat
    if (hx.left_partition.side[e] == EdgeSide::OnPath && ox.left_partition.side[e] == EdgeSide::Right) return false;
    if (ox.right_partition.side[e] == EdgeSide::OnPath && hx.right_partition.side[e] == EdgeSide::Left) return false;
    // (b)
    if (hx.left_partition.side[e] == EdgeSide::Left && hat[e] < omega[e]) return false;
    if (ox.right_partition.side[e] == EdgeSide::Right && hat[e] > omega[e]) return false;
  }
  return true;
}

bool is_more_leftish(const NormalizedGraph& ng, const Configuration& hat, const Configuration& omega) {
  return is_more_leftish(hat, extremes(ng, hat), omega, extremes(ng, omega));
}

}  // namespace perco
