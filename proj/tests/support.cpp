#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace perco::testing {

std::vector<Path> open_simple_paths(const MixedPlanarGraph& g, const Configuration& omega, int from, int to) {
  std::vector<Path> out;
  std::vector<char> on(g.num_vertices(), 0);
  Path cur;
  std::function<void(int)> dfs = [&](int v) {
    if (v == to) {
      out.push_back(cur);
      return;
    }
    for (const auto& e : g.edges()) {
      const int idx = static_cast<int>(&e - g.edges().data());
      if (!omega[static_cast<std::size_t>(idx)]) continue;
      int next = -1;
      if (e.tail == v)
        next = e.head;
      else if (!e.oriented && e.head == v)
        next = e.tail;
      if (next < 0 || on[next]) continue;
      on[next] = 1;
      cur.vertices.push_back(next);
      cur.edges.push_back(idx);
      dfs(next);
      cur.vertices.pop_back();
      cur.edges.pop_back();
      on[next] = 0;
    }
  };
  on[from] = 1;
  cur.vertices.push_back(from);
  dfs(from);
  return out;
}

VertexSet reachable_by_paths(const MixedPlanarGraph& g, const Configuration& omega, std::span<const int> sources) {
  VertexSet out(g.num_vertices(), 0);
  for (int s : sources)
    for (std::size_t x = 0; x < g.num_vertices(); ++x)
      if (!out[x] && !open_simple_paths(g, omega, s, static_cast<int>(x)).empty()) out[x] = 1;
  return out;
}

namespace {

bool inside(const std::vector<Point>& poly, Point q) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const auto& a = poly[i];
    const auto& b = poly[j];
    if ((a.y > q.y) != (b.y > q.y) && q.x < (b.x - a.x) * (q.y - a.y) / (b.y - a.y) + a.x) in = !in;
  }
  return in;
}

}  // namespace

std::vector<EdgeSide> sides_by_polygon(const MixedPlanarGraph& g, const BoundaryCycle& C, const Path& pi) {
  const int u = pi.vertices.front(), w = pi.vertices.back();
  std::vector<Point> poly;
  for (int v : pi.vertices) poly.push_back(g.vertex(v).pos);
  // clockwise arc u -> w, walked from w back to u, endpoints excluded
  std::vector<int> arc;
  for (int v = C.successor(u); v != w; v = C.successor(v)) arc.push_back(v);
  for (auto it = arc.rbegin(); it != arc.rend(); ++it) poly.push_back(g.vertex(*it).pos);

  std::set<int> path_segments;
  for (int e : pi.edges) path_segments.insert(g.segment_of(e));
  const auto& F = g.faces();
  std::vector<EdgeSide> out(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const int s = g.segment_of(static_cast<int>(e));
    if (path_segments.count(s)) {
      out[e] = EdgeSide::OnPath;
      continue;
    }
    int d = dart_of(s, false);
    if (!F.bounded(F.face_of_dart[d])) d = dart_reverse(d);
    const Point p = g.vertex(g.dart_origin(d)).pos, q = g.vertex(g.dart_target(d)).pos;
    const double eps = 1e-4;
    const Point probe{(p.x + q.x) / 2 - eps * (q.y - p.y), (p.y + q.y) / 2 + eps * (q.x - p.x)};
    out[e] = inside(poly, probe) ? EdgeSide::Left : EdgeSide::Right;
  }
  return out;
}

SiteConfig state_by_allowable_paths(const GraphicalRep& gr, const SiteConfig& eta0, double t) {
  const int r = gr.radius();
  const auto sites = static_cast<std::size_t>(2 * r + 1);
  std::vector<std::vector<double>> recov(sites);
  std::vector<std::vector<std::pair<double, int>>> arrows(sites);  // time, target
  for (const auto& ev : gr.events()) {
    const auto i = static_cast<std::size_t>(ev.site + r);
    if (ev.kind == MarkKind::Recovery)
      recov[i].push_back(ev.time);
    else
      arrows[i].emplace_back(ev.time, ev.kind == MarkKind::ArrowLeft ? ev.site - 1 : ev.site + 1);
  }
  SiteConfig out(sites, 0);
  std::set<std::pair<int, double>> seen;
  // climb l_x from time s: reach (x, t) unless a * intervenes; branch on arrows
  std::function<void(int, double)> climb = [&](int x, double s) {
    if (!seen.emplace(x, s).second) return;
    const auto i = static_cast<std::size_t>(x + r);
    double stop = t;
    bool healed = false;
    for (double m : recov[i])
      if (m > s && m <= t && (!healed || m < stop)) {
        stop = m;
        healed = true;
      }
    if (!healed) out[i] = 1;
    for (const auto& [tau, y] : arrows[i])
      if (tau > s && (healed ? tau < stop : tau <= t) && std::abs(y) <= r) climb(y, tau);
  };
  for (int x = -r; x <= r; ++x)
    if (eta0[static_cast<std::size_t>(x + r)]) climb(x, 0.0);
  return out;
}

GraphSpec random_mixed_graph(Rng& rng, int vertices, int edges) {
  GraphSpec s;
  std::set<std::pair<int, int>> coords;
  while (static_cast<int>(s.vertices.size()) < vertices) {
    const int x = static_cast<int>(rng() % 16), y = static_cast<int>(rng() % 16);
    if (coords.emplace(x, y).second) s.vertices.push_back({static_cast<int>(s.vertices.size()), double(x), double(y)});
  }
  const Rational probs[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  std::set<std::pair<int, int>> used;
  auto add = [&](int a, int b) {
    if (a == b || !used.emplace(std::min(a, b), std::max(a, b)).second) return false;
    const bool oriented = rng() & 1U;
    if (oriented && (rng() & 1U)) std::swap(a, b);
    s.edges.push_back({static_cast<int>(s.edges.size()), a, b, oriented, probs[rng() % 3]});
    return true;
  };
  for (int v = 1; v < vertices; ++v) add(v, static_cast<int>(rng() % static_cast<std::uint64_t>(v)));
  const int max_pairs = vertices * (vertices - 1) / 2;
  while (static_cast<int>(s.edges.size()) < std::min(edges, max_pairs))
    add(static_cast<int>(rng() % static_cast<std::uint64_t>(vertices)),
        static_cast<int>(rng() % static_cast<std::uint64_t>(vertices)));
  return s;
}

Configuration support_max(const MixedPlanarGraph& g) {
  Configuration c(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) c.set(e, g.edge(static_cast<int>(e)).p > 0);
  return c;
}

}  // namespace perco::testing
