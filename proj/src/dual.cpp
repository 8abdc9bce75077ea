#include "perco/dual.hpp"

#include <tuple>

#include "perco/error.hpp"

namespace perco {

std::string to_string(const DualConvention& c) {
  std::string s = c.crossing == CrossingOrientation::LeftToRight ? "left-to-right" : "right-to-left";
  s += c.reading == CycleReading::Clockwise ? ",clockwise" : ",counterclockwise";
  s += c.arc == ArcChoice::FromSource ? ",S=[u,x]" : ",S=[x,u]";
  return s;
}

std::vector<DualConvention> all_conventions() {
  std::vector<DualConvention> out;
  for (auto crossing : {CrossingOrientation::LeftToRight, CrossingOrientation::RightToLeft})
    for (auto reading : {CycleReading::Clockwise, CycleReading::Counterclockwise})
      for (auto arc : {ArcChoice::FromSource, ArcChoice::ToSource}) out.push_back({crossing, reading, arc});
  return out;
}

std::string to_string(DualityVerdict v) {
  switch (v) {
    case DualityVerdict::HoldsAsStated: return "holds-as-stated";
    case DualityVerdict::HoldsComplemented: return "holds-complemented";
    case DualityVerdict::Fails: return "fails";
  }
  return "?";
}

DualGraph build_dual(const NormalizedGraph& ng, const DualConvention& convention) {
  const auto& g = ng.graph;
  const auto& F = g.faces();
  DualGraph H;
  H.convention_ = convention;
  H.face_vertex_.assign(F.size(), -1);
  H.boundary_vertex_.assign(g.num_segments(), -1);

  for (std::size_t f = 0; f < F.size(); ++f) {
    if (!F.bounded(static_cast<int>(f))) continue;
    Point c{0, 0};
    for (int d : F.boundary[f]) {
      c.x += g.vertex(g.dart_origin(d)).pos.x / static_cast<double>(F.boundary[f].size());
      c.y += g.vertex(g.dart_origin(d)).pos.y / static_cast<double>(F.boundary[f].size());
    }
    H.face_vertex_[f] = static_cast<int>(H.vertices_.size());
    H.vertices_.push_back({DualVertex::Kind::BoundedFace, static_cast<int>(f), -1, c});
  }
  for (int s : ng.cycle.segments()) {
    const int d0 = dart_of(s, false);
    const int outer_dart = F.face_of_dart[d0] == F.outer ? d0 : dart_reverse(d0);
    if (F.face_of_dart[outer_dart] != F.outer)
      throw Error(Error::Kind::Geometry, "boundary edge does not border the outer face");
    if (F.face_of_dart[dart_reverse(outer_dart)] == F.outer)
      throw Error(Error::Kind::Geometry, "boundary edge borders the outer face on both sides");
    const Point p = g.vertex(g.dart_origin(outer_dart)).pos, q = g.vertex(g.dart_target(outer_dart)).pos;
    // the outer face lies to the left of outer_dart
    const Point pos{(p.x + q.x) / 2 - 0.25 * (q.y - p.y), (p.y + q.y) / 2 + 0.25 * (q.x - p.x)};
    H.boundary_vertex_[s] = static_cast<int>(H.vertices_.size());
    H.vertices_.push_back({DualVertex::Kind::Boundary, -1, s, pos});
  }

  H.out_arcs_.resize(H.vertices_.size());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& edge = g.edge(static_cast<int>(e));
    const int s = g.segment_of(static_cast<int>(e));
    const int d = g.dart_from(s, edge.tail);
    const int left_face = F.face_of_dart[d];
    const int right_face = F.face_of_dart[dart_reverse(d)];
    auto vertex_of = [&](int face) {
      if (F.bounded(face)) return H.face_vertex_[face];
      const int b = H.boundary_vertex_[s];
      if (b < 0) throw Error(Error::Kind::Geometry, "edge borders the outer face but is not on the boundary cycle");
      return b;
    };
    if (F.bounded(left_face) && F.bounded(right_face) && H.boundary_vertex_[s] >= 0)
      throw Error(Error::Kind::Geometry, "boundary cycle edge borders two bounded faces");
    int tail = vertex_of(left_face), head = vertex_of(right_face);
    if (convention.crossing == CrossingOrientation::RightToLeft) std::swap(tail, head);
    H.out_arcs_[tail].push_back({static_cast<int>(e), head});
    H.edges_.push_back({tail, head, static_cast<int>(e)});
  }
  return H;
}

BoundarySets boundary_sets(const DualGraph& H, const NormalizedGraph& ng, int x) {
  const auto& C = ng.cycle;
  if (x == ng.u || !C.contains(x)) throw Error(Error::Kind::Domain, "boundary sets need x on the cycle, x != u");
  const auto& conv = H.convention();
  // clockwise arcs [u,x] and [x,u]; a counterclockwise reading swaps them
  auto from_u = C.arc_segments(ng.u, x);
  auto to_u = C.arc_segments(x, ng.u);
  bool swap = conv.reading == CycleReading::Counterclockwise;
  if (conv.arc == ArcChoice::ToSource) swap = !swap;
  if (swap) std::swap(from_u, to_u);
  BoundarySets out;
  for (int s : from_u) out.S.push_back(H.boundary_vertex(s));
  for (int s : to_u) out.T.push_back(H.boundary_vertex(s));
  return out;
}

Configuration dual_config(const DualGraph& H, const Configuration& omega) {
  Configuration star(H.num_edges());
  for (const auto& e : H.edges()) star.set(static_cast<std::size_t>(e.primal), !omega[e.primal]);
  return star;
}

namespace {

bool dual_connects(const DualGraph& H, const Configuration& star, const BoundarySets& sets) {
  std::vector<char> seen(H.num_vertices(), 0);
  std::vector<int> queue;
  for (int s : sets.S) {
    seen[s] = 1;
    queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const Arc& a : H.out_arcs(queue[head]))
      if (!seen[a.to] && star[a.edge]) {
        seen[a.to] = 1;
        queue.push_back(a.to);
      }
  for (int t : sets.T)
    if (seen[t]) return true;
  return false;
}

}  // namespace

DualityVerdict check_duality(const NormalizedGraph& ng, const DualGraph& H, const Configuration& omega, int x) {
  const int sources[] = {ng.u};
  const bool primal = reachable(ng.graph, omega, sources)[x];
  const bool dual = dual_connects(H, dual_config(H, omega), boundary_sets(H, ng, x));
  return primal == dual ? DualityVerdict::HoldsAsStated : DualityVerdict::HoldsComplemented;
}

DualityVerdict DualitySurvey::verdict() const {
  if (equal == checks) return DualityVerdict::HoldsAsStated;
  if (complemented == checks) return DualityVerdict::HoldsComplemented;
  return DualityVerdict::Fails;
}

DualitySurvey survey_duality(const NormalizedGraph& ng, const DualConvention& convention) {
  const auto E = ng.graph.num_edges();
  if (E > 24) throw Error(Error::Kind::Guard, "duality survey is limited to 24 edges");
  const auto H = build_dual(ng, convention);
  std::vector<std::pair<int, BoundarySets>> targets;
  for (int x : ng.cycle.vertices())
    if (x != ng.u) targets.emplace_back(x, boundary_sets(H, ng, x));

  DualitySurvey survey;
  Reacher reacher(ng.graph);
  const int sources[] = {ng.u};
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << E); ++bits) {
    const auto omega = Configuration::from_bits(E, bits);
    const auto star = dual_config(H, omega);
    const auto& reach = reacher.from(omega, sources);
    for (const auto& [x, sets] : targets) {
      const bool primal = reach[x];
      const bool dual = dual_connects(H, star, sets);
      ++survey.checks;
      if (primal == dual)
        ++survey.equal;
      else
        ++survey.complemented;
    }
  }
  return survey;
}

ConventionPin pin_convention(std::span<const NormalizedGraph> graphs) {
  ConventionPin pin;
  std::optional<std::pair<DualConvention, DualityVerdict>> stated, complemented;
  for (const auto& conv : all_conventions()) {
    DualitySurvey total;
    for (const auto& ng : graphs) {
      const auto s = survey_duality(ng, conv);
      total.checks += s.checks;
      total.equal += s.equal;
      total.complemented += s.complemented;
    }
    const auto v = total.verdict();
    pin.table.emplace_back(conv, v);
    if (v == DualityVerdict::HoldsAsStated && !stated) stated.emplace(conv, v);
    if (v == DualityVerdict::HoldsComplemented && !complemented) complemented.emplace(conv, v);
  }
  if (stated)
    std::tie(pin.convention, pin.verdict) = *stated;
  else if (complemented)
    std::tie(pin.convention, pin.verdict) = *complemented;
  return pin;
}

nlohmann::json dual_graph_json(const DualGraph& H, const NormalizedGraph& ng) {
  using json = nlohmann::json;
  json doc;
  doc["convention"] = to_string(H.convention());
  doc["vertices"] = json::array();
  for (std::size_t i = 0; i < H.num_vertices(); ++i) {
    const auto& v = H.vertices()[i];
    json rec{{"id", i}, {"x", v.pos.x}, {"y", v.pos.y}, {"boundary", v.kind == DualVertex::Kind::Boundary}};
    if (v.kind == DualVertex::Kind::Boundary) {
      const auto& seg = ng.graph.segment(v.segment);
      rec["decorates"] = {ng.graph.vertex(seg.a).id, ng.graph.vertex(seg.b).id};
    } else {
      rec["face"] = v.face;
    }
    doc["vertices"].push_back(std::move(rec));
  }
  doc["edges"] = json::array();
  for (std::size_t i = 0; i < H.num_edges(); ++i) {
    const auto& e = H.edges()[i];
    const auto& primal = ng.graph.edge(e.primal);
    doc["edges"].push_back({{"id", i},
                            {"tail", e.tail},
                            {"head", e.head},
                            {"oriented", true},
                            {"p", to_string(Rational(1) - primal.p)},
                            {"primal", primal.id}});
  }
  return doc;
}

}  // namespace perco
