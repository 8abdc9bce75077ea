#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "perco/graph.hpp"
#include "perco/percolation.hpp"

namespace perco {

/// Direction of e* relative to the sides of e (followed along its direction).
enum class CrossingOrientation : std::uint8_t { LeftToRight, RightToLeft };
/// Direction in which arcs of the boundary cycle are read.
enum class CycleReading : std::uint8_t { Clockwise, Counterclockwise };
/// Which arc feeds S_x: the arc from u to x, or the arc from x to u.
enum class ArcChoice : std::uint8_t { FromSource, ToSource };

struct DualConvention {
  CrossingOrientation crossing = CrossingOrientation::LeftToRight;
  CycleReading reading = CycleReading::Clockwise;
  ArcChoice arc = ArcChoice::FromSource;

  friend bool operator==(const DualConvention&, const DualConvention&) = default;
};

std::string to_string(const DualConvention& c);

/// All eight conventions, the stated one (left-to-right, clockwise, [u,x])
/// first.
std::vector<DualConvention> all_conventions();

enum class DualityVerdict : std::uint8_t { HoldsAsStated, HoldsComplemented, Fails };

std::string to_string(DualityVerdict v);

struct DualVertex {
  enum class Kind : std::uint8_t { BoundedFace, Boundary } kind = Kind::BoundedFace;
  int face = -1;     // bounded-face vertices
  int segment = -1;  // boundary vertices: the boundary segment they decorate
  Point pos;
};

struct DualEdge {
  int tail = 0;
  int head = 0;
  int primal = 0;  // partner edge index in the primal graph
};

/// The dual-like graph H. Dual edge i is the partner of primal edge i.
class DualGraph {
 public:
  std::span<const DualVertex> vertices() const { return vertices_; }
  std::span<const DualEdge> edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  /// Dual vertex of a bounded face, or -1 for the outer face.
  int face_vertex(int face) const { return face_vertex_[face]; }
  /// Boundary vertex s_e for a boundary segment, or -1.
  int boundary_vertex(int segment) const { return boundary_vertex_[segment]; }

  std::span<const Arc> out_arcs(int v) const { return out_arcs_[v]; }

  const DualConvention& convention() const { return convention_; }

 private:
  friend DualGraph build_dual(const NormalizedGraph& ng, const DualConvention& convention);

  std::vector<DualVertex> vertices_;
  std::vector<DualEdge> edges_;
  std::vector<int> face_vertex_;
  std::vector<int> boundary_vertex_;
  std::vector<std::vector<Arc>> out_arcs_;
  DualConvention convention_;
};

/// Builds H: one vertex per bounded face, one s_e per boundary segment, and
/// one dual edge per directed primal edge, crossing it per the convention.
DualGraph build_dual(const NormalizedGraph& ng, const DualConvention& convention);

struct BoundarySets {
  std::vector<int> S;  // dual vertex indices
  std::vector<int> T;
};

/// S_x and T_x for x on the cycle, x != u.
BoundarySets boundary_sets(const DualGraph& H, const NormalizedGraph& ng, int x);

/// omega*(e*) = 1 - omega(e). Applying it twice returns omega.
Configuration dual_config(const DualGraph& H, const Configuration& omega);

/// Compares {u -> x} in omega with {S_x ->* T_x} in omega*.
DualityVerdict check_duality(const NormalizedGraph& ng, const DualGraph& H, const Configuration& omega, int x);

struct DualitySurvey {
  std::uint64_t checks = 0;
  std::uint64_t equal = 0;
  std::uint64_t complemented = 0;

  DualityVerdict verdict() const;
};

/// Runs check_duality over all 2^|E| configurations and every x on the cycle
/// except u. Guarded to 24 edges.
DualitySurvey survey_duality(const NormalizedGraph& ng, const DualConvention& convention);

struct ConventionPin {
  DualConvention convention;
  DualityVerdict verdict = DualityVerdict::Fails;
  std::vector<std::pair<DualConvention, DualityVerdict>> table;  // verdict of every convention
};

/// Surveys every convention on every graph and returns the first convention
/// (in all_conventions() order) with a single verdict on all of them,
/// preferring one where the relation holds as stated.
ConventionPin pin_convention(std::span<const NormalizedGraph> graphs);

/// Export of H in graph-spec style, boundary vertices flagged.
nlohmann::json dual_graph_json(const DualGraph& H, const NormalizedGraph& ng);

}  // namespace perco
