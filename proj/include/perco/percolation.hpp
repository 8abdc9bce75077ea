#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "perco/graph.hpp"
#include "perco/rng.hpp"

namespace perco {

/// Open/closed state of every edge, as a bit vector indexed by edge index.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::size_t num_edges, bool open = false);

  /// Bit e of `bits` is edge e. Requires num_edges <= 64.
  static Configuration from_bits(std::size_t num_edges, std::uint64_t bits);

  std::size_t size() const { return size_; }
  bool operator[](std::size_t e) const { return (words_[e >> 6] >> (e & 63)) & 1U; }
  void set(std::size_t e, bool open) {
    const auto mask = std::uint64_t{1} << (e & 63);
    if (open)
      words_[e >> 6] |= mask;
    else
      words_[e >> 6] &= ~mask;
  }
  std::size_t count() const;

  /// Requires size() <= 64.
  std::uint64_t bits() const;
  /// Edge 0 is the least significant bit of the last hex digit.
  std::string hex() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Vertex membership mask.
using VertexSet = std::vector<char>;

/// Each edge independently open with probability p_e.
Configuration sample_config(const MixedPlanarGraph& g, Rng& rng);

/// Vertices reachable from `sources` along open edges, respecting orientation.
VertexSet reachable(const MixedPlanarGraph& g, const Configuration& omega, std::span<const int> sources);

/// Vertices that reach `targets` along open edges.
VertexSet coreachable(const MixedPlanarGraph& g, const Configuration& omega, std::span<const int> targets);

/// Whether `to` is reachable from `from` through vertices not in `blocked`.
bool reaches_avoiding(const MixedPlanarGraph& g, const Configuration& omega, int from, int to,
                      const VertexSet& blocked);

/// Reusable breadth-first search buffers for hot loops.
class Reacher {
 public:
  explicit Reacher(const MixedPlanarGraph& g);
  /// Marks reachable vertices; result valid until the next call.
  const VertexSet& from(const Configuration& omega, std::span<const int> sources);

 private:
  const MixedPlanarGraph* g_;
  VertexSet seen_;
  std::vector<int> queue_;
};

// ---------------------------------------------------------------------------

struct Path {
  std::vector<int> vertices;  // v0 .. vk
  std::vector<int> edges;     // edges[i] runs vertices[i] -> vertices[i+1]

  bool empty() const { return vertices.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
};

enum class Side { Left, Right };

/// Extreme open self-avoiding path from u to w: the greedy hand rule with a
/// reachability lookahead. At each vertex the open out-edges are scanned
/// clockwise (Left) or counterclockwise (Right) starting just past the edge
/// back to the previous vertex; at u the scan starts past the boundary edge
/// to u's counterclockwise (Left) or clockwise (Right) neighbour, which is
/// the same as entering from the outer face. The first edge whose head still
/// reaches w while avoiding visited vertices is taken.
/// Returns nullopt iff no open u -> w path exists.
std::optional<Path> extreme_path(const MixedPlanarGraph& g, const BoundaryCycle& C, const Configuration& omega,
                                 int u, int w, Side side);

inline std::optional<Path> extreme_path(const NormalizedGraph& ng, const Configuration& omega, Side side) {
  return extreme_path(ng.graph, ng.cycle, omega, ng.u, ng.w, side);
}

enum class EdgeSide : std::uint8_t { OnPath, Left, Right };

/// E(pi) / E_L(pi) / E_R(pi) as a per-edge label.
struct PathPartition {
  std::vector<EdgeSide> side;

  std::vector<int> edges_with(EdgeSide s) const;
  std::vector<int> on_path() const { return edges_with(EdgeSide::OnPath); }
  std::vector<int> left() const { return edges_with(EdgeSide::Left); }
  std::vector<int> right() const { return edges_with(EdgeSide::Right); }
};

/// Classifies every edge as on, left of, or right of a path between two
/// outer-boundary vertices. Both orientations of a segment used by the path
/// are on the path; the rest inherit the side of their bounded faces, found
/// by flooding the face adjacency without crossing the path.
PathPartition partition_edges(const MixedPlanarGraph& g, const Path& pi);

/// Both extreme paths of a configuration and their partitions.
struct Extremes {
  Path left;
  Path right;
  PathPartition left_partition;
  PathPartition right_partition;
};

/// Throws Error(Domain) when omega has no open u -> w path.
Extremes extremes(const NormalizedGraph& ng, const Configuration& omega);

/// Whether hat is more leftish than omega (both must lie in Gamma).
bool is_more_leftish(const NormalizedGraph& ng, const Configuration& hat, const Configuration& omega);
bool is_more_leftish(const Configuration& hat, const Extremes& hat_x, const Configuration& omega,
                     const Extremes& omega_x);

}  // namespace perco
