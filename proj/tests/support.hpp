#pragma once

// Independent oracles and generators shared by the unit and acceptance
// tests. Nothing here reuses the library's traversal code.

#include <vector>

#include "perco/contact.hpp"
#include "perco/graph.hpp"
#include "perco/percolation.hpp"
#include "perco/rng.hpp"

namespace perco::testing {

/// Every open self-avoiding path from `from` to `to`, by exhaustive DFS.
std::vector<Path> open_simple_paths(const MixedPlanarGraph& g, const Configuration& omega, int from, int to);

/// x is reachable iff some open self-avoiding path from a source ends at x.
VertexSet reachable_by_paths(const MixedPlanarGraph& g, const Configuration& omega, std::span<const int> sources);

/// Left/right classification by geometry: an edge off the path is left of
/// it iff a point just inside one of its bounded faces lies in the polygon
/// made of the path and the clockwise cycle arc from u to w, walked back.
std::vector<EdgeSide> sides_by_polygon(const MixedPlanarGraph& g, const BoundaryCycle& C, const Path& pi);

/// eta_t by searching allowable space-time paths from every initially
/// infected site.
SiteConfig state_by_allowable_paths(const GraphicalRep& gr, const SiteConfig& eta0, double t);

/// A connected mixed graph (planarity not required) with `edges` distinct
/// vertex pairs, random orientations and p drawn from {1/4, 1/2, 3/4}.
GraphSpec random_mixed_graph(Rng& rng, int vertices, int edges);

/// All-open-where-possible configuration.
Configuration support_max(const MixedPlanarGraph& g);

}  // namespace perco::testing
