#pragma once

#include <string>
#include <vector>

#include "perco/graph.hpp"

namespace perco::fixtures {

// Small planar instances with boundary cycles, shared by tests and tools.
// All cycles are listed clockwise.

/// u(0,1) a(1,1) w(1,0) b(0,0), four undirected edges.
GraphSpec square(const Rational& p = Rational(1, 2));

/// u(0,0) a(1,1) w(2,0) b(1,-1), directed (u,a) (a,w) (u,b) (b,w).
GraphSpec diamond(const Rational& p = Rational(1, 2));

/// The diamond plus an undirected chord {a,b}: five underlying edges.
GraphSpec diamond_chord(const Rational& p = Rational(1, 2));

/// u(0,0) and w(4,0) joined by three two-edge paths through a(2,2), m(2,0),
/// b(2,-2); undirected.
GraphSpec theta(const Rational& p = Rational(1, 2));

/// The square with an interior vertex c(1/2,1/2) joined to all corners.
GraphSpec square_center(const Rational& p = Rational(1, 2));

/// cols x rows grid of undirected edges at integer points. The left column
/// is the u-block, the right column the w-block, the top row interior the
/// a-block and the bottom row interior the b-block. U is the left-column
/// vertex at height `u_row`, W the right-column vertex at `w_row`.
GraphSpec grid(int cols, int rows, int u_row, int w_row, const Rational& p = Rational(1, 2));

struct Named {
  std::string name;
  GraphSpec spec;
};

/// Graphs used to pin the duality convention.
std::vector<Named> duality_suite();

}  // namespace perco::fixtures
