#include "perco/fixtures.hpp"

namespace perco::fixtures {

namespace {

CycleSpec cycle(std::vector<int> ids, std::vector<Role> roles, std::vector<int> U, std::vector<int> W) {
  return CycleSpec{std::move(ids), std::move(roles), std::move(U), std::move(W)};
}

}  // namespace

GraphSpec square(const Rational& p) {
  GraphSpec s;
  s.vertices = {{0, 0, 1}, {1, 1, 1}, {2, 1, 0}, {3, 0, 0}};
  s.edges = {{0, 0, 1, false, p}, {1, 1, 2, false, p}, {2, 2, 3, false, p}, {3, 3, 0, false, p}};
  s.cycle = cycle({0, 1, 2, 3}, {Role::U, Role::A, Role::W, Role::B}, {0}, {2});
  return s;
}

GraphSpec diamond(const Rational& p) {
  GraphSpec s;
  s.vertices = {{0, 0, 0}, {1, 1, 1}, {2, 2, 0}, {3, 1, -1}};
  s.edges = {{0, 0, 1, true, p}, {1, 1, 2, true, p}, {2, 0, 3, true, p}, {3, 3, 2, true, p}};
  s.cycle = cycle({0, 1, 2, 3}, {Role::U, Role::A, Role::W, Role::B}, {0}, {2});
  return s;
}

GraphSpec diamond_chord(const Rational& p) {
  GraphSpec s = diamond(p);
  s.edges.push_back({4, 1, 3, false, p});
  return s;
}

GraphSpec theta(const Rational& p) {
  GraphSpec s;
  s.vertices = {{0, 0, 0}, {1, 2, 2}, {2, 4, 0}, {3, 2, -2}, {4, 2, 0}};
  s.edges = {{0, 0, 1, false, p}, {1, 1, 2, false, p}, {2, 0, 4, false, p},
             {3, 4, 2, false, p}, {4, 0, 3, false, p}, {5, 3, 2, false, p}};
  s.cycle = cycle({0, 1, 2, 3}, {Role::U, Role::A, Role::W, Role::B}, {0}, {2});
  return s;
}

GraphSpec square_center(const Rational& p) {
  GraphSpec s = square(p);
  s.vertices.push_back({4, 0.5, 0.5});
  for (int k = 0; k < 4; ++k) s.edges.push_back({4 + k, 4, k, false, p});
  return s;
}

GraphSpec grid(int cols, int rows, int u_row, int w_row, const Rational& p) {
  GraphSpec s;
  auto id = [&](int x, int y) { return y * cols + x; };
  for (int y = 0; y < rows; ++y)
    for (int x = 0; x < cols; ++x) s.vertices.push_back({id(x, y), double(x), double(y)});
  int e = 0;
  for (int y = 0; y < rows; ++y)
    for (int x = 0; x < cols; ++x) {
      if (x + 1 < cols) s.edges.push_back({e++, id(x, y), id(x + 1, y), false, p});
      if (y + 1 < rows) s.edges.push_back({e++, id(x, y), id(x, y + 1), false, p});
    }
  CycleSpec c;
  for (int y = 0; y < rows; ++y) {
    c.vertices.push_back(id(0, y));
    c.roles.push_back(Role::U);
  }
  for (int x = 1; x + 1 < cols; ++x) {
    c.vertices.push_back(id(x, rows - 1));
    c.roles.push_back(Role::A);
  }
  for (int y = rows - 1; y >= 0; --y) {
    c.vertices.push_back(id(cols - 1, y));
    c.roles.push_back(Role::W);
  }
  for (int x = cols - 2; x >= 1; --x) {
    c.vertices.push_back(id(x, 0));
    c.roles.push_back(Role::B);
  }
  c.U = {id(0, u_row)};
  c.W = {id(cols - 1, w_row)};
  s.cycle = std::move(c);
  return s;
}

std::vector<Named> duality_suite() {
  return {{"square", square()},
          {"diamond", diamond()},
          {"diamond_chord", diamond_chord()},
          {"theta", theta()},
          {"square_center", square_center()},
          {"grid_3x2", grid(3, 2, 0, 1)}};
}

}  // namespace perco::fixtures
