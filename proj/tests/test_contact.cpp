#include <doctest.h>

#include <cmath>

#include "perco/contact.hpp"
#include "perco/error.hpp"
#include "perco/verify.hpp"
#include "support.hpp"

using namespace perco;

namespace {

ContactParams uneven() {
  auto p = ContactParams::homogeneous(2, Rational(1), Rational(1));
  p.infect_right = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(1, 3), Rational(0)};
  p.infect_left = {Rational(0), Rational(2, 3), Rational(1), Rational(1, 4), Rational(1)};
  p.recovery = {Rational(1), Rational(1, 2), Rational(3, 4), Rational(1), Rational(3, 2)};
  return p;
}

}  // namespace

TEST_CASE("homogeneous parameters") {
  const auto p = ContactParams::homogeneous(3, Rational(2), Rational(1));
  CHECK(p.sites() == 7);
  CHECK(p.max_rate() == Rational(2));
  CHECK(p.infect_left.front() == 0);
  CHECK(p.infect_right.back() == 0);
  CHECK_THROWS_AS((void)ContactParams::homogeneous(1, Rational(-1), Rational(1)), Error);
}

TEST_CASE("graphical representation is ordered and has Poisson counts") {
  const auto p = ContactParams::homogeneous(5, Rational(2), Rational(1));
  Rng rng(3);
  double recov = 0, right = 0;
  const int reps = 2000;
  for (int r = 0; r < reps; ++r) {
    const auto gr = simulate_graphical(p, 2.0, rng);
    for (std::size_t i = 1; i < gr.events().size(); ++i) REQUIRE(gr.events()[i - 1].time <= gr.events()[i].time);
    recov += static_cast<double>(gr.marks(0, MarkKind::Recovery).size());
    right += static_cast<double>(gr.marks(0, MarkKind::ArrowRight).size());
    REQUIRE(gr.marks(5, MarkKind::ArrowRight).empty());
  }
  // means 2 and 4, standard errors sqrt(2/2000) and sqrt(4/2000)
  CHECK(std::abs(recov / reps - 2.0) < 4 * std::sqrt(2.0 / reps));
  CHECK(std::abs(right / reps - 4.0) < 4 * std::sqrt(4.0 / reps));
  CHECK_THROWS_AS((void)GraphicalRep(1, 1.0, {{0.5, 0, MarkKind::Recovery}, {0.2, 0, MarkKind::Recovery}}), Error);
}

TEST_CASE("evolve_state matches the allowable-path oracle") {
  Rng rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const int radius = 1 + static_cast<int>(rng() % 3);
    const auto lambda = Rational(static_cast<long>(rng() % 5), 2);
    const auto p = ContactParams::homogeneous(radius, lambda, Rational(1));
    const double t = 0.2 + 2 * uniform01(rng);
    const auto gr = simulate_graphical(p, t, rng);
    SiteConfig eta0(static_cast<std::size_t>(p.sites()));
    for (auto& c : eta0) c = rng() & 1U;
    const double s = t * uniform01(rng);
    REQUIRE(evolve_state(gr, eta0, s) == perco::testing::state_by_allowable_paths(gr, eta0, s));
  }
}

TEST_CASE("discretize_time") {
  CHECK(discretize_time(Rational(1), 3) == Rational(1));
  CHECK(discretize_time(Rational(7, 20), 4) == Rational(1, 2));
  CHECK(discretize_time(Rational(1, 4), 4) == Rational(1, 4));
}

TEST_CASE("discrete diagram structure") {
  const auto p = ContactParams::homogeneous(2, Rational(1), Rational(1));
  CHECK_THROWS_AS((void)build_discrete(p, 1, 1, Rational(1), all_infected(2)), Error);
  const auto d = build_discrete(p, 2, 3, Rational(1, 2), all_infected(2));
  CHECK(d.levels == 2);
  CHECK(d.t_hat == Rational(2, 3));
  CHECK(d.graph.num_vertices() == 5 * 3);
  const auto& g = d.graph;
  CHECK(static_cast<long>(g.num_vertices()) - static_cast<long>(g.num_segments()) +
            static_cast<long>(g.faces().size()) == 2);
  for (const auto& e : g.edges()) {
    CHECK(e.p >= 0);
    CHECK(e.p <= 1);
    const auto& a = g.vertex(e.tail).pos;
    const auto& b = g.vertex(e.head).pos;
    if (a.y == b.y)
      CHECK(e.p == Rational(1, 3));
    else
      CHECK(e.p == Rational(2, 3));
  }
  CHECK(d.cycle.block(Role::A).size() == 2);
  for (int v : d.cycle.block(Role::A)) CHECK(g.vertex(v).pos.x < 0);
  const auto m = build_discrete(p, 2, 3, Rational(1, 2), all_infected(2), BlockLayout::Mirrored);
  // the drawing is reflected, so the a-block holds the sites x > 0
  for (int v : m.cycle.block(Role::A)) {
    CHECK(v % 5 - 2 > 0);
    CHECK(m.graph.vertex(v).pos.x < 0);
  }
  CHECK(m.cycle.block(Role::A).size() == 2);
}

TEST_CASE("transfer-matrix law matches enumeration") {
  for (const auto& params : {ContactParams::homogeneous(1, Rational(1), Rational(1)), uneven()}) {
    const int n = params.radius;
    if (n > 1) {
      // keep the enumeration small: one level
      const auto d = build_discrete(params, n, 2, Rational(1, 2), all_infected(n));
      const auto law = exact_top_law(params, n, 2, Rational(1, 2), all_infected(n));
      std::vector<Statistic> stats;
      for (int x = -n; x <= n; ++x)
        stats.push_back({"x", [&, x](const Configuration& w) { return discrete_state(d, w)[x + n] != 0; }});
      const auto dist = enumerate_measure(d.graph, {}, stats);
      Rational total(0);
      for (const auto& [o, w] : dist.outcomes) CHECK(law(static_cast<Eigen::Index>(o)) == w);
      CHECK(law.sum() == Rational(1));
      continue;
    }
    const auto d = build_discrete(params, 1, 2, Rational(1), all_infected(1));
    const auto law = exact_top_law(params, 1, 2, Rational(1), all_infected(1));
    std::vector<Statistic> stats;
    for (int x = -1; x <= 1; ++x)
      stats.push_back({"x", [&, x](const Configuration& w) { return discrete_state(d, w)[x + 1] != 0; }});
    const auto dist = enumerate_measure(d.graph, {}, stats);
    Rational seen(0);
    for (const auto& [o, w] : dist.outcomes) {
      CHECK(law(static_cast<Eigen::Index>(o)) == w);
      seen += w;
    }
    CHECK(seen == 1);
    CHECK(law.sum() == Rational(1));
  }
}

TEST_CASE("discrete estimates agree with the exact law") {
  const auto params = uneven();
  const auto d = build_discrete(params, 2, 4, Rational(1, 2), all_infected(2));
  const auto law = exact_top_law(params, 2, 4, Rational(1, 2), all_infected(2));
  const int targets[] = {-2, -1, 0, 1, 2};
  const auto est = estimate_joint(d, targets, 20000, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    Rational exact(0);
    for (Eigen::Index s = 0; s < law.size(); ++s)
      if ((s >> i) & 1) exact += law(s);
    const auto [p, se] = est.marginal(i);
    CHECK(std::abs(p - to_double(exact)) < 3 * std::max(se, 1e-3));
  }
}

TEST_CASE("without infection sites evolve independently") {
  const auto params = ContactParams::homogeneous(3, Rational(0), Rational(1));
  const int targets[] = {-1, 0, 1};
  const auto est = estimate_joint(params, all_infected(3), targets, 0.5, 20000, 9);
  const double q = std::exp(-0.5);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto [p, se] = est.marginal(i);
    CHECK(std::abs(p - q) < 4 * se);
  }
  const auto again = estimate_joint(params, all_infected(3), targets, 0.5, 20000, 9);
  CHECK(again.counts == est.counts);
}
