#include <doctest.h>

#include <cmath>

#include "perco/contact.hpp"
#include "perco/error.hpp"
#include "perco/fixtures.hpp"
#include "perco/verify.hpp"
#include "support.hpp"

using namespace perco;

namespace {

JointDistribution bernoullis(const std::vector<Rational>& p) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::uint64_t, Rational>> w;
  for (std::size_t i = 0; i < p.size(); ++i) labels.push_back("X" + std::to_string(i));
  for (std::uint64_t o = 0; o < (std::uint64_t{1} << p.size()); ++o) {
    Rational q(1);
    for (std::size_t i = 0; i < p.size(); ++i) q *= ((o >> i) & 1U) ? p[i] : Rational(1) - p[i];
    w.emplace_back(o, q);
  }
  return JointDistribution::from_weights(labels, w);
}

Rational weight(const MixedPlanarGraph& g, const Configuration& omega) {
  Rational q(1);
  for (std::size_t e = 0; e < g.num_edges(); ++e) q *= omega[e] ? g.edge(static_cast<int>(e)).p : Rational(1) - g.edge(static_cast<int>(e)).p;
  return q;
}

}  // namespace

TEST_CASE("monotone functions: Dedekind numbers") {
  const int expected[] = {2, 3, 6, 20, 168};
  for (int k = 0; k <= 4; ++k) CHECK(monotone_functions(k).size() == static_cast<std::size_t>(expected[k]));
  CHECK(is_monotone(2, 0b1000));   // AND
  CHECK(is_monotone(2, 0b1110));   // OR
  CHECK_FALSE(is_monotone(1, 0b01));  // NOT
  CHECK_FALSE(is_monotone(2, 0b0110));  // XOR
  CHECK_THROWS_AS((void)monotone_functions(5), Error);
}

TEST_CASE("joint distributions") {
  const auto d = bernoullis({Rational(1, 3), Rational(3, 4)});
  CHECK(d.marginal(0) == Rational(1, 3));
  CHECK(d.marginal(1) == Rational(3, 4));
  Rational total(0);
  for (const auto& [o, w] : d.outcomes) total += w;
  CHECK(total == 1);
  CHECK_THROWS_AS((void)JointDistribution::from_weights({"x"}, {{0, Rational(0)}}), Error);
  CHECK_THROWS_AS((void)JointDistribution::from_weights({"x"}, {{0, Rational(-1)}, {1, Rational(2)}}), Error);
}

TEST_CASE("enumerate_measure on the diamond") {
  const auto ng = normalize_spec(fixtures::diamond());
  const auto& g = ng.graph;
  const std::vector<Statistic> vars{{"u->w", [&](const Configuration& omega) {
                                       const int u = ng.u;
                                       return reachable(g, omega, std::span<const int>(&u, 1))[ng.w] != 0;
                                     }}};
  const auto d = enumerate_measure(g, {}, vars);
  CHECK(d.marginal(0) == Rational(7, 16));
  CHECK(d.condition_probability == 1);

  // conditioning on the upper path being open forces the connection
  const auto upper = enumerate_measure(g, [&](const Configuration& omega) {
    return omega[0] && omega[1];
  }, vars);
  CHECK(upper.condition_probability == Rational(1, 4));
  CHECK(upper.marginal(0) == 1);
  CHECK_THROWS_AS((void)enumerate_measure(g, [](const Configuration&) { return false; }, vars), Error);
}

TEST_CASE("covariance of single variables") {
  const auto d = bernoullis({Rational(1, 3), Rational(1, 2)});
  const std::size_t one[] = {0};
  CHECK(covariance(d, one, 0b10, 0b10) == Rational(2, 9));
  const std::size_t both[] = {0, 1};
  CHECK(covariance(d, both, 0b1010, 0b1100) == 0);  // X0 vs X1
}

TEST_CASE("independent variables are associated") {
  const auto d = bernoullis({Rational(1, 4), Rational(1, 2), Rational(2, 3), Rational(1, 5), Rational(3, 7)});
  const auto rep = check_positive_association(d, 3);
  CHECK(rep.pass());
  CHECK(rep.min_covariance == 0);  // constant functions
  CHECK(rep.subset_size == 3);
  CHECK(rep.subsets_tested == 10);
  CHECK(rep.pairs_tested == 10u * 20 * 20);
  CHECK(rep.identity_mismatches == 0);
  CHECK(rep.product_events_tested);
  CHECK(rep.min_product_gap == 0);
}

TEST_CASE("a variable and its complement are not associated") {
  const auto d = JointDistribution::from_weights({"X", "1-X"}, {{0b01, Rational(1)}, {0b10, Rational(1)}});
  const auto rep = check_positive_association(d, 2);
  CHECK_FALSE(rep.pass());
  CHECK(rep.min_covariance == Rational(-1, 4));
  CHECK(rep.identity_mismatches == 0);
  CHECK(rep.min_product_gap == Rational(-1, 4));
}

TEST_CASE("association given S does not reach T: closed graph") {
  GraphSpec s;
  s.vertices = {{0, 0, 0}, {1, 1, 0}, {2, 2, 0}};
  s.edges = {{0, 0, 1, true, Rational(0)}, {1, 1, 2, false, Rational(0)}};
  const auto g = build_graph(s, false);
  const int S[] = {0}, T[] = {2}, E[] = {0, 1};
  const auto d = theorem3_distribution(g, S, T, E);
  CHECK(d.condition_probability == 1);
  const auto rep = check_positive_association(d, 4);
  CHECK(rep.pass());
  CHECK(rep.min_covariance == 0);
}

TEST_CASE("association given S does not reach T: two-edge path") {
  GraphSpec s;
  s.vertices = {{0, 0, 0}, {1, 1, 0}, {2, 2, 0}};
  s.edges = {{0, 0, 1, true, Rational(1, 2)}, {1, 1, 2, true, Rational(1, 2)}};
  const auto g = build_graph(s, false);
  const int S[] = {0}, T[] = {2}, E[] = {0, 1};
  const auto d = theorem3_distribution(g, S, T, E);
  CHECK(d.condition_probability == Rational(3, 4));
  CHECK(d.marginal(0) == Rational(1, 3));  // X_0: first edge open
  CHECK(d.marginal(1) == 0);               // X_1 would connect S to T
  CHECK(d.marginal(2) == 1);               // Y_0 = 0 always
  CHECK(d.marginal(3) == Rational(2, 3));  // 1 - Y_1
  CHECK(verify_theorem3(g, S, T, E, 4).pass());
  const int bad[] = {0};
  CHECK_THROWS_AS((void)theorem3_distribution(g, S, bad, E), Error);
}

TEST_CASE("edge statistics agree with path enumeration") {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const auto spec = testing::random_mixed_graph(rng, 5, 6);
    const auto g = build_graph(spec, false);
    const int S[] = {0}, T[] = {4};
    std::vector<int> E(g.num_edges());
    for (std::size_t e = 0; e < E.size(); ++e) E[e] = static_cast<int>(e);
    const auto d = theorem3_distribution(g, S, T, E);

    std::vector<Rational> mass(2 * E.size(), Rational(0));
    Rational cond(0);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << E.size()); ++m) {
      Configuration omega(g.num_edges());
      for (std::size_t e = 0; e < E.size(); ++e) omega.set(e, (m >> e) & 1U);
      const auto q = weight(g, omega);
      if (q == 0 || !testing::open_simple_paths(g, omega, 0, 4).empty()) continue;
      cond += q;
      const auto from_s = testing::reachable_by_paths(g, omega, S);
      auto to_t = [&](int v) { return v == 4 || !testing::open_simple_paths(g, omega, v, 4).empty(); };
      for (std::size_t e = 0; e < E.size(); ++e) {
        const auto& ed = g.edge(static_cast<int>(e));
        const bool open = omega[e];
        const bool x = open && (from_s[ed.tail] || (!ed.oriented && from_s[ed.head]));
        const bool y = open && (to_t(ed.head) || (!ed.oriented && to_t(ed.tail)));
        if (x) mass[e] += q;
        if (!y) mass[E.size() + e] += q;
      }
    }
    REQUIRE(cond == d.condition_probability);
    for (std::size_t i = 0; i < mass.size(); ++i) CHECK(d.marginal(i) == mass[i] / cond);
  }
}

TEST_CASE("boundary indicators are associated") {
  for (const auto& spec : {fixtures::square_center(Rational(1, 3)), fixtures::theta(), fixtures::grid(3, 2, 0, 1)}) {
    const auto g = build_graph(spec);
    const auto C = make_cycle(g, *spec.cycle);
    const auto rep = verify_theorem4(g, C, 4);
    CHECK(rep.pass());
    CHECK(rep.identity_mismatches == 0);
  }
  const auto p = ContactParams::homogeneous(1, Rational(1), Rational(1));
  for (auto layout : {BlockLayout::Standard, BlockLayout::Mirrored}) {
    const auto d = build_discrete(p, 1, 2, Rational(1), all_infected(1), layout);
    CHECK(verify_theorem4(d.graph, d.cycle, 4).pass());
  }
}

TEST_CASE("contact indicators around an infected origin are associated") {
  const auto p = ContactParams::homogeneous(2, Rational(1), Rational(1));
  const auto d = theorem2_distribution(p, 2, 3, Rational(1, 2), all_infected(2));
  CHECK(d.arity() == 4);
  CHECK(check_positive_association(d, 4).pass());
}

TEST_CASE("vacancy inequality, exact") {
  const auto p = ContactParams::homogeneous(1, Rational(1), Rational(1));
  const auto r = verify_conjecture1(p, 1, 1, Rational(1), ConjectureMode::ExactDiscrete, 2, 1, 0, 0);
  CHECK(r.pass);
  CHECK(r.exact_lhs <= r.exact_rhs);
  CHECK(r.se == 0.0);

  // without infection the sites evolve independently: equality
  const auto q = ContactParams::homogeneous(2, Rational(0), Rational(1));
  const auto law = exact_top_law(q, 2, 2, Rational(1, 2), all_infected(2));
  const auto r0 = conjecture_from_law(law, 2, 1, 2);
  CHECK(r0.exact_lhs == r0.exact_rhs);
  CHECK(r0.exact_lhs == Rational(1, 8));  // each site vacant with probability 1/2
  CHECK_THROWS_AS((void)conjecture_from_law(law, 2, 3, 1), Error);
}

TEST_CASE("vacancy inequality, Monte Carlo agrees with the discrete law") {
  const auto p = ContactParams::homogeneous(1, Rational(1), Rational(1));
  const auto d = build_discrete(p, 1, 2, Rational(1), all_infected(1));
  const auto law = exact_top_law(p, 1, 2, Rational(1), all_infected(1));
  const auto exact = conjecture_from_law(law, 1, 1, 1);
  const int targets[] = {-1, 0, 1};
  const auto est = estimate_joint(d, targets, 40000, 5);
  const auto mc = conjecture_from_estimate(est, 1, 1);
  CHECK(mc.conditioned > 0);
  CHECK(mc.se_lhs > 0);
  CHECK(std::abs(mc.lhs - exact.lhs) < 4 * mc.se_lhs);
  CHECK(std::abs(mc.rhs - exact.rhs) < 4 * mc.se_rhs);
  CHECK(std::abs((mc.lhs - mc.rhs) - (exact.lhs - exact.rhs)) < 4 * mc.se);
}

TEST_CASE("product measure estimates match enumeration") {
  Rng rng(9);
  const auto spec = testing::random_mixed_graph(rng, 6, 10);
  const auto g = build_graph(spec, false);
  const int src[] = {0};
  const std::vector<Statistic> vars{
      {"0->5", [&](const Configuration& omega) { return reachable(g, omega, src)[5] != 0; }},
      {"0->3", [&](const Configuration& omega) { return reachable(g, omega, src)[3] != 0; }}};
  const auto d = enumerate_measure(g, {}, vars);
  const int reps = 20000;
  double hits0 = 0, hits1 = 0;
  for (int r = 0; r < reps; ++r) {
    const auto omega = sample_config(g, rng);
    const auto reach = reachable(g, omega, src);
    hits0 += reach[5];
    hits1 += reach[3];
  }
  for (auto [i, hits] : {std::pair{0, hits0}, std::pair{1, hits1}}) {
    const double p_exact = to_double(d.marginal(static_cast<std::size_t>(i)));
    const double se = std::sqrt(p_exact * (1 - p_exact) / reps);
    CHECK(std::abs(hits / reps - p_exact) <= 3 * se + 1e-12);
  }
}
