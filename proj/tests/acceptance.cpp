// Acceptance run: one PASS/FAIL line per criterion, with the measured
// quantities and wall time. Exit status is nonzero if any criterion fails.
//   acceptance [criterion ...]   (default: all)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "perco/contact.hpp"
#include "perco/dual.hpp"
#include "perco/duality_convention.hpp"
#include "perco/error.hpp"
#include "perco/fixtures.hpp"
#include "perco/mcmc.hpp"
#include "perco/percolation.hpp"
#include "perco/verify.hpp"
#include "support.hpp"

using namespace perco;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail_if(bool bad, const std::string& why) {
    if (bad) {
      pass = false;
      detail << " [" << why << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

std::size_t underlying_edges(const GraphSpec& s) { return s.edges.size(); }

bool euler_holds(const MixedPlanarGraph& g) {
  return static_cast<long>(g.num_vertices()) - static_cast<long>(g.num_segments()) +
             static_cast<long>(g.faces().size()) ==
         2;
}

const ContactParams kUnit = ContactParams::homogeneous(2, Rational(1), Rational(1));

// The diagrams G_{n,N} of criteria 3 and 6.
const std::pair<int, int> kDiagrams[] = {{1, 1}, {1, 2}, {2, 1}};

// ---------------------------------------------------------------------------

void duality_pin(Outcome& out) {
  std::vector<std::pair<std::string, NormalizedGraph>> graphs;
  for (const auto& named : fixtures::duality_suite()) {
    out.fail_if(underlying_edges(named.spec) > 12, named.name + " has more than 12 edges");
    graphs.emplace_back(named.name, normalize_spec(named.spec));
  }
  const auto d = build_discrete(ContactParams::homogeneous(1, Rational(1), Rational(1)), 1, 2, Rational(1, 2),
                                all_infected(1));
  graphs.emplace_back("diagram(1,2)", normalize(d.graph, d.cycle));

  std::uint64_t checks = 0, exceptions = 0;
  for (const auto& [name, ng] : graphs) {
    const auto s = survey_duality(ng, kPinnedConvention);
    const auto agree = kPinnedVerdict == DualityVerdict::HoldsAsStated ? s.equal : s.complemented;
    checks += s.checks;
    exceptions += s.checks - agree;
    if (s.checks != agree) out.detail << " " << name << ":" << s.checks - agree << "-exceptions";
  }
  out.detail << " graphs=" << graphs.size() << " convention=" << to_string(kPinnedConvention)
             << " verdict=" << to_string(kPinnedVerdict) << " checks=" << checks << " exceptions=" << exceptions;
  out.fail_if(graphs.size() < 6, "fewer than 5 graphs");
  out.fail_if(exceptions != 0, "exceptions");
  out.fail_if(kPinnedVerdict == DualityVerdict::Fails, "no consistent verdict");
}

void random_mixed_suite(Outcome& out) {
  Rng rng(20240601);
  Rational worst(1);
  std::uint64_t pairs = 0, mismatches = 0;
  for (int i = 0; i < 20; ++i) {
    const int vertices = 5 + static_cast<int>(rng() % 3);
    const int edges = std::min(10, vertices + 1 + static_cast<int>(rng() % 4));
    const auto g = build_graph(testing::random_mixed_graph(rng, vertices, edges), false);
    const int S[] = {0}, T[] = {vertices - 1};
    std::vector<int> E(g.num_edges());
    for (std::size_t e = 0; e < E.size(); ++e) E[e] = static_cast<int>(e);
    const auto rep = verify_theorem3(g, S, T, E, 3);
    if (rep.min_covariance < worst) worst = rep.min_covariance;
    pairs += rep.pairs_tested;
    mismatches += rep.identity_mismatches;
    if (!rep.pass()) out.detail << " graph" << i << ":min=" << to_string(rep.min_covariance);
  }
  out.detail << " graphs=20 pairs=" << pairs << " min_cov=" << to_string(worst) << " identity_mismatches=" << mismatches;
  out.fail_if(worst < 0, "negative covariance");
  out.fail_if(mismatches != 0, "identity mismatches");
}

void diagram_suite(Outcome& out) {
  for (const auto& [n, N] : kDiagrams) {
    for (auto layout : {BlockLayout::Standard, BlockLayout::Mirrored}) {
      const std::string tag = "G(" + std::to_string(n) + "," + std::to_string(N) + ")" +
                              (layout == BlockLayout::Mirrored ? "m" : "");
      try {
        const auto d = build_discrete(kUnit, n, N, Rational(1), all_infected(2), layout);
        const auto rep = verify_theorem4(d.graph, d.cycle, 3);
        out.detail << " " << tag << ":min=" << to_string(rep.min_covariance);
        out.fail_if(!rep.pass(), tag + " not associated");
      } catch (const Error& e) {
        out.detail << " " << tag << ":error";
        out.fail_if(true, tag + ": " + e.what());
      }
    }
    try {
      const auto rep = check_positive_association(theorem2_distribution(kUnit, n, N, Rational(1), all_infected(2)), 3);
      out.fail_if(!rep.pass(), "contact indicators on G(" + std::to_string(n) + "," + std::to_string(N) + ")");
    } catch (const Error&) {
      // already reported for the diagram itself
    }
  }
}

void stationarity(Outcome& out) {
  for (const auto& [name, spec] : {std::pair{"diamond", fixtures::diamond()}, std::pair{"diamond_chord", fixtures::diamond_chord()}}) {
    const auto ng = normalize_spec(spec);
    const auto chain = exact_kernel(ng);
    const RowVector<Rational> r = chain.mu * chain.right;
    const RowVector<Rational> l = chain.mu * chain.left;
    const RowVector<Rational> f = chain.mu * chain.full;
    out.fail_if(r != chain.mu, std::string(name) + ": mu P_right != mu");
    out.fail_if(l != chain.mu, std::string(name) + ": mu P_left != mu");
    out.fail_if(f != chain.mu, std::string(name) + ": mu P != mu");
    out.fail_if(!is_irreducible(chain.full) || !has_positive_diagonal(chain.full), std::string(name) + ": not ergodic");

    auto state = init_chain(ng, testing::support_max(ng.graph));
    Rng rng = make_stream(11, 0);
    const auto burn = 10 * ng.graph.num_edges();
    for (std::size_t i = 0; i < burn; ++i) step(ng, state, rng);
    std::vector<std::uint64_t> counts(chain.states.size(), 0);
    for (int i = 0; i < 1000000; ++i) {
      step(ng, state, rng);
      const int j = chain.index_of(state.current);
      if (j < 0) throw Error(Error::Kind::Internal, "chain left Gamma");
      ++counts[static_cast<std::size_t>(j)];
    }
    const double tv = total_variation(counts, chain.mu);
    out.detail << " " << name << ":states=" << chain.states.size() << ",tv=" << num(tv);
    out.fail_if(tv >= 0.01, std::string(name) + ": TV too large");
  }
}

Configuration sample_gamma(const NormalizedGraph& ng, Rng& rng) {
  const int src[] = {ng.u};
  while (true) {
    auto c = sample_config(ng.graph, rng);
    if (reachable(ng.graph, c, src)[ng.w]) return c;
  }
}

void monotonicity(Outcome& out) {
  std::vector<NormalizedGraph> graphs;
  for (const auto& spec : {fixtures::diamond(), fixtures::diamond_chord(), fixtures::square(), fixtures::theta()})
    graphs.push_back(normalize_spec(spec));
  Rng rng = make_stream(12, 0);
  std::uint64_t order_violations = 0, flip_violations = 0, steps = 0, flips = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto& ng = graphs[static_cast<std::size_t>(trial) % graphs.size()];
    const auto& g = ng.graph;
    const auto a_block = ng.cycle.block(Role::A), b_block = ng.cycle.block(Role::B);
    const int src[] = {ng.u};
    auto lo = sample_gamma(ng, rng);
    auto hi = lo;
    for (int n = 0; n < 50; ++n) {
      const auto aux = draw_aux(g, rng);
      auto bumped = aux;
      const auto e = rng() % g.num_edges();
      if (rng() & 1U)
        bumped.l.set(e, true);
      else
        bumped.r.set(e, false);

      // single flip from a common state
      const auto plain = transition(ng, lo, aux);
      const auto flipped = transition(ng, lo, bumped);
      const auto rp = reachable(g, plain, src), rf = reachable(g, flipped, src);
      bool bad = !is_more_leftish(ng, flipped, plain);
      for (int x : a_block) bad = bad || rf[x] < rp[x];
      for (int x : b_block) bad = bad || rf[x] > rp[x];
      flip_violations += bad;
      ++flips;

      // coupled pair: hi takes the bumped variables, so it stays ahead
      hi = transition(ng, hi, bumped);
      lo = plain;
      order_violations += !is_more_leftish(ng, hi, lo);
      ++steps;
    }
  }
  out.detail << " trials=10000 steps=" << steps << " order_violations=" << order_violations << " flips=" << flips
             << " flip_violations=" << flip_violations;
  out.fail_if(order_violations + flip_violations != 0, "violations");
}

void vacancy(Outcome& out) {
  for (const auto& [n, N] : kDiagrams) {
    const std::string tag = "G(" + std::to_string(n) + "," + std::to_string(N) + ")";
    try {
      const auto law = exact_top_law(kUnit, n, N, Rational(1), all_infected(2));
      for (int k = 1; k <= n; ++k) {
        const auto r = conjecture_from_law(law, n, k, k);
        out.detail << " " << tag << "n=m=" << k << ":" << num(r.lhs) << "<=" << num(r.rhs);
        out.fail_if(!r.pass, tag + " exact LHS > RHS");
      }
    } catch (const Error& e) {
      out.detail << " " << tag << ":error";
      out.fail_if(true, tag + ": " + e.what());
    }
  }

  const auto params = ContactParams::homogeneous(50, Rational(2), Rational(1));
  const int targets[] = {-3, -2, -1, 0, 1, 2, 3};
  const auto est = estimate_joint(params, all_infected(50), targets, 10.0, 1000000, 6);
  for (int k = 1; k <= 3; ++k) {
    const auto r = conjecture_from_estimate(est, k, k);
    out.detail << " mc n=m=" << k << ":lhs=" << num(r.lhs) << ",rhs=" << num(r.rhs) << ",se=" << num(r.se);
    out.fail_if(!(r.lhs <= r.rhs + 3 * r.se), "mc n=m=" + std::to_string(k) + " LHS > RHS + 3SE");
    out.fail_if(r.se >= 0.005, "mc n=m=" + std::to_string(k) + " SE too large");
  }
}

void discretization(Outcome& out) {
  const auto params = ContactParams::homogeneous(10, Rational(2), Rational(1));
  const int origin[] = {0};
  const auto cont = estimate_joint(params, all_infected(10), origin, 1.0, 100000, 7);
  const auto [pc, sc] = cont.marginal(0);
  out.detail << " continuous=" << num(pc) << "(se " << num(sc) << ")";
  out.fail_if(sc >= 0.003, "continuous SE too large");
  double previous = INFINITY;
  for (int N : {5, 20, 80}) {
    const auto d = build_discrete(params, 10, N, Rational(1), all_infected(10));
    const auto est = estimate_joint(d, origin, 100000, 8 + static_cast<std::uint64_t>(N));
    const auto [p, se] = est.marginal(0);
    const double gap = std::abs(p - pc);
    out.detail << " N=" << N << ":p=" << num(p) << ",se=" << num(se) << ",gap=" << num(gap);
    out.fail_if(se >= 0.003, "N=" + std::to_string(N) + " SE too large");
    out.fail_if(!(gap < previous), "gap not decreasing at N=" + std::to_string(N));
    if (N == 80) out.fail_if(gap >= 0.02, "N=80 gap too large");
    previous = gap;
  }
}

void structural(Outcome& out) {
  // Euler on every graph built here
  std::size_t built = 0, euler_bad = 0;
  auto euler = [&](const MixedPlanarGraph& g) {
    ++built;
    euler_bad += !euler_holds(g);
  };
  for (const auto& named : fixtures::duality_suite()) {
    euler(build_graph(named.spec));
    euler(normalize_spec(named.spec).graph);
  }
  for (int c = 2; c <= 5; ++c)
    for (int r = 2; r <= 4; ++r) euler(build_graph(fixtures::grid(c, r, 0, r - 1)));
  for (int n = 1; n <= 3; ++n)
    for (int N : {3, 4, 7})
      for (auto layout : {BlockLayout::Standard, BlockLayout::Mirrored})
        euler(build_discrete(ContactParams::homogeneous(3, Rational(1), Rational(1)), n, N, Rational(1),
                             all_infected(3), layout)
                  .graph);
  out.detail << " euler=" << built - euler_bad << "/" << built;
  out.fail_if(euler_bad != 0, "Euler formula");

  const std::size_t dedekind[] = {2, 3, 6, 20, 168};
  bool dk = true;
  for (int k = 0; k <= 4; ++k) dk = dk && monotone_functions(k).size() == dedekind[k];
  out.detail << " dedekind=" << (dk ? "ok" : "bad");
  out.fail_if(!dk, "Dedekind counts");

  // extreme paths and reachability against path enumeration, every configuration
  std::uint64_t configs = 0, discrepancies = 0;
  for (const auto& named : fixtures::duality_suite()) {
    const auto ng = normalize_spec(named.spec);
    const auto& g = ng.graph;
    if (g.num_edges() > 16) continue;
    const int src[] = {ng.u};
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.num_edges()); ++bits) {
      const auto omega = Configuration::from_bits(g.num_edges(), bits);
      ++configs;
      const auto paths = testing::open_simple_paths(g, omega, ng.u, ng.w);
      bool bad = reachable(g, omega, src) != testing::reachable_by_paths(g, omega, src);
      const auto L = extreme_path(ng, omega, Side::Left);
      const auto R = extreme_path(ng, omega, Side::Right);
      bad = bad || L.has_value() != !paths.empty() || R.has_value() != !paths.empty();
      if (L && R) {
        const auto pl = partition_edges(g, *L), pr = partition_edges(g, *R);
        for (const auto& p : paths)
          for (int e : p.edges) bad = bad || pl.side[e] == EdgeSide::Left || pr.side[e] == EdgeSide::Right;
      }
      discrepancies += bad;
    }
  }
  out.detail << " path_configs=" << configs << " path_discrepancies=" << discrepancies;
  out.fail_if(discrepancies != 0, "extremality/reachability");

  Rng rng = make_stream(13, 0);
  std::uint64_t evolve_bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int radius = 1 + static_cast<int>(rng() % 4);
    const auto p = ContactParams::homogeneous(radius, Rational(static_cast<long>(rng() % 5), 2), Rational(1));
    const double t = 0.2 + 2 * uniform01(rng);
    const auto gr = simulate_graphical(p, t, rng);
    SiteConfig eta0(static_cast<std::size_t>(p.sites()));
    for (auto& c : eta0) c = rng() & 1U;
    const double s = t * uniform01(rng);
    evolve_bad += evolve_state(gr, eta0, s) != testing::state_by_allowable_paths(gr, eta0, s);
  }
  out.detail << " evolve_discrepancies=" << evolve_bad << "/1000";
  out.fail_if(evolve_bad != 0, "evolve_state");
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "duality convention pin", 60, duality_pin},
      {2, "association given S -/-> T, random mixed graphs", 300, random_mixed_suite},
      {3, "association on discrete diagrams", 300, diagram_suite},
      {4, "chain stationarity", 120, stationarity},
      {5, "chain monotonicity", 120, monotonicity},
      {6, "two-sided vacancy inequality", 900, vacancy},
      {7, "time discretization", 600, discretization},
      {8, "structural oracles", 1e300, structural},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    Outcome out;
    const auto t0 = Clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.fail_if(true, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > c.budget_s) out.fail_if(true, "over time budget");
    failed += !out.pass;
    std::printf("%s %d %s: %s (%.1f s", out.pass ? "PASS" : "FAIL", c.id, c.name, out.detail.str().c_str(), secs);
    if (c.budget_s < 1e299) std::printf(", budget %.0f s", c.budget_s);
    std::printf(")\n");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
