#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "perco/graph.hpp"
#include "perco/percolation.hpp"
#include "perco/rational.hpp"
#include "perco/rng.hpp"

namespace perco {

/// Rates of a 1D contact process on the window [-radius, radius]. Site x
/// infects x-1 at rate infect_left[x] (= lambda(x-1, x)) and x+1 at rate
/// infect_right[x] (= lambda(x+1, x)); it recovers at rate recovery[x].
/// Vectors are indexed by x + radius. Sites outside the window do not exist.
struct ContactParams {
  int radius = 0;
  std::vector<Rational> infect_left;
  std::vector<Rational> infect_right;
  std::vector<Rational> recovery;

  static ContactParams homogeneous(int radius, const Rational& lambda, const Rational& delta);

  int sites() const { return 2 * radius + 1; }
  int index(int x) const { return x + radius; }
  /// Largest rate; all rates lie in [0, max_rate()].
  Rational max_rate() const;
};

/// Site x -> infected indicator, indexed by x + radius.
using SiteConfig = std::vector<char>;

SiteConfig all_infected(int radius);

// ---------------------------------------------------------------------------
// Graphical representation.

enum class MarkKind : std::uint8_t { Recovery, ArrowLeft, ArrowRight };

struct GraphicalEvent {
  double time = 0.0;
  int site = 0;  // x (not offset)
  MarkKind kind = MarkKind::Recovery;
};

/// Poisson marks on the time lines l_x, x in the window, over [0, t_max].
/// Stored as one time-ordered event list; per-site lists are views of it.
class GraphicalRep {
 public:
  GraphicalRep() = default;
  GraphicalRep(int radius, double t_max, std::vector<GraphicalEvent> events);

  int radius() const { return radius_; }
  double t_max() const { return t_max_; }
  std::span<const GraphicalEvent> events() const { return events_; }

  /// Sorted times of one kind of mark on l_x.
  std::vector<double> marks(int x, MarkKind kind) const;

 private:
  friend void simulate_graphical_into(GraphicalRep& out, const ContactParams& params, double t_max, Rng& rng);

  int radius_ = 0;
  double t_max_ = 0.0;
  std::vector<GraphicalEvent> events_;
};

/// Independent Poisson processes per site: recovery marks at rate delta_x,
/// arrows to x-1 at rate lambda(x-1,x), arrows to x+1 at rate lambda(x+1,x).
/// Generated as the superposition with marks assigned to channels in
/// proportion to their rates.
GraphicalRep simulate_graphical(const ContactParams& params, double t_max, Rng& rng);
void simulate_graphical_into(GraphicalRep& out, const ContactParams& params, double t_max, Rng& rng);

/// Infection state at time t by a forward sweep over the events: a recovery
/// mark heals its site, an arrow infects its target if its source is
/// infected.
SiteConfig evolve_state(const GraphicalRep& gr, const SiteConfig& eta0, double t);
void evolve_state_into(SiteConfig& state, const GraphicalRep& gr, double t);

// ---------------------------------------------------------------------------
// Discrete space-time diagram.

enum class BlockLayout : std::uint8_t {
  Standard,  // a-block = top row x < 0, b-block = top row x > 0
  Mirrored,  // drawing reflected, a-block = top row x > 0
};

struct DiscreteDiagram {
  int radius = 0;      // sites |x| <= radius
  int resolution = 0;  // N
  Rational t_hat;      // smallest multiple of 1/N that is >= t
  int levels = 0;      // N * t_hat; time levels are 0..levels
  MixedPlanarGraph graph;
  BoundaryCycle cycle;
  std::vector<int> U;  // level-0 vertices of initially infected sites
  int target = 0;      // (0, t_hat)

  int vertex(int x, int level) const { return level * (2 * radius + 1) + (x + radius); }
  /// Top-row vertices of the given sites.
  std::vector<int> top_row(std::span<const int> sites) const;
};

/// Smallest multiple of 1/N that is >= t.
Rational discretize_time(const Rational& t, int N);

/// Builds G_{n,N}: vertices (x, k/N), |x| <= n, 0 <= k <= N t_hat, drawn at
/// (x, k); edges (x,k)->(x+1,k) with p = lambda(x+1,x)/N, (x,k)->(x-1,k)
/// with p = lambda(x-1,x)/N and (x,k)->(x,k+1) with p = 1 - delta_x/N.
/// Requires N > max rate, 1 <= n <= params.radius and t > 0.
DiscreteDiagram build_discrete(const ContactParams& params, int n, int N, const Rational& t, const SiteConfig& eta0,
                               BlockLayout layout = BlockLayout::Standard);

/// eta^{(n,N)}(x) = I{U -> (x, t_hat)} for x in [-n, n], via reachable().
SiteConfig discrete_state(const DiscreteDiagram& d, const Configuration& omega);

/// Exact law of the top-row infected set, by a transfer matrix over level
/// subsets. Entry s is the probability that the infected top-row set is s
/// (bit x + n). Guard: 2n+1 <= 7.
Eigen::Matrix<Rational, 1, Eigen::Dynamic> exact_top_law(const ContactParams& params, int n, int N, const Rational& t,
                                                         const SiteConfig& eta0);

// ---------------------------------------------------------------------------

struct JointEstimate {
  std::vector<int> targets;         // sites
  std::uint64_t reps = 0;
  std::vector<std::uint64_t> counts;  // outcome index: bit i = eta(targets[i])
  std::vector<double> prob;
  std::vector<double> se;

  /// Marginal estimate of P(eta(targets[i]) = 1) and its standard error.
  std::pair<double, double> marginal(std::size_t i) const;
};

/// Continuous source: simulate_graphical + evolve_state per replica.
/// Replica r uses stream r of the master seed.
JointEstimate estimate_joint(const ContactParams& params, const SiteConfig& eta0, std::span<const int> targets,
                             double t, std::uint64_t reps, std::uint64_t seed);

/// Discrete source: sample_config + reachable per replica.
JointEstimate estimate_joint(const DiscreteDiagram& diagram, std::span<const int> targets, std::uint64_t reps,
                             std::uint64_t seed);

}  // namespace perco
