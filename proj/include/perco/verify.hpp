#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "perco/contact.hpp"
#include "perco/graph.hpp"
#include "perco/percolation.hpp"
#include "perco/rational.hpp"

namespace perco {

// ---------------------------------------------------------------------------
// Exact joint laws of binary statistics.

/// Exact law of a finite collection of binary variables. Outcome bit i is
/// variable i. Only outcomes of positive weight are stored, sorted by
/// outcome; weights sum to exactly one.
struct JointDistribution {
  std::vector<std::string> labels;
  std::vector<std::pair<std::uint64_t, Rational>> outcomes;
  Rational condition_probability{1};  // P(condition) under the product measure

  std::size_t arity() const { return labels.size(); }
  /// P(variable i = 1).
  Rational marginal(std::size_t i) const;
  /// Builds a law from unnormalized (outcome, weight) pairs; merges equal
  /// outcomes and drops zeros. Throws Error(Domain) if the total is zero.
  static JointDistribution from_weights(std::vector<std::string> labels,
                                        std::vector<std::pair<std::uint64_t, Rational>> weights);
};

using ConfigPredicate = std::function<bool(const Configuration&)>;

struct Statistic {
  std::string label;
  ConfigPredicate value;
};

/// Conditional joint law of the statistics given the condition, summed over
/// every configuration. Edges with p in {0,1} are fixed, so the guard is on
/// the free edges: at most 24. Throws Error(Guard) past it and Error(Domain)
/// when the condition has probability zero. An empty condition means none.
JointDistribution enumerate_measure(const MixedPlanarGraph& g, const ConfigPredicate& condition,
                                    std::span<const Statistic> variables);

// ---------------------------------------------------------------------------
// Monotone Boolean functions.

/// Truth table bit v is f(v), where bit i of v is argument i.
struct MonotoneFunction {
  int arity = 0;
  std::uint16_t table = 0;

  bool operator()(unsigned v) const { return (table >> v) & 1U; }
};

/// All monotone functions of the given arity (0..4), found by filtering the
/// 2^(2^k) truth tables. Ordered by table.
std::vector<MonotoneFunction> monotone_functions(int arity);

bool is_monotone(int arity, std::uint16_t table);

// ---------------------------------------------------------------------------
// Positive association.

struct AssociationReport {
  Rational min_covariance{0};
  std::vector<std::size_t> argmin_subset;  // variable indices
  std::uint16_t argmin_f = 0;
  std::uint16_t argmin_g = 0;
  std::uint64_t pairs_tested = 0;
  std::size_t subsets_tested = 0;
  std::size_t subset_size = 0;
  /// Increasing/decreasing pairs whose covariance differed from minus the
  /// covariance with the complemented function. Always zero unless broken.
  std::uint64_t identity_mismatches = 0;

  // up-set events {X_i = 1 for all i in A}, tested when arity <= 12
  bool product_events_tested = false;
  std::uint64_t product_pairs = 0;
  Rational min_product_gap{0};  // min P(A and B) - P(A) P(B)

  std::size_t arity = 0;

  bool pass() const {
    return min_covariance >= 0 && identity_mismatches == 0 && (!product_events_tested || min_product_gap >= 0);
  }
};

/// Cov(f, g) of two functions of the listed variables (truth tables over
/// the subset, bit j = variable subset[j]).
Rational covariance(const JointDistribution& dist, std::span<const std::size_t> subset, std::uint16_t f,
                    std::uint16_t g);

/// Every ordered pair of monotone functions on every variable subset of
/// size min(k_max, arity). Smaller subsets need no separate pass: a
/// monotone function of fewer variables is a monotone function of any
/// superset. k_max <= 4.
AssociationReport check_positive_association(const JointDistribution& dist, int k_max);

// ---------------------------------------------------------------------------
// Harnesses.

/// X_e = I{e is open and can be entered from an open walk out of S},
/// Y_e = I{e is open and leaves onto an open walk into T}; the collection
/// {X_e} and {1 - Y_e} over `edges`, conditioned on {S -/-> T}.
JointDistribution theorem3_distribution(const MixedPlanarGraph& g, std::span<const int> S, std::span<const int> T,
                                        std::span<const int> edges);
AssociationReport verify_theorem3(const MixedPlanarGraph& g, std::span<const int> S, std::span<const int> T,
                                  std::span<const int> edges, int k_max);

/// {I(U -> a_i)} and {I(U -/-> b_j)}, conditioned on {U -> W}.
JointDistribution theorem4_distribution(const MixedPlanarGraph& g, const BoundaryCycle& C);
AssociationReport verify_theorem4(const MixedPlanarGraph& g, const BoundaryCycle& C, int k_max);

/// {1 - eta_t(x) : -n <= x < 0} and {eta_t(x) : 0 < x <= n} on G_{n,N},
/// conditioned on eta_t(0) = 1, from the transfer-matrix law.
JointDistribution theorem2_distribution(const ContactParams& params, int n, int N, const Rational& t,
                                        const SiteConfig& eta0);

// ---------------------------------------------------------------------------
// The two-sided vacancy inequality
//   P(A and B | eta(0)=1) <= P(A | eta(0)=1) P(B | eta(0)=1),
// A = {eta(x) = 0, -n <= x <= -1}, B = {eta(x) = 0, 1 <= x <= m}.

enum class ConjectureMode { ExactDiscrete, MonteCarlo };

struct ConjectureResult {
  int n = 0;
  int m = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double se = 0.0;  // of lhs - rhs; zero in exact mode
  double se_lhs = 0.0;
  double se_rhs = 0.0;
  std::uint64_t conditioned = 0;  // replicas with eta(0) = 1
  std::uint64_t reps = 0;
  Rational exact_lhs{0};
  Rational exact_rhs{0};
  ConjectureMode mode = ConjectureMode::MonteCarlo;
  bool pass = false;
};

/// From an exact top-row law (bit x + radius), as returned by exact_top_law.
ConjectureResult conjecture_from_law(const Eigen::Matrix<Rational, 1, Eigen::Dynamic>& law, int radius, int n, int m);

/// From joint counts over targets containing -n..m. The verdict is
/// lhs <= rhs + 3 se, where se comes from the delta method on lhs - rhs.
/// Throws Error(Domain) if eta(0) = 1 was never observed.
ConjectureResult conjecture_from_estimate(const JointEstimate& est, int n, int m);

/// Exact mode: G_{n_diagram,N} with the transfer matrix, all sites infected
/// at time 0, n, m <= n_diagram. Monte Carlo mode: continuous time on the
/// window of `params`, reps replicas from `seed`.
ConjectureResult verify_conjecture1(const ContactParams& params, int n, int m, const Rational& t,
                                    ConjectureMode mode, int N, int n_diagram, std::uint64_t reps,
                                    std::uint64_t seed);

}  // namespace perco
