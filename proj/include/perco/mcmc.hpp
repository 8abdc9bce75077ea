#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "perco/graph.hpp"
#include "perco/percolation.hpp"
#include "perco/rational.hpp"
#include "perco/rng.hpp"

namespace perco {

// Resampling chain on Gamma = {configurations with an open u -> w path}.
// One transition: resample the edges right of the leftmost open path with
// fresh r-variables, then the edges left of the (new) rightmost open path
// with fresh l-variables. The law P( . | u -> w) is invariant.

/// The auxiliary variables of one transition. l(e), r(e) ~ Bernoulli(p_e).
struct AuxBlock {
  Configuration l;
  Configuration r;
};

/// Draws r for every edge in index order, then l for every edge. The full
/// block is always drawn, so a seed fixes the trajectory regardless of how
/// many edges a transition actually resamples.
AuxBlock draw_aux(const MixedPlanarGraph& g, Rng& rng);

struct ChainState {
  Configuration current;
  std::uint64_t step_count = 0;
};

/// Throws Error(Domain) if alpha has no open u -> w path.
ChainState init_chain(const NormalizedGraph& ng, Configuration alpha);

/// Side::Right: ω'(e) = r(e) on E_R(leftmost path), ω elsewhere.
/// Side::Left:  ω'(e) = l(e) on E_L(rightmost path), ω elsewhere.
Configuration substep(const NormalizedGraph& ng, const Configuration& omega, const AuxBlock& aux, Side resample);

/// Both substeps with the given aux block.
Configuration transition(const NormalizedGraph& ng, const Configuration& omega, const AuxBlock& aux);

void step(const NormalizedGraph& ng, ChainState& state, Rng& rng);

struct ChainSample {
  std::uint64_t step = 0;
  Configuration config;
  VertexSet infected;  // eta_n(x) = I{u -> x}
};

struct RunOptions {
  std::uint64_t steps = 0;
  std::uint64_t burn_in = 0;
  std::uint64_t thin = 1;
};

/// Default burn-in is 10 |E|.
RunOptions default_run_options(const NormalizedGraph& ng, std::uint64_t steps);

/// Emits every thin-th configuration after burn-in: transitions n with
/// n > burn_in and (n - burn_in - 1) % thin == 0, n = 1..steps.
std::vector<ChainSample> run_chain(const NormalizedGraph& ng, ChainState& state, const RunOptions& options, Rng& rng);

// ---------------------------------------------------------------------------
// Exact kernels.

template <typename Scalar>
using Kernel = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

struct ExactChain {
  /// Support of mu: configurations in Gamma with every p in {0,1} edge at
  /// its forced value. Ordered by bit pattern.
  std::vector<Configuration> states;
  RowVector<Rational> mu;
  Kernel<Rational> right;  // substep resampling E_R(leftmost)
  Kernel<Rational> left;   // substep resampling E_L(rightmost)
  Kernel<Rational> full;   // right * left

  int index_of(const Configuration& c) const;
};

/// Builds the substep kernels by summing over the assignments of the
/// resampled free edges. Guard: at most 24 free edges and 2^24 total work.
ExactChain exact_kernel(const NormalizedGraph& ng);

/// Every row sums to one.
template <typename Scalar>
bool is_stochastic(const Kernel<Scalar>& P) {
  for (Eigen::Index i = 0; i < P.outerSize(); ++i) {
    Scalar sum(0);
    for (typename Kernel<Scalar>::InnerIterator it(P, i); it; ++it) sum += it.value();
    if (sum != Scalar(1)) return false;
  }
  return true;
}

/// Strong connectivity of the transition graph.
template <typename Scalar>
bool is_irreducible(const Kernel<Scalar>& P) {
  const auto n = P.rows();
  if (n == 0) return false;
  auto sweep = [&](bool transpose) {
    std::vector<std::vector<Eigen::Index>> adj(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < P.outerSize(); ++i)
      for (typename Kernel<Scalar>::InnerIterator it(P, i); it; ++it)
        if (it.value() != Scalar(0)) {
          if (transpose)
            adj[static_cast<std::size_t>(it.col())].push_back(i);
          else
            adj[static_cast<std::size_t>(i)].push_back(it.col());
        }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Eigen::Index> stack{0};
    seen[0] = 1;
    Eigen::Index count = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto x : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(x)]) {
          seen[static_cast<std::size_t>(x)] = 1;
          ++count;
          stack.push_back(x);
        }
    }
    return count == n;
  };
  return sweep(false) && sweep(true);
}

template <typename Scalar>
bool has_positive_diagonal(const Kernel<Scalar>& P) {
  for (Eigen::Index i = 0; i < P.rows(); ++i)
    if (!(P.coeff(i, i) > Scalar(0))) return false;
  return true;
}

/// Total-variation distance between an empirical histogram over the states
/// and a reference law.
double total_variation(std::span<const std::uint64_t> counts, const RowVector<Rational>& reference);

}  // namespace perco
