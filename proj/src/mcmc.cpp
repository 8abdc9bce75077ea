#include "perco/mcmc.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "perco/error.hpp"

namespace perco {

AuxBlock draw_aux(const MixedPlanarGraph& g, Rng& rng) {
  const auto n = g.num_edges();
  AuxBlock aux{Configuration(n), Configuration(n)};
  for (std::size_t e = 0; e < n; ++e) aux.r.set(e, bernoulli(rng, g.edge(static_cast<int>(e)).p_approx));
  for (std::size_t e = 0; e < n; ++e) aux.l.set(e, bernoulli(rng, g.edge(static_cast<int>(e)).p_approx));
  return aux;
}

ChainState init_chain(const NormalizedGraph& ng, Configuration alpha) {
  if (alpha.size() != ng.graph.num_edges())
    throw Error(Error::Kind::Domain, "initial configuration has the wrong number of edges");
  const int sources[] = {ng.u};
  if (!reachable(ng.graph, alpha, sources)[ng.w])
    throw Error(Error::Kind::Domain, "initial configuration has no open u -> w path");
  return ChainState{std::move(alpha), 0};
}

Configuration substep(const NormalizedGraph& ng, const Configuration& omega, const AuxBlock& aux, Side resample) {
  // resampling the right side is guided by the leftmost path, and vice versa
  const Side guide = resample == Side::Right ? Side::Left : Side::Right;
  const auto path = extreme_path(ng, omega, guide);
  if (!path) throw Error(Error::Kind::Domain, "substep input has no open u -> w path");
  const auto part = partition_edges(ng.graph, *path);
  const EdgeSide target = resample == Side::Right ? EdgeSide::Right : EdgeSide::Left;
  const Configuration& fresh = resample == Side::Right ? aux.r : aux.l;
  Configuration out = omega;
  for (std::size_t e = 0; e < out.size(); ++e)
    if (part.side[e] == target) out.set(e, fresh[e]);
  return out;
}

Configuration transition(const NormalizedGraph& ng, const Configuration& omega, const AuxBlock& aux) {
  return substep(ng, substep(ng, omega, aux, Side::Right), aux, Side::Left);
}

void step(const NormalizedGraph& ng, ChainState& state, Rng& rng) {
  const auto aux = draw_aux(ng.graph, rng);
  state.current = transition(ng, state.current, aux);
  ++state.step_count;
}

RunOptions default_run_options(const NormalizedGraph& ng, std::uint64_t steps) {
  return RunOptions{steps, 10 * static_cast<std::uint64_t>(ng.graph.num_edges()), 1};
}

std::vector<ChainSample> run_chain(const NormalizedGraph& ng, ChainState& state, const RunOptions& options,
                                   Rng& rng) {
  if (options.thin == 0) throw Error(Error::Kind::Input, "thin must be at least 1");
  if (options.steps < options.burn_in) throw Error(Error::Kind::Input, "steps must not be below burn-in");
  std::vector<ChainSample> out;
  Reacher reacher(ng.graph);
  const int sources[] = {ng.u};
  for (std::uint64_t n = 1; n <= options.steps; ++n) {
    step(ng, state, rng);
    if (n > options.burn_in && (n - options.burn_in - 1) % options.thin == 0)
      out.push_back({state.step_count, state.current, reacher.from(state.current, sources)});
  }
  return out;
}

// ---------------------------------------------------------------------------

int ExactChain::index_of(const Configuration& c) const {
  const auto it = std::lower_bound(states.begin(), states.end(), c,
                                   [](const Configuration& a, const Configuration& b) { return a.bits() < b.bits(); });
  if (it == states.end() || *it != c) return -1;
  return static_cast<int>(it - states.begin());
}

namespace {

struct FreeEdges {
  std::vector<int> free;         // 0 < p < 1
  Configuration forced;          // forced values of the other edges
  std::vector<char> is_free;
};

FreeEdges classify(const MixedPlanarGraph& g) {
  FreeEdges f;
  f.forced = Configuration(g.num_edges());
  f.is_free.assign(g.num_edges(), 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& p = g.edge(static_cast<int>(e)).p;
    if (p > 0 && p < 1) {
      f.free.push_back(static_cast<int>(e));
      f.is_free[e] = 1;
    } else {
      f.forced.set(e, p == 1);
    }
  }
  return f;
}

Rational weight_of(const MixedPlanarGraph& g, const Configuration& c, std::span<const int> edges) {
  Rational w(1);
  for (int e : edges) {
    const auto& p = g.edge(e).p;
    w *= c[static_cast<std::size_t>(e)] ? p : Rational(1) - p;
  }
  return w;
}

}  // namespace

ExactChain exact_kernel(const NormalizedGraph& ng) {
  const auto& g = ng.graph;
  if (g.num_edges() > 64) throw Error(Error::Kind::Guard, "exact kernel is limited to 64 edges");
  const auto fe = classify(g);
  const auto k = fe.free.size();
  if (k > 24) throw Error(Error::Kind::Guard, "exact kernel is limited to 24 free edges");

  ExactChain chain;
  Reacher reacher(g);
  const int sources[] = {ng.u};
  std::vector<Rational> weights;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    Configuration c = fe.forced;
    for (std::size_t i = 0; i < k; ++i) c.set(static_cast<std::size_t>(fe.free[i]), (m >> i) & 1U);
    if (!reacher.from(c, sources)[ng.w]) continue;
    chain.states.push_back(c);
  }
  std::sort(chain.states.begin(), chain.states.end(),
            [](const Configuration& a, const Configuration& b) { return a.bits() < b.bits(); });
  if (chain.states.empty()) throw Error(Error::Kind::Domain, "u -> w has probability zero");

  const auto n = static_cast<Eigen::Index>(chain.states.size());
  chain.mu.resize(n);
  Rational total(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    chain.mu(i) = weight_of(g, chain.states[static_cast<std::size_t>(i)], fe.free);
    total += chain.mu(i);
  }
  chain.mu /= total;

  std::uint64_t work = 0;
  auto build = [&](Side resample) {
    std::vector<Eigen::Triplet<Rational>> triplets;
    const Side guide = resample == Side::Right ? Side::Left : Side::Right;
    const EdgeSide target = resample == Side::Right ? EdgeSide::Right : EdgeSide::Left;
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& omega = chain.states[static_cast<std::size_t>(i)];
      const auto part = partition_edges(g, *extreme_path(ng, omega, guide));
      std::vector<int> resampled;
      Configuration base = omega;
      for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (part.side[e] != target) continue;
        if (fe.is_free[e])
          resampled.push_back(static_cast<int>(e));
        else
          base.set(e, fe.forced[e]);
      }
      work += std::uint64_t{1} << resampled.size();
      if (work > (std::uint64_t{1} << 24)) throw Error(Error::Kind::Guard, "exact kernel exceeds 2^24 work");
      std::unordered_map<Eigen::Index, Rational> row;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << resampled.size()); ++m) {
        Configuration next = base;
        for (std::size_t j = 0; j < resampled.size(); ++j)
          next.set(static_cast<std::size_t>(resampled[j]), (m >> j) & 1U);
        const int col = chain.index_of(next);
        if (col < 0) throw Error(Error::Kind::Internal, "substep left the support of mu");
        row[col] += weight_of(g, next, resampled);
      }
      for (auto& [col, w] : row) triplets.emplace_back(i, col, w);
    }
    Kernel<Rational> P(n, n);
    P.setFromTriplets(triplets.begin(), triplets.end());
    return P;
  };
  chain.right = build(Side::Right);
  chain.left = build(Side::Left);
  chain.full = chain.right * chain.left;
  return chain;
}

double total_variation(std::span<const std::uint64_t> counts, const RowVector<Rational>& reference) {
  if (static_cast<Eigen::Index>(counts.size()) != reference.size())
    throw Error(Error::Kind::Domain, "histogram and reference law differ in size");
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0) throw Error(Error::Kind::Domain, "empty histogram");
  double tv = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    tv += std::abs(static_cast<double>(counts[i]) / static_cast<double>(total) -
                   to_double(reference(static_cast<Eigen::Index>(i))));
  return tv / 2;
}

}  // namespace perco
