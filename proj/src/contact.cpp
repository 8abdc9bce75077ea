#include "perco/contact.hpp"

#include <algorithm>
#include <cmath>

#include "perco/error.hpp"

namespace perco {

ContactParams ContactParams::homogeneous(int radius, const Rational& lambda, const Rational& delta) {
  if (radius < 0) throw Error(Error::Kind::Input, "window radius must be non-negative");
  if (lambda < 0 || delta < 0) throw Error(Error::Kind::Input, "rates must be non-negative");
  ContactParams p;
  p.radius = radius;
  const auto n = static_cast<std::size_t>(p.sites());
  p.infect_left.assign(n, lambda);
  p.infect_right.assign(n, lambda);
  p.recovery.assign(n, delta);
  // no sites outside the window
  p.infect_left.front() = 0;
  p.infect_right.back() = 0;
  return p;
}

Rational ContactParams::max_rate() const {
  Rational m(0);
  for (const auto* v : {&infect_left, &infect_right, &recovery})
    for (const auto& r : *v) m = std::max(m, r);
  return m;
}

SiteConfig all_infected(int radius) { return SiteConfig(static_cast<std::size_t>(2 * radius + 1), 1); }

// ---------------------------------------------------------------------------

GraphicalRep::GraphicalRep(int radius, double t_max, std::vector<GraphicalEvent> events)
    : radius_(radius), t_max_(t_max), events_(std::move(events)) {
  for (std::size_t i = 0; i < events_.size(); ++i) {
    const auto& e = events_[i];
    if (e.time < 0 || e.time > t_max_ || (i > 0 && e.time < events_[i - 1].time) || std::abs(e.site) > radius_)
      throw Error(Error::Kind::Domain, "graphical events must be time-ordered inside the window");
  }
}

std::vector<double> GraphicalRep::marks(int x, MarkKind kind) const {
  std::vector<double> out;
  for (const auto& e : events_)
    if (e.site == x && e.kind == kind) out.push_back(e.time);
  return out;
}

void simulate_graphical_into(GraphicalRep& out, const ContactParams& params, double t_max, Rng& rng) {
  if (!(t_max > 0)) throw Error(Error::Kind::Input, "t_max must be positive");
  out.radius_ = params.radius;
  out.t_max_ = t_max;
  out.events_.clear();

  // channel c = 3 * (x + radius) + kind
  const auto sites = static_cast<std::size_t>(params.sites());
  std::vector<double> cumulative;
  cumulative.reserve(3 * sites);
  double total = 0.0;
  for (std::size_t i = 0; i < sites; ++i) {
    total += to_double(params.recovery[i]);
    cumulative.push_back(total);
    total += to_double(params.infect_left[i]);
    cumulative.push_back(total);
    total += to_double(params.infect_right[i]);
    cumulative.push_back(total);
  }
  if (total <= 0) return;
  double t = 0.0;
  while (true) {
    t += exponential(rng, total);
    if (t > t_max) break;
    const double pick = uniform01(rng) * total;
    auto c = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), pick) - cumulative.begin());
    // zero-rate channels have empty intervals; step past any numerical edge case
    while (c + 1 < cumulative.size() && (c == 0 ? cumulative[0] : cumulative[c] - cumulative[c - 1]) <= 0) ++c;
    c = std::min(c, cumulative.size() - 1);
    out.events_.push_back(
        {t, static_cast<int>(c / 3) - params.radius, static_cast<MarkKind>(c % 3)});
  }
}

GraphicalRep simulate_graphical(const ContactParams& params, double t_max, Rng& rng) {
  GraphicalRep gr;
  simulate_graphical_into(gr, params, t_max, rng);
  return gr;
}

void evolve_state_into(SiteConfig& state, const GraphicalRep& gr, double t) {
  if (t > gr.t_max()) throw Error(Error::Kind::Domain, "evolve time exceeds the simulated horizon");
  const int r = gr.radius();
  for (const auto& e : gr.events()) {
    if (e.time > t) break;
    const auto i = static_cast<std::size_t>(e.site + r);
    switch (e.kind) {
      case MarkKind::Recovery: state[i] = 0; break;
      case MarkKind::ArrowLeft:
        if (state[i] && e.site > -r) state[i - 1] = 1;
        break;
      case MarkKind::ArrowRight:
        if (state[i] && e.site < r) state[i + 1] = 1;
        break;
    }
  }
}

SiteConfig evolve_state(const GraphicalRep& gr, const SiteConfig& eta0, double t) {
  if (eta0.size() != static_cast<std::size_t>(2 * gr.radius() + 1))
    throw Error(Error::Kind::Domain, "initial state does not match the window");
  SiteConfig state = eta0;
  evolve_state_into(state, gr, t);
  return state;
}

// ---------------------------------------------------------------------------

Rational discretize_time(const Rational& t, int N) {
  const Rational scaled = t * N;
  BigInt q = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
  if (Rational(q) < scaled) q += 1;
  return Rational(q, BigInt(N));
}

std::vector<int> DiscreteDiagram::top_row(std::span<const int> sites) const {
  std::vector<int> out;
  for (int x : sites) out.push_back(vertex(x, levels));
  return out;
}

DiscreteDiagram build_discrete(const ContactParams& params, int n, int N, const Rational& t, const SiteConfig& eta0,
                               BlockLayout layout) {
  using Kind = Error::Kind;
  if (N < 1) throw Error(Kind::Input, "time resolution N must be positive");
  if (n < 1 || n > params.radius) throw Error(Kind::Input, "diagram radius must lie in [1, window radius]");
  if (!(t > 0)) throw Error(Kind::Input, "t must be positive");
  if (!(Rational(N) > params.max_rate()))
    throw Error(Kind::Domain, "N = " + std::to_string(N) + " must exceed the largest rate " +
                                  to_string(params.max_rate()) + " so that every edge probability lies in [0,1]");
  if (eta0.size() != static_cast<std::size_t>(params.sites()))
    throw Error(Kind::Input, "initial state does not match the window");

  DiscreteDiagram d;
  d.radius = n;
  d.resolution = N;
  d.t_hat = discretize_time(t, N);
  const Rational K = d.t_hat * N;
  d.levels = static_cast<int>(boost::multiprecision::numerator(K).convert_to<long>());

  const double mirror = layout == BlockLayout::Mirrored ? -1.0 : 1.0;
  const int width = 2 * n + 1;
  GraphSpec spec;
  for (int k = 0; k <= d.levels; ++k)
    for (int x = -n; x <= n; ++x) spec.vertices.push_back({d.vertex(x, k), mirror * x, double(k)});
  int id = 0;
  const Rational NN(N);
  for (int k = 0; k <= d.levels; ++k)
    for (int x = -n; x <= n; ++x) {
      const auto i = static_cast<std::size_t>(params.index(x));
      if (x + 1 <= n) spec.edges.push_back({id++, d.vertex(x, k), d.vertex(x + 1, k), true, params.infect_right[i] / NN});
      if (x - 1 >= -n) spec.edges.push_back({id++, d.vertex(x, k), d.vertex(x - 1, k), true, params.infect_left[i] / NN});
      if (k < d.levels)
        spec.edges.push_back({id++, d.vertex(x, k), d.vertex(x, k + 1), true, Rational(1) - params.recovery[i] / NN});
    }
  d.graph = build_graph(spec, true);

  for (int x = -n; x <= n; ++x)
    if (eta0[static_cast<std::size_t>(params.index(x))]) d.U.push_back(d.vertex(x, 0));
  if (d.U.empty()) throw Error(Kind::Domain, "no initially infected site inside the diagram window");
  d.target = d.vertex(0, d.levels);

  // Clockwise perimeter. In the standard drawing: up the left column, along
  // the top row left to right, down the right column, back along the bottom.
  // Mirroring the drawing swaps which column is on the left.
  const int left = layout == BlockLayout::Standard ? -n : n;
  const int step = layout == BlockLayout::Standard ? 1 : -1;
  std::vector<int> cyc;
  std::vector<Role> roles;
  for (int k = 0; k < d.levels; ++k) {
    cyc.push_back(d.vertex(left, k));
    roles.push_back(Role::U);
  }
  for (int i = 0; i < width; ++i) {
    const int x = left + step * i;
    cyc.push_back(d.vertex(x, d.levels));
    roles.push_back(x == 0 ? Role::W : (i < n ? Role::A : Role::B));
  }
  for (int k = d.levels - 1; k >= 0; --k) {
    cyc.push_back(d.vertex(-left, k));
    roles.push_back(Role::U);
  }
  for (int i = width - 2; i >= 1; --i) {
    cyc.push_back(d.vertex(left + step * i, 0));
    roles.push_back(Role::U);
  }
  d.cycle = make_cycle_from_indices(d.graph, std::move(cyc), std::move(roles), d.U, {d.target});
  return d;
}

SiteConfig discrete_state(const DiscreteDiagram& d, const Configuration& omega) {
  const auto reach = reachable(d.graph, omega, d.U);
  SiteConfig out(static_cast<std::size_t>(2 * d.radius + 1), 0);
  for (int x = -d.radius; x <= d.radius; ++x) out[static_cast<std::size_t>(x + d.radius)] = reach[d.vertex(x, d.levels)];
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// Closure of a seed set under one level's horizontal edges, as a matrix
// seed -> closure. Right edges x -> x+1 open with pr[x], left edges x -> x-1
// with pl[x].
RationalMatrix horizontal_closure(int m, const std::vector<Rational>& pr, const std::vector<Rational>& pl) {
  const int states = 1 << m;
  const int edges = 2 * (m - 1);  // bit x: right edge x -> x+1; bit m-1+x: left edge x+1 -> x
  RationalMatrix H = RationalMatrix::Zero(states, states);
  for (int cfg = 0; cfg < (1 << edges); ++cfg) {
    Rational w(1);
    for (int x = 0; x + 1 < m; ++x) {
      w *= ((cfg >> x) & 1) ? pr[static_cast<std::size_t>(x)] : Rational(1) - pr[static_cast<std::size_t>(x)];
      const bool left_open = (cfg >> (m - 1 + x)) & 1;
      w *= left_open ? pl[static_cast<std::size_t>(x + 1)] : Rational(1) - pl[static_cast<std::size_t>(x + 1)];
    }
    if (w == 0) continue;
    for (int seed = 0; seed < states; ++seed) {
      int closure = seed;
      for (int x = 0; x + 1 < m; ++x)  // rightward sweep
        if (((closure >> x) & 1) && ((cfg >> x) & 1)) closure |= 1 << (x + 1);
      for (int x = m - 2; x >= 0; --x)  // leftward sweep
        if (((closure >> (x + 1)) & 1) && ((cfg >> (m - 1 + x)) & 1)) closure |= 1 << x;
      // a leftward hop cannot enable a new rightward hop: rightward spread
      // from a newly infected site only reaches sites already infected
      H(seed, closure) += w;
    }
  }
  return H;
}

}  // namespace

Eigen::Matrix<Rational, 1, Eigen::Dynamic> exact_top_law(const ContactParams& params, int n, int N, const Rational& t,
                                                         const SiteConfig& eta0) {
  const int m = 2 * n + 1;
  if (m > 7) throw Error(Error::Kind::Guard, "transfer matrix is limited to 7 sites");
  if (n < 1 || n > params.radius) throw Error(Error::Kind::Input, "diagram radius must lie in [1, window radius]");
  if (!(Rational(N) > params.max_rate()))
    throw Error(Error::Kind::Domain, "N must exceed the largest rate so that every edge probability lies in [0,1]");
  const Rational t_hat = discretize_time(t, N);
  const long levels = boost::multiprecision::numerator(Rational(t_hat * N)).convert_to<long>();

  std::vector<Rational> pr(static_cast<std::size_t>(m)), pl(static_cast<std::size_t>(m)), pv(static_cast<std::size_t>(m));
  for (int x = -n; x <= n; ++x) {
    const auto i = static_cast<std::size_t>(params.index(x));
    const auto j = static_cast<std::size_t>(x + n);
    pr[j] = x < n ? params.infect_right[i] / N : Rational(0);
    pl[j] = x > -n ? params.infect_left[i] / N : Rational(0);
    pv[j] = Rational(1) - params.recovery[i] / N;
  }
  const int states = 1 << m;
  const RationalMatrix H = horizontal_closure(m, pr, pl);
  RationalMatrix V = RationalMatrix::Zero(states, states);
  for (int s = 0; s < states; ++s)
    for (int sub = s;; sub = (sub - 1) & s) {
      Rational w(1);
      for (int x = 0; x < m; ++x)
        if ((s >> x) & 1) w *= ((sub >> x) & 1) ? pv[static_cast<std::size_t>(x)] : Rational(1) - pv[static_cast<std::size_t>(x)];
      V(s, sub) += w;
      if (sub == 0) break;
    }
  const RationalMatrix step = V * H;

  int start = 0;
  for (int x = -n; x <= n; ++x)
    if (eta0[static_cast<std::size_t>(params.index(x))]) start |= 1 << (x + n);
  Eigen::Matrix<Rational, 1, Eigen::Dynamic> law = H.row(start);
  for (long k = 0; k < levels; ++k) law = law * step;
  return law;
}

// ---------------------------------------------------------------------------

std::pair<double, double> JointEstimate::marginal(std::size_t i) const {
  std::uint64_t hits = 0;
  for (std::size_t o = 0; o < counts.size(); ++o)
    if ((o >> i) & 1U) hits += counts[o];
  const double p = static_cast<double>(hits) / static_cast<double>(reps);
  return {p, std::sqrt(p * (1 - p) / static_cast<double>(reps))};
}

namespace {

JointEstimate finish(std::vector<int> targets, std::uint64_t reps, std::vector<std::uint64_t> counts) {
  JointEstimate est;
  est.targets = std::move(targets);
  est.reps = reps;
  est.counts = std::move(counts);
  for (auto c : est.counts) {
    const double p = static_cast<double>(c) / static_cast<double>(reps);
    est.prob.push_back(p);
    est.se.push_back(std::sqrt(p * (1 - p) / static_cast<double>(reps)));
  }
  return est;
}

void check_targets(std::span<const int> targets, int radius) {
  if (targets.size() > 12) throw Error(Error::Kind::Guard, "joint estimates are limited to 12 target sites");
  for (int x : targets)
    if (std::abs(x) > radius) throw Error(Error::Kind::Input, "target site outside the window");
}

}  // namespace

JointEstimate estimate_joint(const ContactParams& params, const SiteConfig& eta0, std::span<const int> targets,
                             double t, std::uint64_t reps, std::uint64_t seed) {
  if (reps < 1) throw Error(Error::Kind::Input, "reps must be at least 1");
  check_targets(targets, params.radius);
  std::vector<std::uint64_t> counts(std::size_t{1} << targets.size(), 0);
  GraphicalRep gr;
  SiteConfig state;
  for (std::uint64_t r = 0; r < reps; ++r) {
    Rng rng = make_stream(seed, r);
    simulate_graphical_into(gr, params, t, rng);
    state = eta0;
    evolve_state_into(state, gr, t);
    std::size_t o = 0;
    for (std::size_t i = 0; i < targets.size(); ++i)
      if (state[static_cast<std::size_t>(params.index(targets[i]))]) o |= std::size_t{1} << i;
    ++counts[o];
  }
  return finish({targets.begin(), targets.end()}, reps, std::move(counts));
}

JointEstimate estimate_joint(const DiscreteDiagram& diagram, std::span<const int> targets, std::uint64_t reps,
                             std::uint64_t seed) {
  if (reps < 1) throw Error(Error::Kind::Input, "reps must be at least 1");
  check_targets(targets, diagram.radius);
  std::vector<std::uint64_t> counts(std::size_t{1} << targets.size(), 0);
  const auto top = diagram.top_row(targets);
  Reacher reacher(diagram.graph);
  for (std::uint64_t r = 0; r < reps; ++r) {
    Rng rng = make_stream(seed, r);
    const auto omega = sample_config(diagram.graph, rng);
    const auto& reach = reacher.from(omega, diagram.U);
    std::size_t o = 0;
    for (std::size_t i = 0; i < top.size(); ++i)
      if (reach[top[i]]) o |= std::size_t{1} << i;
    ++counts[o];
  }
  return finish({targets.begin(), targets.end()}, reps, std::move(counts));
}

}  // namespace perco
