#include "perco/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <optional>

#include "perco/error.hpp"

namespace perco {

Rational JointDistribution::marginal(std::size_t i) const {
  Rational s(0);
  for (const auto& [o, w] : outcomes)
    if ((o >> i) & 1U) s += w;
  return s;
}

JointDistribution JointDistribution::from_weights(std::vector<std::string> labels,
                                                  std::vector<std::pair<std::uint64_t, Rational>> weights) {
  if (labels.size() > 64) throw Error(Error::Kind::Guard, "joint distributions are limited to 64 variables");
  std::map<std::uint64_t, Rational> merged;
  Rational total(0);
  for (auto& [o, w] : weights) {
    if (w < 0) throw Error(Error::Kind::Domain, "negative weight");
    if (w == 0) continue;
    merged[o] += w;
    total += w;
  }
  if (total == 0) throw Error(Error::Kind::Domain, "conditioning event has probability zero");
  JointDistribution d;
  d.labels = std::move(labels);
  d.condition_probability = total;
  for (auto& [o, w] : merged) d.outcomes.emplace_back(o, w / total);
  return d;
}

namespace {

using Evaluator = std::function<std::optional<std::uint64_t>(const Configuration&)>;

// Sums the product measure over all assignments of the free edges; the
// evaluator returns the outcome, or nothing when the condition fails.
JointDistribution enumerate_outcomes(const MixedPlanarGraph& g, std::vector<std::string> labels,
                                     const Evaluator& eval) {
  std::vector<int> free;
  Configuration base(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& p = g.edge(static_cast<int>(e)).p;
    if (p > 0 && p < 1)
      free.push_back(static_cast<int>(e));
    else
      base.set(e, p == 1);
  }
  if (free.size() > 24) throw Error(Error::Kind::Guard, "enumeration is limited to 24 edges with 0 < p < 1");

  std::map<std::uint64_t, Rational> acc;
  Rational total(0);
  std::vector<Rational> prefix(free.size() + 1);
  prefix[0] = 1;
  Configuration omega = base;
  // prefix[i] is the weight of the first i free edges
  const std::size_t k = free.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    // recompute only the tail that changed since m - 1
    std::size_t from = 0;
    if (m > 0) {
      const auto changed = m ^ (m - 1);
      from = k - static_cast<std::size_t>(std::bit_width(changed));
    }
    // bit i of m is free edge k-1-i, so consecutive m share a prefix
    for (std::size_t i = from; i < k; ++i) {
      const bool open = (m >> (k - 1 - i)) & 1U;
      const auto e = static_cast<std::size_t>(free[i]);
      omega.set(e, open);
      const auto& p = g.edge(free[i]).p;
      prefix[i + 1] = prefix[i] * (open ? p : Rational(1) - p);
    }
    const auto out = eval(omega);
    if (!out) continue;
    acc[*out] += prefix[k];
    total += prefix[k];
  }
  if (total == 0) throw Error(Error::Kind::Domain, "conditioning event has probability zero");
  JointDistribution d;
  d.labels = std::move(labels);
  d.condition_probability = total;
  for (auto& [o, w] : acc)
    if (w != 0) d.outcomes.emplace_back(o, w / total);
  return d;
}

}  // namespace

JointDistribution enumerate_measure(const MixedPlanarGraph& g, const ConfigPredicate& condition,
                                    std::span<const Statistic> variables) {
  if (variables.size() > 64) throw Error(Error::Kind::Guard, "joint distributions are limited to 64 variables");
  std::vector<std::string> labels;
  for (const auto& v : variables) labels.push_back(v.label);
  return enumerate_outcomes(g, std::move(labels), [&](const Configuration& omega) -> std::optional<std::uint64_t> {
    if (condition && !condition(omega)) return std::nullopt;
    std::uint64_t o = 0;
    for (std::size_t i = 0; i < variables.size(); ++i)
      if (variables[i].value(omega)) o |= std::uint64_t{1} << i;
    return o;
  });
}

// ---------------------------------------------------------------------------

bool is_monotone(int arity, std::uint16_t table) {
  const unsigned n = 1U << arity;
  for (unsigned v = 0; v < n; ++v)
    for (int i = 0; i < arity; ++i)
      if (!((v >> i) & 1U) && ((table >> v) & 1U) && !((table >> (v | (1U << i))) & 1U)) return false;
  return true;
}

std::vector<MonotoneFunction> monotone_functions(int arity) {
  if (arity < 0 || arity > 4) throw Error(Error::Kind::Guard, "monotone functions are enumerated for arity 0..4");
  std::vector<MonotoneFunction> out;
  const std::uint32_t tables = std::uint32_t{1} << (1U << arity);
  for (std::uint32_t t = 0; t < tables; ++t)
    if (is_monotone(arity, static_cast<std::uint16_t>(t))) out.push_back({arity, static_cast<std::uint16_t>(t)});
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Rational to_rational(const BigInt& x) { return Rational(x); }

Rational to_rational(__int128 x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  BigInt hi(static_cast<std::uint64_t>(u >> 64));
  BigInt lo(static_cast<std::uint64_t>(u));
  BigInt r = (hi << 64) + lo;
  return Rational(neg ? BigInt(-r) : r);
}

template <typename Int>
struct Weighted {
  std::vector<std::pair<std::uint64_t, Int>> outcomes;
  Int total{0};
};

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

template <typename Int>
void scan_pairs(const Weighted<Int>& wd, std::size_t arity, std::size_t k, AssociationReport& rep) {
  const auto fns = monotone_functions(static_cast<int>(k));
  const unsigned cells = 1U << k;
  const std::uint16_t full = static_cast<std::uint16_t>((1U << cells) - 1);
  const Int& Z = wd.total;
  std::optional<Int> best;
  std::vector<Int> marg(cells);
  std::vector<Int> ef(fns.size());

  auto sum_over = [&](unsigned table) {
    Int s(0);
    for (unsigned v = 0; v < cells; ++v)
      if ((table >> v) & 1U) s += marg[v];
    return s;
  };

  for (const auto& subset : subsets_of_size(arity, k)) {
    std::fill(marg.begin(), marg.end(), Int(0));
    for (const auto& [o, w] : wd.outcomes) {
      unsigned v = 0;
      for (std::size_t j = 0; j < k; ++j)
        if ((o >> subset[j]) & 1U) v |= 1U << j;
      marg[v] += w;
    }
    for (std::size_t i = 0; i < fns.size(); ++i) ef[i] = sum_over(fns[i].table);
    for (std::size_t i = 0; i < fns.size(); ++i)
      for (std::size_t j = 0; j < fns.size(); ++j) {
        const Int sfg = sum_over(fns[i].table & fns[j].table);
        const Int cov = Z * sfg - ef[i] * ef[j];
        ++rep.pairs_tested;
        if (!best || cov < *best) {
          best = cov;
          rep.argmin_subset = subset;
          rep.argmin_f = fns[i].table;
          rep.argmin_g = fns[j].table;
        }
        // decreasing partner: 1 - g_j, summed directly from its table
        const auto dec = static_cast<std::uint16_t>(~fns[j].table & full);
        const Int cov_dec = Z * sum_over(fns[i].table & dec) - ef[i] * sum_over(dec);
        if (cov_dec != -cov) ++rep.identity_mismatches;
      }
    ++rep.subsets_tested;
  }
  if (best) rep.min_covariance = to_rational(*best) / (to_rational(Z) * to_rational(Z));
}

template <typename Int>
void scan_products(const Weighted<Int>& wd, std::size_t arity, AssociationReport& rep) {
  const std::size_t cells = std::size_t{1} << arity;
  std::vector<Int> q(cells, Int(0));
  for (const auto& [o, w] : wd.outcomes) q[o] += w;
  // superset sums: q[A] = weight of {X_i = 1 for all i in A}
  for (std::size_t i = 0; i < arity; ++i)
    for (std::size_t a = 0; a < cells; ++a)
      if (!((a >> i) & 1U)) q[a] += q[a | (std::size_t{1} << i)];
  const Int& Z = wd.total;
  std::optional<Int> best;
  for (std::size_t a = 0; a < cells; ++a)
    for (std::size_t b = 0; b < cells; ++b) {
      const Int gap = Z * q[a | b] - q[a] * q[b];
      if (!best || gap < *best) best = gap;
      ++rep.product_pairs;
    }
  rep.product_events_tested = true;
  rep.min_product_gap = to_rational(*best) / (to_rational(Z) * to_rational(Z));
}

template <typename Int>
Weighted<Int> integer_weights(const JointDistribution& dist, const BigInt& lcm) {
  Weighted<Int> wd;
  for (const auto& [o, w] : dist.outcomes) {
    const BigInt scaled = numerator(w) * (lcm / denominator(w));
    if constexpr (std::is_same_v<Int, BigInt>)
      wd.outcomes.emplace_back(o, scaled);
    else
      wd.outcomes.emplace_back(o, static_cast<Int>(scaled.convert_to<long long>()));
    wd.total += wd.outcomes.back().second;
  }
  return wd;
}

}  // namespace

Rational covariance(const JointDistribution& dist, std::span<const std::size_t> subset, std::uint16_t f,
                    std::uint16_t g) {
  if (subset.size() > 4) throw Error(Error::Kind::Guard, "covariance tables cover at most 4 variables");
  Rational ef(0), eg(0), efg(0);
  for (const auto& [o, w] : dist.outcomes) {
    unsigned v = 0;
    for (std::size_t j = 0; j < subset.size(); ++j)
      if ((o >> subset[j]) & 1U) v |= 1U << j;
    const bool fv = (f >> v) & 1U, gv = (g >> v) & 1U;
    if (fv) ef += w;
    if (gv) eg += w;
    if (fv && gv) efg += w;
  }
  return efg - ef * eg;
}

AssociationReport check_positive_association(const JointDistribution& dist, int k_max) {
  if (k_max < 0 || k_max > 4) throw Error(Error::Kind::Guard, "subset size cap must lie in 0..4");
  AssociationReport rep;
  rep.arity = dist.arity();
  const auto k = std::min<std::size_t>(static_cast<std::size_t>(k_max), dist.arity());
  rep.subset_size = k;

  BigInt lcm(1);
  for (const auto& [o, w] : dist.outcomes) {
    const BigInt d = denominator(w);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  // products of two sums of weights must fit in 127 bits
  const bool small = lcm < (BigInt(1) << 60);
  const bool products = dist.arity() <= 12;
  if (small) {
    const auto wd = integer_weights<__int128>(dist, lcm);
    scan_pairs(wd, dist.arity(), k, rep);
    if (products) scan_products(wd, dist.arity(), rep);
  } else {
    const auto wd = integer_weights<BigInt>(dist, lcm);
    scan_pairs(wd, dist.arity(), k, rep);
    if (products) scan_products(wd, dist.arity(), rep);
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

void require_disjoint(const MixedPlanarGraph& g, std::span<const int> S, std::span<const int> T) {
  std::vector<char> in_s(g.num_vertices(), 0);
  for (int s : S) {
    if (s < 0 || static_cast<std::size_t>(s) >= g.num_vertices()) throw Error(Error::Kind::Input, "unknown vertex in S");
    in_s[s] = 1;
  }
  for (int t : T) {
    if (t < 0 || static_cast<std::size_t>(t) >= g.num_vertices()) throw Error(Error::Kind::Input, "unknown vertex in T");
    if (in_s[t]) throw Error(Error::Kind::Domain, "S and T must be disjoint");
  }
}

}  // namespace

JointDistribution theorem3_distribution(const MixedPlanarGraph& g, std::span<const int> S, std::span<const int> T,
                                        std::span<const int> edges) {
  require_disjoint(g, S, T);
  if (2 * edges.size() > 64) throw Error(Error::Kind::Guard, "at most 32 edges can carry statistics");
  std::vector<std::string> labels;
  for (int e : edges) labels.push_back("X" + std::to_string(g.edge(e).id));
  for (int e : edges) labels.push_back("1-Y" + std::to_string(g.edge(e).id));
  const std::vector<int> sv(S.begin(), S.end()), tv(T.begin(), T.end());
  const std::vector<int> ev(edges.begin(), edges.end());
  return enumerate_outcomes(g, std::move(labels), [&](const Configuration& omega) -> std::optional<std::uint64_t> {
    const auto from_s = reachable(g, omega, sv);
    for (int t : tv)
      if (from_s[t]) return std::nullopt;
    const auto to_t = coreachable(g, omega, tv);
    std::uint64_t o = 0;
    for (std::size_t i = 0; i < ev.size(); ++i) {
      const auto& edge = g.edge(ev[i]);
      if (!omega[static_cast<std::size_t>(ev[i])]) {
        o |= std::uint64_t{1} << (ev.size() + i);  // Y = 0
        continue;
      }
      const bool x = from_s[edge.tail] || (!edge.oriented && from_s[edge.head]);
      const bool y = to_t[edge.head] || (!edge.oriented && to_t[edge.tail]);
      if (x) o |= std::uint64_t{1} << i;
      if (!y) o |= std::uint64_t{1} << (ev.size() + i);
    }
    return o;
  });
}

AssociationReport verify_theorem3(const MixedPlanarGraph& g, std::span<const int> S, std::span<const int> T,
                                  std::span<const int> edges, int k_max) {
  return check_positive_association(theorem3_distribution(g, S, T, edges), k_max);
}

JointDistribution theorem4_distribution(const MixedPlanarGraph& g, const BoundaryCycle& C) {
  const auto a = C.block(Role::A);
  const auto b = C.block(Role::B);
  std::vector<std::string> labels;
  for (int x : a) labels.push_back("U->" + std::to_string(g.vertex(x).id));
  for (int x : b) labels.push_back("U-/->" + std::to_string(g.vertex(x).id));
  const std::vector<int> U(C.U().begin(), C.U().end()), W(C.W().begin(), C.W().end());
  return enumerate_outcomes(g, std::move(labels), [&](const Configuration& omega) -> std::optional<std::uint64_t> {
    const auto reach = reachable(g, omega, U);
    if (std::none_of(W.begin(), W.end(), [&](int w) { return reach[w] != 0; })) return std::nullopt;
    std::uint64_t o = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (reach[a[i]]) o |= std::uint64_t{1} << i;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!reach[b[j]]) o |= std::uint64_t{1} << (a.size() + j);
    return o;
  });
}

AssociationReport verify_theorem4(const MixedPlanarGraph& g, const BoundaryCycle& C, int k_max) {
  return check_positive_association(theorem4_distribution(g, C), k_max);
}

JointDistribution theorem2_distribution(const ContactParams& params, int n, int N, const Rational& t,
                                        const SiteConfig& eta0) {
  const auto law = exact_top_law(params, n, N, t, eta0);
  std::vector<std::string> labels;
  for (int x = -n; x < 0; ++x) labels.push_back("1-eta(" + std::to_string(x) + ")");
  for (int x = 1; x <= n; ++x) labels.push_back("eta(" + std::to_string(x) + ")");
  std::vector<std::pair<std::uint64_t, Rational>> weights;
  for (Eigen::Index s = 0; s < law.size(); ++s) {
    if (!((s >> n) & 1)) continue;
    std::uint64_t o = 0;
    std::size_t i = 0;
    for (int x = -n; x < 0; ++x, ++i)
      if (!((s >> (x + n)) & 1)) o |= std::uint64_t{1} << i;
    for (int x = 1; x <= n; ++x, ++i)
      if ((s >> (x + n)) & 1) o |= std::uint64_t{1} << i;
    weights.emplace_back(o, law(s));
  }
  return JointDistribution::from_weights(std::move(labels), std::move(weights));
}

// ---------------------------------------------------------------------------

ConjectureResult conjecture_from_law(const Eigen::Matrix<Rational, 1, Eigen::Dynamic>& law, int radius, int n,
                                     int m) {
  if (n < 1 || m < 1 || n > radius || m > radius) throw Error(Error::Kind::Input, "n and m must lie in [1, radius]");
  Rational c(0), a(0), b(0), ab(0);
  for (Eigen::Index s = 0; s < law.size(); ++s) {
    if (!((s >> radius) & 1)) continue;
    bool in_a = true, in_b = true;
    for (int x = -n; x <= -1; ++x) in_a = in_a && !((s >> (x + radius)) & 1);
    for (int x = 1; x <= m; ++x) in_b = in_b && !((s >> (x + radius)) & 1);
    c += law(s);
    if (in_a) a += law(s);
    if (in_b) b += law(s);
    if (in_a && in_b) ab += law(s);
  }
  if (c == 0) throw Error(Error::Kind::Domain, "conditioning event eta(0) = 1 has probability zero");
  ConjectureResult r;
  r.n = n;
  r.m = m;
  r.mode = ConjectureMode::ExactDiscrete;
  r.exact_lhs = ab / c;
  r.exact_rhs = (a / c) * (b / c);
  r.lhs = to_double(r.exact_lhs);
  r.rhs = to_double(r.exact_rhs);
  r.pass = r.exact_lhs <= r.exact_rhs;
  return r;
}

ConjectureResult conjecture_from_estimate(const JointEstimate& est, int n, int m) {
  if (n < 1 || m < 1) throw Error(Error::Kind::Input, "n and m must be positive");
  auto slot = [&](int x) {
    const auto it = std::find(est.targets.begin(), est.targets.end(), x);
    if (it == est.targets.end()) throw Error(Error::Kind::Input, "estimate does not cover site " + std::to_string(x));
    return static_cast<std::size_t>(it - est.targets.begin());
  };
  const auto zero = slot(0);
  std::vector<std::size_t> left, right;
  for (int x = -n; x <= -1; ++x) left.push_back(slot(x));
  for (int x = 1; x <= m; ++x) right.push_back(slot(x));

  double c = 0, na = 0, nb = 0, nab = 0;
  // per-outcome indicators for the second pass
  struct Cell {
    double count;
    bool a, b;
  };
  std::vector<Cell> cells;
  for (std::size_t o = 0; o < est.counts.size(); ++o) {
    if (!((o >> zero) & 1U) || est.counts[o] == 0) continue;
    bool in_a = true, in_b = true;
    for (auto i : left) in_a = in_a && !((o >> i) & 1U);
    for (auto i : right) in_b = in_b && !((o >> i) & 1U);
    const auto k = static_cast<double>(est.counts[o]);
    c += k;
    if (in_a) na += k;
    if (in_b) nb += k;
    if (in_a && in_b) nab += k;
    cells.push_back({k, in_a, in_b});
  }
  if (c == 0) throw Error(Error::Kind::Domain, "eta(0) = 1 was never observed; increase reps or t");

  ConjectureResult r;
  r.n = n;
  r.m = m;
  r.mode = ConjectureMode::MonteCarlo;
  r.reps = est.reps;
  r.conditioned = static_cast<std::uint64_t>(c);
  const double pa = na / c, pb = nb / c, pab = nab / c;
  r.lhs = pab;
  r.rhs = pa * pb;
  // delta method: influence of (pab - pa pb) is AB - pb A - pa B
  auto variance = [&](auto psi) {
    double mean = 0, sq = 0;
    for (const auto& cell : cells) {
      const double v = psi(cell.a ? 1.0 : 0.0, cell.b ? 1.0 : 0.0);
      mean += cell.count * v;
      sq += cell.count * v * v;
    }
    mean /= c;
    return std::max(0.0, sq / c - mean * mean);
  };
  r.se = std::sqrt(variance([&](double A, double B) { return A * B - pb * A - pa * B; }) / c);
  r.se_lhs = std::sqrt(pab * (1 - pab) / c);
  r.se_rhs = std::sqrt(variance([&](double A, double B) { return pb * A + pa * B; }) / c);
  r.pass = r.lhs <= r.rhs + 3 * r.se;
  return r;
}

ConjectureResult verify_conjecture1(const ContactParams& params, int n, int m, const Rational& t,
                                    ConjectureMode mode, int N, int n_diagram, std::uint64_t reps,
                                    std::uint64_t seed) {
  const auto eta0 = all_infected(params.radius);
  if (mode == ConjectureMode::ExactDiscrete) {
    if (n > n_diagram || m > n_diagram) throw Error(Error::Kind::Input, "n and m must not exceed the diagram radius");
    return conjecture_from_law(exact_top_law(params, n_diagram, N, t, eta0), n_diagram, n, m);
  }
  std::vector<int> targets;
  for (int x = -n; x <= m; ++x) targets.push_back(x);
  return conjecture_from_estimate(estimate_joint(params, eta0, targets, to_double(t), reps, seed), n, m);
}

}  // namespace perco
