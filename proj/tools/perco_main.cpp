// perco: command-line front end.
//
// Exit status: 0 when the run passes (or has nothing to verify), 1 when a
// verification fails, 2 on usage or input errors.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "perco/contact.hpp"
#include "perco/dual.hpp"
#include "perco/duality_convention.hpp"
#include "perco/error.hpp"
#include "perco/graph_io.hpp"
#include "perco/mcmc.hpp"
#include "perco/report.hpp"
#include "perco/verify.hpp"

namespace {

using namespace perco;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string spec;
  std::string out;
  std::uint64_t seed = 1;
  std::string lambda = "1";
  std::string delta = "1";
  std::string t = "1";
  int radius = 50;
  int n = 1;
  int m = 1;
  int N = 0;
  std::uint64_t reps = 10000;
  std::uint64_t steps = 1000;
  std::int64_t burn_in = -1;
  std::uint64_t thin = 1;
  int k_max = 3;
  std::string mode = "mc";
  std::vector<int> S;
  std::vector<int> T;
  std::vector<int> targets;
};

const char* kind_name(Error::Kind k) {
  switch (k) {
    case Error::Kind::Input: return "input";
    case Error::Kind::Geometry: return "geometry";
    case Error::Kind::Guard: return "guard";
    case Error::Kind::Domain: return "domain";
    case Error::Kind::Internal: return "internal";
  }
  return "error";
}

// Emits the report (and optional CSV) to stdout and, with --out, to files.
void emit(const Options& o, const Report& report, const CsvTable* csv, const std::string& stem) {
  std::cout << report.str();
  if (csv) std::cout << '\n' << csv->str();
  if (o.out.empty()) return;
  write_file(o.out, stem + ".txt", report.str());
  if (csv) write_file(o.out, stem + ".csv", csv->str());
}

RunConfig base_config(const std::string& command, const Options& o) {
  RunConfig c;
  c.command = command;
  c.spec_path = o.spec;
  c.seed = o.seed;
  c.out_dir = o.out;
  return c;
}

std::string ids(const MixedPlanarGraph& g, std::span<const int> idx) {
  std::string s;
  for (int v : idx) s += (s.empty() ? "" : " ") + std::to_string(g.vertex(v).id);
  return s;
}

std::vector<int> to_indices(const MixedPlanarGraph& g, const std::vector<int>& vertex_ids, const char* what) {
  std::vector<int> out;
  for (int id : vertex_ids) {
    const int v = g.index_of(id);
    if (v < 0) throw Error(Error::Kind::Input, std::string("unknown vertex id in ") + what + ": " + std::to_string(id));
    out.push_back(v);
  }
  return out;
}

void add_association(Report& r, const AssociationReport& a, const JointDistribution& d) {
  r.add("variables", static_cast<std::uint64_t>(a.arity));
  r.add("condition_probability", to_string(d.condition_probability));
  r.add("subset_size", static_cast<std::uint64_t>(a.subset_size));
  r.add("subsets_tested", static_cast<std::uint64_t>(a.subsets_tested));
  r.add("pairs_tested", a.pairs_tested);
  r.add("min_covariance", to_string(a.min_covariance));
  std::string arg;
  for (auto i : a.argmin_subset) arg += (arg.empty() ? "" : " ") + d.labels[i];
  r.add("argmin_subset", arg);
  r.add("argmin_f", static_cast<int>(a.argmin_f));
  r.add("argmin_g", static_cast<int>(a.argmin_g));
  r.add("identity_mismatches", a.identity_mismatches);
  r.add("product_events_tested", a.product_events_tested);
  if (a.product_events_tested) {
    r.add("product_pairs", a.product_pairs);
    r.add("min_product_gap", to_string(a.min_product_gap));
  }
  r.add("verdict", a.pass() ? "pass" : "fail");
}

// ---------------------------------------------------------------------------

int run_enumerate(const Options& o) {
  const auto spec = load_graph_spec(o.spec);
  const auto g = build_graph(spec);
  std::vector<int> sources;
  if (!o.S.empty())
    sources = to_indices(g, o.S, "--source");
  else if (spec.cycle)
    sources = to_indices(g, spec.cycle->U, "cycle U");
  else
    throw Error(Error::Kind::Input, "enumerate needs --source or a boundary cycle");

  std::vector<Statistic> stats;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    stats.push_back({std::to_string(g.vertex(static_cast<int>(v)).id), [&g, &sources, v](const Configuration& w) {
                       return reachable(g, w, sources)[v] != 0;
                     }});
  const auto dist = enumerate_measure(g, {}, stats);

  auto cfg = base_config("enumerate", o);
  Report r(cfg);
  r.add("vertices", static_cast<std::uint64_t>(g.num_vertices()));
  r.add("edges", static_cast<std::uint64_t>(g.num_edges()));
  r.add("sources", ids(g, sources));
  CsvTable csv({"vertex", "probability", "approx"});
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto p = dist.marginal(v);
    csv.add_row({dist.labels[v], to_string(p), format_double(to_double(p))});
  }
  if (spec.cycle) {
    const auto W = to_indices(g, spec.cycle->W, "cycle W");
    const auto p = enumerate_measure(g, {}, std::vector<Statistic>{{"U->W", [&](const Configuration& w) {
                                                                       const auto reach = reachable(g, w, sources);
                                                                       for (int x : W)
                                                                         if (reach[x]) return true;
                                                                       return false;
                                                                     }}})
                       .marginal(0);
    r.add("p_source_to_W", to_string(p));
  }
  emit(o, r, &csv, "enumerate");
  return kPass;
}

int run_dual(const Options& o) {
  const auto ng = normalize_spec(load_graph_spec(o.spec));
  const auto H = build_dual(ng, kPinnedConvention);
  auto cfg = base_config("dual", o);
  Report r(cfg);
  r.add("convention", to_string(kPinnedConvention));
  r.add("primal_vertices", static_cast<std::uint64_t>(ng.graph.num_vertices()));
  r.add("primal_edges", static_cast<std::uint64_t>(ng.graph.num_edges()));
  r.add("dual_vertices", static_cast<std::uint64_t>(H.num_vertices()));
  r.add("dual_edges", static_cast<std::uint64_t>(H.num_edges()));
  std::cout << r.str();
  if (!o.out.empty()) {
    write_file(o.out, "dual.txt", r.str());
    write_file(o.out, "dual.json", dual_graph_json(H, ng).dump(2) + "\n");
    std::ostringstream primal;
    write_graph_spec(primal, [&] {
      auto s = ng.graph.to_spec();
      s.cycle = to_cycle_spec(ng.graph, ng.cycle);
      return s;
    }());
    write_file(o.out, "normalized.json", primal.str());
  }
  return kPass;
}

int run_sample_mcmc(const Options& o) {
  const auto ng = normalize_spec(load_graph_spec(o.spec));
  const auto& g = ng.graph;
  Configuration alpha(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) alpha.set(e, g.edge(static_cast<int>(e)).p > 0);
  auto state = init_chain(ng, alpha);
  auto opts = default_run_options(ng, o.steps);
  if (o.burn_in >= 0) opts.burn_in = static_cast<std::uint64_t>(o.burn_in);
  opts.thin = o.thin;
  Rng rng = make_stream(o.seed, 0);
  const auto samples = run_chain(ng, state, opts, rng);

  auto cfg = base_config("sample-mcmc", o);
  cfg.set("steps", std::to_string(opts.steps));
  cfg.set("burn_in", std::to_string(opts.burn_in));
  cfg.set("thin", std::to_string(opts.thin));
  Report r(cfg);
  r.add("edges", static_cast<std::uint64_t>(g.num_edges()));
  r.add("samples", static_cast<std::uint64_t>(samples.size()));
  CsvTable csv({"step", "config", "open_edges", "infected"});
  std::vector<std::uint64_t> hits(g.num_vertices(), 0);
  for (const auto& s : samples) {
    std::string inf;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      if (s.infected[v]) {
        ++hits[v];
        inf += (inf.empty() ? "" : " ") + std::to_string(g.vertex(static_cast<int>(v)).id);
      }
    csv.add_row({std::to_string(s.step), s.config.hex(), std::to_string(s.config.count()), inf});
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (!samples.empty())
      r.add("freq_infected_" + std::to_string(g.vertex(static_cast<int>(v)).id),
            static_cast<double>(hits[v]) / static_cast<double>(samples.size()));
  emit(o, r, &csv, "mcmc");
  return kPass;
}

ContactParams contact_params(const Options& o) {
  return ContactParams::homogeneous(o.radius, parse_rational(o.lambda), parse_rational(o.delta));
}

int run_simulate_contact(const Options& o) {
  const auto params = contact_params(o);
  const auto t = parse_rational(o.t);
  std::vector<int> targets = o.targets;
  if (targets.empty())
    for (int x = -o.n; x <= o.n; ++x) targets.push_back(x);
  auto cfg = base_config("simulate-contact", o);
  cfg.set("lambda", o.lambda);
  cfg.set("delta", o.delta);
  cfg.set("t", o.t);
  cfg.set("radius", std::to_string(o.radius));
  cfg.set("reps", std::to_string(o.reps));
  if (o.N > 0) cfg.set("N", std::to_string(o.N));

  JointEstimate est;
  if (o.N > 0) {
    const auto d = build_discrete(params, o.radius, o.N, t, all_infected(o.radius));
    est = estimate_joint(d, targets, o.reps, o.seed);
  } else {
    est = estimate_joint(params, all_infected(o.radius), targets, to_double(t), o.reps, o.seed);
  }
  Report r(cfg);
  r.add("source", o.N > 0 ? "discrete" : "continuous");
  CsvTable csv({"site", "p_infected", "se"});
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto [p, se] = est.marginal(i);
    csv.add_row({std::to_string(targets[i]), format_double(p), format_double(se)});
  }
  emit(o, r, &csv, "contact");
  return kPass;
}

int run_theorem3(const Options& o) {
  const auto g = build_graph(load_graph_spec(o.spec), false);
  const auto S = to_indices(g, o.S, "--S");
  const auto T = to_indices(g, o.T, "--T");
  if (S.empty() || T.empty()) throw Error(Error::Kind::Input, "theorem3 needs non-empty --S and --T");
  std::vector<int> edges(g.num_edges());
  for (std::size_t e = 0; e < edges.size(); ++e) edges[e] = static_cast<int>(e);
  const auto dist = theorem3_distribution(g, S, T, edges);
  const auto rep = check_positive_association(dist, o.k_max);
  auto cfg = base_config("verify theorem3", o);
  cfg.set("S", ids(g, S));
  cfg.set("T", ids(g, T));
  cfg.set("k_max", std::to_string(o.k_max));
  Report r(cfg);
  add_association(r, rep, dist);
  emit(o, r, nullptr, "theorem3");
  return rep.pass() ? kPass : kFail;
}

int run_theorem4(const Options& o) {
  const auto spec = load_graph_spec(o.spec);
  if (!spec.cycle) throw Error(Error::Kind::Input, "theorem4 needs a boundary cycle in the spec");
  const auto g = build_graph(spec);
  const auto C = make_cycle(g, *spec.cycle);
  const auto dist = theorem4_distribution(g, C);
  const auto rep = check_positive_association(dist, o.k_max);
  auto cfg = base_config("verify theorem4", o);
  cfg.set("k_max", std::to_string(o.k_max));
  Report r(cfg);
  add_association(r, rep, dist);
  emit(o, r, nullptr, "theorem4");
  return rep.pass() ? kPass : kFail;
}

int run_conjecture1(const Options& o) {
  if (o.mode != "mc" && o.mode != "exact") throw Error(Error::Kind::Input, "--mode must be mc or exact");
  const bool exact = o.mode == "exact";
  const int radius = exact ? std::max(o.n, o.m) : o.radius;
  const auto params = ContactParams::homogeneous(radius, parse_rational(o.lambda), parse_rational(o.delta));
  const int N = o.N > 0 ? o.N : 2;
  const auto res = verify_conjecture1(params, o.n, o.m, parse_rational(o.t),
                                      exact ? ConjectureMode::ExactDiscrete : ConjectureMode::MonteCarlo, N, radius,
                                      o.reps, o.seed);
  auto cfg = base_config("verify conjecture1", o);
  cfg.set("mode", o.mode);
  cfg.set("lambda", o.lambda);
  cfg.set("delta", o.delta);
  cfg.set("t", o.t);
  cfg.set("n", std::to_string(o.n));
  cfg.set("m", std::to_string(o.m));
  cfg.set("radius", std::to_string(radius));
  if (exact)
    cfg.set("N", std::to_string(N));
  else
    cfg.set("reps", std::to_string(o.reps));
  Report r(cfg);
  if (exact) {
    r.add("lhs_exact", to_string(res.exact_lhs));
    r.add("rhs_exact", to_string(res.exact_rhs));
  } else {
    r.add("conditioned", res.conditioned);
    r.add("se_lhs", res.se_lhs);
    r.add("se_rhs", res.se_rhs);
  }
  r.add("verdict", res.pass ? "pass" : "fail");
  CsvTable csv({"instance", "lhs", "rhs", "se", "verdict"});
  csv.add_row({"n=" + std::to_string(o.n) + ";m=" + std::to_string(o.m), format_double(res.lhs),
               format_double(res.rhs), format_double(res.se), res.pass ? "pass" : "fail"});
  emit(o, r, &csv, "conjecture1");
  return res.pass ? kPass : kFail;
}

int run_duality(const Options& o) {
  const auto ng = normalize_spec(load_graph_spec(o.spec));
  const auto survey = survey_duality(ng, kPinnedConvention);
  auto cfg = base_config("verify duality", o);
  Report r(cfg);
  r.add("convention", to_string(kPinnedConvention));
  r.add("pinned_verdict", to_string(kPinnedVerdict));
  r.add("checks", survey.checks);
  r.add("equal", survey.equal);
  r.add("complemented", survey.complemented);
  const auto v = survey.verdict();
  const auto agreeing = v == DualityVerdict::HoldsAsStated ? survey.equal : survey.complemented;
  r.add("observed_verdict", to_string(v));
  r.add("consistency", survey.checks ? 100.0 * static_cast<double>(agreeing) / static_cast<double>(survey.checks) : 100.0);
  const bool pass = v == kPinnedVerdict;
  r.add("verdict", pass ? "pass" : "fail");
  emit(o, r, nullptr, "duality");
  return pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Percolation, duality and contact-process verification tools"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "master seed");
    c->add_option("--out", o.out, "output directory for report files");
  };
  auto spec_opt = [&](CLI::App* c) { c->add_option("--spec", o.spec, "graph spec (JSON)")->required(); };
  auto contact_opts = [&](CLI::App* c) {
    c->add_option("--lambda", o.lambda, "infection rate");
    c->add_option("--delta", o.delta, "recovery rate");
    c->add_option("--t", o.t, "time");
    c->add_option("--radius", o.radius, "window radius");
    c->add_option("--reps", o.reps, "replicas");
    c->add_option("--N", o.N, "time resolution of the discrete diagram");
  };

  auto* enumerate = app.add_subcommand("enumerate", "exact connection probabilities from the sources");
  spec_opt(enumerate);
  common(enumerate);
  enumerate->add_option("--source", o.S, "source vertex ids (default: cycle U)");

  auto* dual = app.add_subcommand("dual", "normalize and build the dual graph");
  spec_opt(dual);
  common(dual);

  auto* mcmc = app.add_subcommand("sample-mcmc", "run the resampling chain conditioned on U -> W");
  spec_opt(mcmc);
  common(mcmc);
  mcmc->add_option("--steps", o.steps, "transitions");
  mcmc->add_option("--burn-in", o.burn_in, "burn-in (default 10 |E|)");
  mcmc->add_option("--thin", o.thin, "keep every thin-th state");

  auto* contact = app.add_subcommand("simulate-contact", "estimate infection probabilities from all-infected");
  common(contact);
  contact_opts(contact);
  contact->add_option("--n", o.n, "report sites -n..n");
  contact->add_option("--sites", o.targets, "explicit sites");

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  auto* th3 = verify->add_subcommand("theorem3", "association given {S -/-> T} on a mixed graph");
  spec_opt(th3);
  common(th3);
  th3->add_option("--S", o.S, "source vertex ids")->required();
  th3->add_option("--T", o.T, "target vertex ids")->required();
  th3->add_option("--k", o.k_max, "subset size cap (<= 4)");
  auto* th4 = verify->add_subcommand("theorem4", "association of the a/b indicators given {U -> W}");
  spec_opt(th4);
  common(th4);
  th4->add_option("--k", o.k_max, "subset size cap (<= 4)");
  auto* conj = verify->add_subcommand("conjecture1", "two-sided vacancy inequality");
  common(conj);
  contact_opts(conj);
  conj->add_option("--n", o.n, "left block length");
  conj->add_option("--m", o.m, "right block length");
  conj->add_option("--mode", o.mode, "mc or exact");
  auto* duality = verify->add_subcommand("duality", "exhaustive check of the pinned duality convention");
  spec_opt(duality);
  common(duality);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*enumerate) return run_enumerate(o);
    if (*dual) return run_dual(o);
    if (*mcmc) return run_sample_mcmc(o);
    if (*contact) return run_simulate_contact(o);
    if (*th3) return run_theorem3(o);
    if (*th4) return run_theorem4(o);
    if (*conj) return run_conjecture1(o);
    if (*duality) return run_duality(o);
  } catch (const Error& e) {
    std::cerr << "error [" << kind_name(e.kind()) << "]: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error [input]: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
