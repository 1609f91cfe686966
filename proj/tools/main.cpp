#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "greedyorder/comm_time.hpp"
#include "greedyorder/dfs_ordering.hpp"
#include "greedyorder/errors.hpp"
#include "greedyorder/experiments.hpp"
#include "greedyorder/graph.hpp"
#include "greedyorder/io.hpp"
#include "greedyorder/submodular.hpp"

using namespace greedyorder;

namespace {

Graph build_graph(const std::string& kind, int n, double p, std::uint64_t seed,
                  bool connected) {
  if (kind == "line") return gen_line(n);
  if (kind == "star") return gen_star(n);
  if (kind == "complete") return gen_complete(n);
  if (kind == "dcycle") return gen_directed_cycle(n);
  if (kind == "dn") return gen_dn(n);
  if (kind == "er")
    return connected ? gen_connected_erdos_renyi(n, p, seed)
                     : gen_erdos_renyi(n, p, seed);
  throw std::invalid_argument("unknown graph kind: " + kind);
}

std::vector<ExpMethod> parse_methods(const std::string& csv) {
  std::vector<ExpMethod> out;
  std::istringstream in(csv);
  std::string token;
  while (std::getline(in, token, ','))
    if (!token.empty()) out.push_back(exp_method_from_string(token));
  return out;
}

long joint_profile_count(const SubmodularProblem& p) {
  long profiles = 1;
  for (const auto& list : p.agent_actions) {
    profiles *= static_cast<long>(list.size());
    if (profiles > kMaxJointProfiles) return -1;
  }
  return profiles;
}

struct GenArgs {
  std::string kind;
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  bool connected = false;
  std::string out;
};

int run_gen(const GenArgs& a) {
  Graph g = build_graph(a.kind, a.n, a.p, a.seed, a.connected);
  if (a.out.empty()) {
    io::write_graph(std::cout, g);
    std::cerr << "n=" << g.vertex_count() << " edges=" << g.edge_count()
              << '\n';
  } else {
    io::save_graph(a.out, g);
    std::cout << "n=" << g.vertex_count() << " edges=" << g.edge_count()
              << '\n';
  }
  return 0;
}

struct OrderArgs {
  std::string graph;
  std::string method;
  int seed_vertex = 0;
  std::uint64_t rng = 0;
  std::string variant = "standard";
  std::string out;
};

int run_order(const OrderArgs& a) {
  Graph g = io::load_graph(a.graph);
  int n = g.vertex_count();
  std::optional<Ordering> pi;
  std::optional<int> alg1_t;
  if (a.method == "best") {
    pi = best_ordering_exact(g).ordering;
  } else if (a.method == "worst") {
    pi = worst_ordering_exact(g).ordering;
  } else if (a.method == "walk") {
    pi = best_ordering_spanning_walk(g).ordering;
  } else if (a.method == "random") {
    pi = random_ordering(n, a.rng);
  } else if (a.method == "line-worst") {
    pi = worst_line_ordering(n);
  } else if (a.method == "alg1") {
    RunTrace trace = run_algorithm1(g, a.seed_vertex, nullptr,
                                    variant_from_string(a.variant));
    pi = trace.ordering;
    alg1_t = trace.t;
  } else {
    throw std::invalid_argument("unknown ordering method: " + a.method);
  }
  std::cout << "total " << comm_time(g, *pi).total << '\n';
  if (alg1_t) std::cout << "t " << *alg1_t << '\n';
  if (!a.out.empty()) io::save_ordering(a.out, *pi);
  return 0;
}

int run_time(const std::string& graph_path, const std::string& ordering_path) {
  Graph g = io::load_graph(graph_path);
  Ordering pi = io::load_ordering(ordering_path);
  std::cout << io::breakdown_csv(comm_time(g, pi)) << '\n';
  return 0;
}

struct GreedyArgs {
  std::string graph;
  std::string problem;
  std::string ordering_file;
  std::string method = "identity";
  int seed_vertex = 0;
  std::uint64_t rng = 0;
  std::string variant = "standard";
  std::string out;
};

int run_greedy_cmd(const GreedyArgs& a) {
  Graph g = io::load_graph(a.graph);
  SubmodularProblem problem = io::load_problem_json(a.problem);
  if (problem.agent_count() != g.vertex_count())
    throw std::invalid_argument("problem agent count must match vertex count");

  int n = g.vertex_count();
  Ordering pi = Ordering::identity(n);
  if (!a.ordering_file.empty()) {
    pi = io::load_ordering(a.ordering_file);
  } else if (a.method == "best") {
    pi = best_ordering_exact(g).ordering;
  } else if (a.method == "random") {
    pi = random_ordering(n, a.rng);
  } else if (a.method == "alg1") {
    pi = run_algorithm1(g, a.seed_vertex, &problem,
                        variant_from_string(a.variant))
             .ordering;
  } else if (a.method != "identity") {
    throw std::invalid_argument("unknown ordering source: " + a.method);
  }

  GreedyResult greedy = greedy_execute(problem, pi);
  std::cout << "greedy " << greedy.value << '\n';

  nlohmann::json report;
  report["greedy"] = greedy.value;
  bool degenerate = false;
  if (joint_profile_count(problem) > 0) {
    GreedyResult opt = brute_force_opt(problem);
    degenerate = opt.value <= kValueEps;
    double ratio = degenerate ? 1.0 : greedy.value / opt.value;
    std::cout << "optimum " << opt.value << '\n';
    std::cout << "ratio " << ratio << '\n';
    report["optimum"] = opt.value;
    report["ratio"] = ratio;
    report["degenerate_ratio"] = degenerate;
  }
  if (!a.out.empty()) {
    std::ofstream out(a.out);
    if (!out) throw std::runtime_error("cannot open for writing: " + a.out);
    out << report.dump(2) << '\n';
  }
  return 0;
}

struct ExperimentArgs {
  int n = 6;
  double p = 0.3;
  int samples = 200;
  std::string methods = "random,best,alg1";
  std::uint64_t rng = 0;
  std::string variant = "order-n";
  std::string out;
};

int run_experiment_cmd(const ExperimentArgs& a) {
  ExperimentConfig cfg;
  cfg.n = a.n;
  cfg.p = a.p;
  cfg.samples = a.samples;
  cfg.orderings = parse_methods(a.methods);
  cfg.rng_seed = a.rng;
  cfg.algorithm1_variant = variant_from_string(a.variant);
  Distribution dist = run_er_experiment(cfg);

  if (a.out.empty()) {
    io::write_experiment_csv(std::cout, dist);
  } else {
    std::ofstream csv(a.out + ".csv");
    if (!csv) throw std::runtime_error("cannot open for writing: " + a.out + ".csv");
    io::write_experiment_csv(csv, dist);
    std::ofstream json_out(a.out + ".json");
    if (!json_out)
      throw std::runtime_error("cannot open for writing: " + a.out + ".json");
    io::write_experiment_json(json_out, dist);
    for (const MethodDistribution& pm : dist.per_method)
      std::cout << to_string(pm.method) << ": min=" << pm.stats.min
                << " max=" << pm.stats.max << " mean=" << pm.stats.mean
                << " median=" << pm.stats.median << '\n';
  }
  return 0;
}

struct VerifyArgs {
  std::string what;
  int n = 0;
  int samples = 200;
  int n_min = 5;
  int n_max = 20;
  std::uint64_t rng = 0;
};

int run_verify(const VerifyArgs& a) {
  if (a.what == "theorem1") {
    if (a.n == 0) throw std::invalid_argument("--n is required for theorem1");
    Theorem1Report r = verify_theorem1(a.n);
    std::cout << '(' << r.max_tmin << ", " << r.max_tmax << ") "
              << (r.ok ? "OK" : "FAIL") << '\n';
    return r.ok ? 0 : 1;
  }
  if (a.what == "prop2") {
    if (a.n == 0) throw std::invalid_argument("--n is required for prop2");
    Prop2Report r = verify_prop2(a.n);
    std::cout << '(' << r.dn_stated_time << ", " << r.cycle_worst_time << ") "
              << (r.ok ? "OK" : "FAIL") << '\n';
    return r.ok ? 0 : 1;
  }
  if (a.what == "prop1") {
    Prop1Report r = verify_prop1(a.samples, a.n_min, a.n_max, a.rng);
    std::cout << "t <= 2n-2 " << (r.ok ? "OK" : "FAIL") << " (graphs="
              << r.graphs_sampled << " runs=" << r.runs
              << " violations=" << r.violations << ")\n";
    return r.ok ? 0 : 1;
  }
  throw std::invalid_argument("unknown verifier: " + a.what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"greedy execution orderings on communication graphs"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "write a graph in edge-list form");
  gen->add_option("kind", gen_args.kind, "line|star|complete|dcycle|dn|er")
      ->required();
  gen->add_option("n", gen_args.n, "vertex count")->required();
  gen->add_option("--p", gen_args.p, "edge probability (er only)");
  gen->add_option("--seed", gen_args.seed, "rng seed (er only)");
  gen->add_flag("--connected", gen_args.connected,
                "resample er until connected");
  gen->add_option("--out", gen_args.out, "output file (default stdout)");

  OrderArgs order_args;
  auto* order = app.add_subcommand("order", "compute an ordering of a graph");
  order->add_option("graph", order_args.graph, "edge-list file")->required();
  order
      ->add_option("--method", order_args.method,
                   "best|worst|walk|alg1|random|line-worst")
      ->required();
  order->add_option("--seed-vertex", order_args.seed_vertex,
                    "start vertex for alg1");
  order->add_option("--rng", order_args.rng, "seed for --method random");
  order->add_option("--variant", order_args.variant, "standard|order-n");
  order->add_option("--out", order_args.out, "ordering output file");

  std::string time_graph, time_ordering;
  auto* time_cmd = app.add_subcommand("time", "evaluate an ordering's cost");
  time_cmd->add_option("graph", time_graph, "edge-list file")->required();
  time_cmd->add_option("ordering", time_ordering, "ordering file")->required();

  GreedyArgs greedy_args;
  auto* greedy =
      app.add_subcommand("run-greedy", "execute the ordered greedy");
  greedy->add_option("graph", greedy_args.graph, "edge-list file")->required();
  greedy->add_option("problem", greedy_args.problem, "problem JSON file")
      ->required();
  greedy->add_option("--ordering", greedy_args.ordering_file,
                     "ordering file (overrides --method)");
  greedy->add_option("--method", greedy_args.method,
                     "identity|best|alg1|random");
  greedy->add_option("--seed-vertex", greedy_args.seed_vertex,
                     "start vertex for alg1");
  greedy->add_option("--rng", greedy_args.rng, "seed for --method random");
  greedy->add_option("--variant", greedy_args.variant, "standard|order-n");
  greedy->add_option("--out", greedy_args.out, "JSON report file");

  ExperimentArgs exp_args;
  auto* experiment =
      app.add_subcommand("experiment", "run the random-graph sweep");
  experiment->add_option("--n", exp_args.n, "vertex count");
  experiment->add_option("--p", exp_args.p, "edge probability");
  experiment->add_option("--samples", exp_args.samples, "graph count");
  experiment->add_option("--methods", exp_args.methods,
                         "comma-separated subset of random,best,alg1");
  experiment->add_option("--rng", exp_args.rng, "master seed");
  experiment->add_option("--variant", exp_args.variant, "standard|order-n");
  experiment->add_option("--out", exp_args.out,
                         "output prefix for .csv and .json");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check the proved bounds");
  verify->add_option("what", verify_args.what, "theorem1|prop2|prop1")
      ->required();
  verify->add_option("--n", verify_args.n, "graph size for theorem1/prop2");
  verify->add_option("--samples", verify_args.samples, "graphs for prop1");
  verify->add_option("--n-min", verify_args.n_min, "smallest n for prop1");
  verify->add_option("--n-max", verify_args.n_max, "largest n for prop1");
  verify->add_option("--rng", verify_args.rng, "seed for prop1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (order->parsed()) return run_order(order_args);
    if (time_cmd->parsed()) return run_time(time_graph, time_ordering);
    if (greedy->parsed()) return run_greedy_cmd(greedy_args);
    if (experiment->parsed()) return run_experiment_cmd(exp_args);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
