#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "greedyorder/comm_time.hpp"
#include "greedyorder/dfs_ordering.hpp"
#include "greedyorder/graph.hpp"

namespace greedyorder {

enum class ExpMethod { random_order, best_exact, algorithm1 };

std::string to_string(ExpMethod method);
ExpMethod exp_method_from_string(const std::string& token);

/// Erdos-Renyi sweep settings. algorithm1 records the run's own counter t,
/// not the central re-evaluation of its ordering; the default variant stops
/// at label n, so on a complete graph all three methods report n-1.
struct ExperimentConfig {
  int n = 6;
  double p = 0.3;
  int samples = 200;
  std::vector<ExpMethod> orderings = {ExpMethod::random_order,
                                      ExpMethod::best_exact,
                                      ExpMethod::algorithm1};
  std::uint64_t rng_seed = 0;
  Algorithm1Variant algorithm1_variant = Algorithm1Variant::order_equals_n;

  void validate() const;
};

struct ExperimentRow {
  int sample_index = 0;
  int graph_edges = 0;
  ExpMethod method = ExpMethod::random_order;
  int time = 0;
  int seed_vertex = -1;  // -1 unless method == algorithm1

  friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

struct MethodStats {
  int min = 0;
  int max = 0;
  double mean = 0;
  double median = 0;
};

struct MethodDistribution {
  ExpMethod method = ExpMethod::random_order;
  std::vector<int> times;  // one per sample
  MethodStats stats;
};

struct Distribution {
  ExperimentConfig config;
  std::vector<MethodDistribution> per_method;  // canonical order random, best, alg1
  std::vector<ExperimentRow> rows;             // sample-major, same method order
  std::int64_t rejected_samples = 0;           // disconnected draws discarded
};

MethodStats stats_of(const std::vector<int>& times);

/// Samples connected G(n, p) graphs and measures each requested method on
/// every sample. Draw order per sample is pinned: the graph, then the random
/// ordering (if requested), then algorithm1's seed vertex (if requested), all
/// from one generator seeded with rng_seed.
Distribution run_er_experiment(const ExperimentConfig& cfg);

struct Theorem1Report {
  int n = 0;
  int max_tmin = 0;
  int max_tmax = 0;
  std::optional<Graph> tmin_witness;
  std::optional<Graph> tmax_witness;
  long graphs_enumerated = 0;
  bool ok = false;  // maxes equal 2n-4 and floor(n^2/2)-1
};

/// Exhausts every labeled connected undirected graph on n vertices, 3 <= n <= 6.
Theorem1Report verify_theorem1(int n);

struct Prop2Report {
  int n = 0;
  bool enumerated = false;  // digraph exhaustion ran (n <= 4)
  int max_tmin = 0;         // only when enumerated
  int max_tmax = 0;
  long digraphs_enumerated = 0;
  int cycle_worst_time = 0;  // T on gen_directed_cycle under the reverse labels
  int dn_stated_time = 0;    // T on gen_dn under the stated ordering
  std::optional<int> dn_exact_best;  // brute confirmation, n <= 9
  bool ok = false;
};

/// Checks the directed bounds: exhaustive enumeration for n in {3, 4}, the
/// C_n and D_n constructions for 3 <= n <= 10.
Prop2Report verify_prop2(int n);

struct Prop1Report {
  int star_n_min = 3;
  int star_n_max = 15;
  bool stars_exact = false;  // t == 2n-2 on every star and seed
  int graphs_sampled = 0;
  long runs = 0;
  int violations = 0;
  int max_slack = 0;  // largest observed (2n-2) - t over sampled graphs
  bool ok = false;
};

/// Stars first (every seed, n in 3..15), then sample_count connected ER
/// graphs with n drawn uniformly in [n_min, n_max]; every seed is tried up to
/// 20 per graph (all of them when n <= 20).
Prop1Report verify_prop1(int sample_count, int n_min, int n_max,
                         std::uint64_t rng_seed);

}  // namespace greedyorder
