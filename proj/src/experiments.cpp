#include "greedyorder/experiments.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "greedyorder/errors.hpp"
#include "greedyorder/rng.hpp"

namespace greedyorder {

std::string to_string(ExpMethod method) {
  switch (method) {
    case ExpMethod::random_order: return "random";
    case ExpMethod::best_exact: return "best";
    case ExpMethod::algorithm1: return "alg1";
  }
  throw std::invalid_argument("unknown experiment method");
}

ExpMethod exp_method_from_string(const std::string& token) {
  if (token == "random") return ExpMethod::random_order;
  if (token == "best") return ExpMethod::best_exact;
  if (token == "alg1") return ExpMethod::algorithm1;
  throw std::invalid_argument("unknown method token: " + token);
}

void ExperimentConfig::validate() const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("p must be in [0, 1]");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (orderings.empty())
    throw std::invalid_argument("at least one ordering method is required");
  for (ExpMethod m : orderings)
    if (m == ExpMethod::best_exact && n > kMaxExactSearchVertices)
      throw BudgetError("best-exact is capped at 9 vertices");
}

MethodStats stats_of(const std::vector<int>& times) {
  if (times.empty()) throw std::invalid_argument("no times to summarize");
  std::vector<int> sorted = times;
  std::sort(sorted.begin(), sorted.end());
  MethodStats s;
  s.min = sorted.front();
  s.max = sorted.back();
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) /
           static_cast<double>(sorted.size());
  std::size_t half = sorted.size() / 2;
  s.median = sorted.size() % 2 == 1
                 ? sorted[half]
                 : (sorted[half - 1] + sorted[half]) / 2.0;
  return s;
}

Distribution run_er_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<ExpMethod> canonical;
  for (ExpMethod m : {ExpMethod::random_order, ExpMethod::best_exact,
                      ExpMethod::algorithm1})
    if (std::find(cfg.orderings.begin(), cfg.orderings.end(), m) !=
        cfg.orderings.end())
      canonical.push_back(m);

  Distribution out;
  out.config = cfg;
  for (ExpMethod m : canonical) out.per_method.push_back({m, {}, {}});

  bool want_random = std::find(canonical.begin(), canonical.end(),
                               ExpMethod::random_order) != canonical.end();
  bool want_alg1 = std::find(canonical.begin(), canonical.end(),
                             ExpMethod::algorithm1) != canonical.end();

  std::mt19937_64 master(cfg.rng_seed);
  for (int sample = 0; sample < cfg.samples; ++sample) {
    std::int64_t rejections = 0;
    Graph g = gen_connected_erdos_renyi(cfg.n, cfg.p, master,
                                        kDefaultSamplingAttempts, &rejections);
    out.rejected_samples += rejections;

    std::optional<Ordering> random_pi;
    if (want_random) random_pi = random_ordering(cfg.n, master);
    int seed_vertex = -1;
    if (want_alg1)
      seed_vertex = static_cast<int>(uniform_index(master, cfg.n));

    for (std::size_t mi = 0; mi < canonical.size(); ++mi) {
      int time = 0, sv = -1;
      switch (canonical[mi]) {
        case ExpMethod::random_order:
          time = comm_time(g, *random_pi).total;
          break;
        case ExpMethod::best_exact:
          time = best_ordering_exact(g).time.total;
          break;
        case ExpMethod::algorithm1:
          time = run_algorithm1(g, seed_vertex, nullptr,
                                cfg.algorithm1_variant)
                     .t;
          sv = seed_vertex;
          break;
      }
      out.rows.push_back({sample, g.edge_count(), canonical[mi], time, sv});
      out.per_method[mi].times.push_back(time);
    }
  }
  for (MethodDistribution& pm : out.per_method) pm.stats = stats_of(pm.times);
  return out;
}

Theorem1Report verify_theorem1(int n) {
  if (n < 3 || n > kMaxEnumUndirected)
    throw BudgetError("undirected enumeration runs for n in 3..6");
  Theorem1Report r;
  r.n = n;
  enumerate_connected_graphs(n, false, [&](const Graph& g) {
    ++r.graphs_enumerated;
    int tmin = best_ordering_exact(g).time.total;
    int tmax = worst_ordering_exact(g).time.total;
    if (tmin > r.max_tmin) {
      r.max_tmin = tmin;
      r.tmin_witness = g;
    }
    if (tmax > r.max_tmax) {
      r.max_tmax = tmax;
      r.tmax_witness = g;
    }
  });
  r.ok = r.max_tmin == 2 * n - 4 && r.max_tmax == n * n / 2 - 1;
  return r;
}

Prop2Report verify_prop2(int n) {
  if (n < 3 || n > 10)
    throw BudgetError("directed verification runs for n in 3..10");
  Prop2Report r;
  r.n = n;
  int want_min = (n / 2) * ((n + 1) / 2);
  int want_max = (n - 1) * (n - 1);

  if (n <= kMaxEnumDirected) {
    r.enumerated = true;
    enumerate_connected_graphs(n, true, [&](const Graph& g) {
      ++r.digraphs_enumerated;
      r.max_tmin = std::max(r.max_tmin, best_ordering_exact(g).time.total);
      r.max_tmax = std::max(r.max_tmax, worst_ordering_exact(g).time.total);
    });
  }

  r.cycle_worst_time =
      comm_time(gen_directed_cycle(n), worst_directed_cycle_ordering(n)).total;
  r.dn_stated_time = comm_time(gen_dn(n), dn_best_ordering(n)).total;
  if (n <= kMaxExactSearchVertices)
    r.dn_exact_best = best_ordering_exact(gen_dn(n)).time.total;

  r.ok = r.cycle_worst_time == want_max && r.dn_stated_time == want_min &&
         (!r.enumerated ||
          (r.max_tmin == want_min && r.max_tmax == want_max)) &&
         (!r.dn_exact_best || *r.dn_exact_best == want_min);
  return r;
}

Prop1Report verify_prop1(int sample_count, int n_min, int n_max,
                         std::uint64_t rng_seed) {
  if (sample_count < 0)
    throw std::invalid_argument("sample count must be nonnegative");
  if (n_min < 2 || n_max < n_min)
    throw std::invalid_argument("need 2 <= n_min <= n_max");

  Prop1Report r;
  r.stars_exact = true;
  for (int n = r.star_n_min; n <= r.star_n_max; ++n) {
    Graph star = gen_star(n);
    for (int seed = 0; seed < n; ++seed) {
      ++r.runs;
      if (run_algorithm1(star, seed).t != 2 * n - 2) r.stars_exact = false;
    }
  }

  std::mt19937_64 rng(rng_seed);
  for (int sample = 0; sample < sample_count; ++sample) {
    int n = n_min + static_cast<int>(
                        uniform_index(rng, static_cast<std::uint64_t>(
                                               n_max - n_min + 1)));
    double p = 0.2 + 0.4 * uniform_real01(rng);
    Graph g = gen_connected_erdos_renyi(n, p, rng);
    ++r.graphs_sampled;

    std::vector<int> seeds;
    if (n <= 20) {
      seeds.resize(n);
      std::iota(seeds.begin(), seeds.end(), 0);
    } else {
      for (int k = 0; k < 20; ++k)
        seeds.push_back(static_cast<int>(uniform_index(rng, n)));
    }
    for (int seed : seeds) {
      int t = run_algorithm1(g, seed).t;
      ++r.runs;
      if (t > 2 * n - 2) ++r.violations;
      r.max_slack = std::max(r.max_slack, (2 * n - 2) - t);
    }
  }
  r.ok = r.stars_exact && r.violations == 0;
  return r;
}

}  // namespace greedyorder
