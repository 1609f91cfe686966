#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "greedyorder/errors.hpp"
#include "greedyorder/experiments.hpp"
#include "oracles.hpp"

using namespace greedyorder;

TEST_CASE("method tokens round-trip") {
  for (ExpMethod m : {ExpMethod::random_order, ExpMethod::best_exact,
                      ExpMethod::algorithm1})
    CHECK(exp_method_from_string(to_string(m)) == m);
  CHECK(to_string(ExpMethod::random_order) == "random");
  CHECK(to_string(ExpMethod::best_exact) == "best");
  CHECK(to_string(ExpMethod::algorithm1) == "alg1");
  CHECK_THROWS_AS(exp_method_from_string("fastest"), std::invalid_argument);
}

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  CHECK_NOTHROW(cfg.validate());

  ExperimentConfig bad = cfg;
  bad.samples = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = cfg;
  bad.orderings.clear();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = cfg;
  bad.p = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = cfg;
  bad.n = 10;  // best-exact beyond the search budget
  CHECK_THROWS_AS(bad.validate(), BudgetError);
  bad.orderings = {ExpMethod::random_order, ExpMethod::algorithm1};
  CHECK_NOTHROW(bad.validate());
}

TEST_CASE("stats_of") {
  MethodStats s = stats_of({5});
  CHECK(s.min == 5);
  CHECK(s.max == 5);
  CHECK(s.mean == doctest::Approx(5.0));
  CHECK(s.median == doctest::Approx(5.0));

  s = stats_of({4, 1, 3, 2});
  CHECK(s.min == 1);
  CHECK(s.max == 4);
  CHECK(s.mean == doctest::Approx(2.5));
  CHECK(s.median == doctest::Approx(2.5));

  s = stats_of({3, 1, 9});
  CHECK(s.median == doctest::Approx(3.0));
  CHECK(s.mean == doctest::Approx(13.0 / 3));

  CHECK_THROWS_AS(stats_of({}), std::invalid_argument);
}

TEST_CASE("complete graphs report n-1 for every method") {
  ExperimentConfig cfg;
  cfg.n = 6;
  cfg.p = 1.0;
  cfg.samples = 10;
  cfg.rng_seed = 3;
  Distribution d = run_er_experiment(cfg);
  CHECK(d.rows.size() == 30);
  CHECK(d.rejected_samples == 0);
  for (const ExperimentRow& row : d.rows) {
    CHECK(row.time == 5);
    CHECK(row.graph_edges == 15);
  }
  for (const MethodDistribution& pm : d.per_method) {
    CHECK(pm.times.size() == 10);
    CHECK(pm.stats.min == 5);
    CHECK(pm.stats.max == 5);
  }
}

TEST_CASE("experiment runs are deterministic per seed") {
  ExperimentConfig cfg;
  cfg.n = 6;
  cfg.p = 0.3;
  cfg.samples = 12;
  cfg.rng_seed = 99;
  Distribution a = run_er_experiment(cfg);
  Distribution b = run_er_experiment(cfg);
  CHECK(a.rows == b.rows);
  CHECK(a.rejected_samples == b.rejected_samples);

  cfg.rng_seed = 100;
  Distribution c = run_er_experiment(cfg);
  CHECK(a.rows != c.rows);
}

TEST_CASE("sweep bookkeeping and per-sample inequalities") {
  ExperimentConfig cfg;
  cfg.n = 6;
  cfg.p = 0.3;
  cfg.samples = 25;
  cfg.rng_seed = 7;
  Distribution d = run_er_experiment(cfg);

  REQUIRE(d.rows.size() == 75);
  REQUIRE(d.per_method.size() == 3);
  CHECK(d.per_method[0].method == ExpMethod::random_order);
  CHECK(d.per_method[1].method == ExpMethod::best_exact);
  CHECK(d.per_method[2].method == ExpMethod::algorithm1);

  std::map<int, std::map<ExpMethod, int>> by_sample;
  std::map<int, int> edges_of;
  for (const ExperimentRow& row : d.rows) {
    CHECK(row.sample_index >= 0);
    CHECK(row.sample_index < 25);
    by_sample[row.sample_index][row.method] = row.time;
    if (edges_of.count(row.sample_index))
      CHECK(edges_of[row.sample_index] == row.graph_edges);
    edges_of[row.sample_index] = row.graph_edges;
    if (row.method == ExpMethod::algorithm1) {
      CHECK(row.seed_vertex >= 0);
      CHECK(row.seed_vertex < 6);
    } else {
      CHECK(row.seed_vertex == -1);
    }
    CHECK(row.time >= 5);        // n-1
    CHECK(row.time <= 17);       // floor(n^2/2)-1
  }
  for (auto& [sample, times] : by_sample) {
    REQUIRE(times.size() == 3);
    CHECK(times[ExpMethod::random_order] >= times[ExpMethod::best_exact]);
    CHECK(times[ExpMethod::algorithm1] >= times[ExpMethod::best_exact]);
    CHECK(times[ExpMethod::algorithm1] <= 2 * 6 - 2);
  }
  for (const MethodDistribution& pm : d.per_method) {
    REQUIRE(pm.times.size() == 25);
    MethodStats oracle = stats_of(pm.times);
    CHECK(pm.stats.min == oracle.min);
    CHECK(pm.stats.max == oracle.max);
    CHECK(pm.stats.mean == doctest::Approx(oracle.mean));
    CHECK(pm.stats.median == doctest::Approx(oracle.median));
  }
}

TEST_CASE("method subsets narrow the output") {
  ExperimentConfig cfg;
  cfg.n = 12;  // beyond the exact-search budget: fine without best-exact
  cfg.p = 0.35;
  cfg.samples = 8;
  cfg.orderings = {ExpMethod::algorithm1, ExpMethod::random_order};
  cfg.rng_seed = 21;
  Distribution d = run_er_experiment(cfg);
  REQUIRE(d.rows.size() == 16);
  REQUIRE(d.per_method.size() == 2);
  // canonical order regardless of how the request was spelled
  CHECK(d.per_method[0].method == ExpMethod::random_order);
  CHECK(d.per_method[1].method == ExpMethod::algorithm1);
}

TEST_CASE("verify_theorem1") {
  Theorem1Report r3 = verify_theorem1(3);
  CHECK(r3.max_tmin == 2);
  CHECK(r3.max_tmax == 3);
  CHECK(r3.graphs_enumerated == 4);
  CHECK(r3.ok);

  Theorem1Report r5 = verify_theorem1(5);
  CHECK(r5.max_tmin == 6);
  CHECK(r5.max_tmax == 11);
  CHECK(r5.graphs_enumerated == 728);
  CHECK(r5.ok);

  SUBCASE("witnesses re-evaluate to the maxima and look like star and line") {
    REQUIRE(r5.tmin_witness.has_value());
    REQUIRE(r5.tmax_witness.has_value());
    CHECK(best_ordering_exact(*r5.tmin_witness).time.total == 6);
    CHECK(worst_ordering_exact(*r5.tmax_witness).time.total == 11);

    auto degrees = [](const Graph& g) {
      std::vector<int> d;
      for (int v = 0; v < g.vertex_count(); ++v)
        d.push_back(static_cast<int>(g.neighbors(v).size()));
      std::sort(d.begin(), d.end());
      return d;
    };
    CHECK(degrees(*r5.tmin_witness) == std::vector<int>{1, 1, 1, 1, 4});
    CHECK(degrees(*r5.tmax_witness) == std::vector<int>{1, 1, 2, 2, 2});
  }
  SUBCASE("range limits") {
    CHECK_THROWS_AS(verify_theorem1(2), BudgetError);
    CHECK_THROWS_AS(verify_theorem1(7), BudgetError);
  }
}

TEST_CASE("verify_prop2") {
  Prop2Report r3 = verify_prop2(3);
  CHECK(r3.enumerated);
  CHECK(r3.max_tmin == 2);
  CHECK(r3.max_tmax == 4);
  CHECK(r3.cycle_worst_time == 4);
  CHECK(r3.dn_stated_time == 2);
  CHECK(r3.dn_exact_best == 2);
  CHECK(r3.ok);

  Prop2Report r4 = verify_prop2(4);
  CHECK(r4.enumerated);
  CHECK(r4.max_tmin == 4);
  CHECK(r4.max_tmax == 9);
  CHECK(r4.ok);

  Prop2Report r7 = verify_prop2(7);
  CHECK_FALSE(r7.enumerated);
  CHECK(r7.cycle_worst_time == 36);
  CHECK(r7.dn_stated_time == 12);
  CHECK(r7.dn_exact_best == 12);
  CHECK(r7.ok);

  Prop2Report r10 = verify_prop2(10);
  CHECK(r10.cycle_worst_time == 81);
  CHECK(r10.dn_stated_time == 25);
  CHECK_FALSE(r10.dn_exact_best.has_value());
  CHECK(r10.ok);

  CHECK_THROWS_AS(verify_prop2(2), BudgetError);
  CHECK_THROWS_AS(verify_prop2(11), BudgetError);
}

TEST_CASE("verify_prop1") {
  Prop1Report r = verify_prop1(30, 4, 10, 5u);
  CHECK(r.stars_exact);
  CHECK(r.graphs_sampled == 30);
  CHECK(r.violations == 0);
  CHECK(r.runs > 30);
  CHECK(r.ok);

  SUBCASE("deterministic") {
    Prop1Report s = verify_prop1(30, 4, 10, 5u);
    CHECK(s.runs == r.runs);
    CHECK(s.max_slack == r.max_slack);
  }
  SUBCASE("argument checks") {
    CHECK_THROWS_AS(verify_prop1(-1, 4, 10, 1u), std::invalid_argument);
    CHECK_THROWS_AS(verify_prop1(5, 1, 10, 1u), std::invalid_argument);
    CHECK_THROWS_AS(verify_prop1(5, 8, 4, 1u), std::invalid_argument);
  }
}
