#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "greedyorder/comm_time.hpp"
#include "greedyorder/graph.hpp"
#include "oracles.hpp"

using namespace greedyorder;

namespace {

// The adversarial line labeling from the worked 6-vertex example: label i
// sits at line position q_i for q = (3, 6, 1, 5, 2, 4), so the token hops
// 3 + 5 + 4 + 3 + 2 = 17 times.
Ordering bounce_line6_labeling() {
  return Ordering::from_vertex_sequence({2, 5, 0, 4, 1, 3});
}

Graph random_connected(std::mt19937_64& rng, int n, double p) {
  return gen_connected_erdos_renyi(n, p, rng);
}

}  // namespace

TEST_CASE("Ordering validates bijectivity") {
  CHECK_THROWS_AS(Ordering({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Ordering({0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Ordering({2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(Ordering({}), std::invalid_argument);

  Ordering pi({2, 3, 1});
  CHECK(pi.size() == 3);
  CHECK(pi.label_of(0) == 2);
  CHECK(pi.vertex_of(1) == 2);
  CHECK(pi.vertex_of(2) == 0);
  CHECK_THROWS_AS(pi.label_of(3), std::invalid_argument);
  CHECK_THROWS_AS(pi.vertex_of(0), std::invalid_argument);
  CHECK_THROWS_AS(pi.vertex_of(4), std::invalid_argument);

  CHECK(Ordering::identity(4) == Ordering({1, 2, 3, 4}));
  CHECK(Ordering::from_vertex_sequence({2, 0, 1}) == Ordering({2, 3, 1}));

  SUBCASE("label_of and vertex_of invert each other") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      Ordering pi2 = random_ordering(8, rng);
      for (int v = 0; v < 8; ++v) CHECK(pi2.vertex_of(pi2.label_of(v)) == v);
    }
  }
}

TEST_CASE("comm_time on the line-graph examples") {
  Graph line6 = gen_line(6);
  SUBCASE("best labeling walks straight down the line") {
    TimeBreakdown t = comm_time(line6, Ordering::identity(6));
    CHECK(t.total == 5);
    CHECK(t.per_step == std::vector<int>{1, 1, 1, 1, 1});
  }
  SUBCASE("adversarial labeling bounces across the middle") {
    TimeBreakdown t = comm_time(line6, bounce_line6_labeling());
    CHECK(t.per_step == std::vector<int>{3, 5, 4, 3, 2});
    CHECK(t.total == 17);
  }
}

TEST_CASE("comm_time on complete graphs is n-1 for every labeling") {
  std::mt19937_64 rng(7);
  for (int n : {2, 4, 6, 9}) {
    Graph k = gen_complete(n);
    for (int trial = 0; trial < 10; ++trial)
      CHECK(comm_time(k, random_ordering(n, rng)).total == n - 1);
  }
}

TEST_CASE("comm_time validation and edge cases") {
  CHECK_THROWS_AS(comm_time(Graph(3, false, {{0, 1}}), Ordering::identity(3)),
                  std::domain_error);
  CHECK_THROWS_AS(comm_time(gen_line(5), Ordering::identity(4)),
                  std::invalid_argument);
  // weakly but not strongly connected counts as disconnected
  CHECK_THROWS_AS(
      comm_time(Graph(3, true, {{0, 1}, {1, 2}}), Ordering::identity(3)),
      std::domain_error);

  TimeBreakdown t = comm_time(Graph(1, false, {}), Ordering::identity(1));
  CHECK(t.total == 0);
  CHECK(t.per_step.empty());

  SUBCASE("per-step entries are at least 1 and sum to total") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
      Graph g = random_connected(rng, 7, 0.4);
      TimeBreakdown tb = comm_time(g, random_ordering(7, rng));
      int sum = std::accumulate(tb.per_step.begin(), tb.per_step.end(), 0);
      CHECK(tb.total == sum);
      for (int step : tb.per_step) CHECK(step >= 1);
    }
  }
}

TEST_CASE("best_ordering_exact") {
  CHECK(best_ordering_exact(gen_star(7)).time.total == 10);
  CHECK(best_ordering_exact(gen_line(6)).time.total == 5);
  CHECK(best_ordering_exact(gen_dn(8)).time.total == 16);
  CHECK(best_ordering_exact(gen_star(7)).method == OrderingMethod::exact_min);
  CHECK_THROWS_AS(best_ordering_exact(gen_line(10)), BudgetError);
  CHECK_THROWS_AS(best_ordering_exact(Graph(3, false, {{0, 1}})),
                  std::domain_error);
}

TEST_CASE("worst_ordering_exact") {
  CHECK(worst_ordering_exact(gen_line(6)).time.total == 17);
  CHECK(worst_ordering_exact(gen_complete(4)).time.total == 3);
  CHECK(worst_ordering_exact(gen_directed_cycle(6)).time.total == 25);
  CHECK(worst_ordering_exact(gen_line(6)).method == OrderingMethod::exact_max);
  CHECK_THROWS_AS(worst_ordering_exact(gen_line(10)), BudgetError);
}

TEST_CASE("exact searches match brute force on random graphs") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);  // 4..7
    Graph g = random_connected(rng, n, 0.45);
    auto extremes = oracle::brute_force_extremes(g);
    OrderingReport best = best_ordering_exact(g);
    OrderingReport worst = worst_ordering_exact(g);
    CHECK(best.time.total == extremes.min_total);
    CHECK(worst.time.total == extremes.max_total);
    // the report's breakdown is the real evaluation of its ordering
    CHECK(comm_time(g, best.ordering).total == best.time.total);
    CHECK(comm_time(g, worst.ordering).total == worst.time.total);
  }
}

TEST_CASE("exact searches break ties by lexicographic labels") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 4 + static_cast<int>(rng() % 3);  // 4..6
    Graph g = random_connected(rng, n, 0.5);
    CHECK(best_ordering_exact(g).ordering.labels() ==
          oracle::lex_smallest_extreme_labels(g, /*maximize=*/false));
    CHECK(worst_ordering_exact(g).ordering.labels() ==
          oracle::lex_smallest_extreme_labels(g, /*maximize=*/true));
  }
  // highly symmetric graphs exercise the tie handling hardest
  CHECK(best_ordering_exact(gen_complete(5)).ordering ==
        Ordering::identity(5));
  CHECK(worst_ordering_exact(gen_complete(5)).ordering ==
        Ordering::identity(5));
  CHECK(best_ordering_exact(gen_star(6)).ordering.labels() ==
        oracle::lex_smallest_extreme_labels(gen_star(6), false));
}

TEST_CASE("minimum_spanning_walk") {
  SUBCASE("line and star hop counts") {
    CHECK(minimum_spanning_walk(gen_line(6)).hop_count() == 5);
    CHECK(minimum_spanning_walk(gen_star(7)).hop_count() == 10);
  }
  SUBCASE("the walk is a real spanning walk of its graph") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
      Graph g = random_connected(rng, 8, 0.35);
      Walk w = minimum_spanning_walk(g);
      CHECK(is_walk_of(g, w.vertices));
      std::vector<char> seen(8, 0);
      for (int v : w.vertices) seen[v] = 1;
      CHECK(std::count(seen.begin(), seen.end(), 1) == 8);
    }
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(minimum_spanning_walk(gen_directed_cycle(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(minimum_spanning_walk(gen_line(13)), BudgetError);
    CHECK_THROWS_AS(minimum_spanning_walk(Graph(2, false, {})),
                    std::domain_error);
    CHECK(minimum_spanning_walk(Graph(1, false, {})).hop_count() == 0);
  }
}

TEST_CASE("best_ordering_spanning_walk equals the exact minimum") {
  SUBCASE("named graphs") {
    CHECK(best_ordering_spanning_walk(gen_line(6)).time.total == 5);
    CHECK(best_ordering_spanning_walk(gen_star(7)).time.total == 10);
    CHECK(best_ordering_spanning_walk(gen_star(7)).method ==
          OrderingMethod::spanning_walk);
  }
  SUBCASE("random trees up to 9 vertices") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 25; ++trial) {
      int n = 2 + static_cast<int>(rng() % 8);  // 2..9
      Graph tree = gen_random_tree(n, rng);
      CHECK(best_ordering_spanning_walk(tree).time.total ==
            best_ordering_exact(tree).time.total);
    }
  }
  SUBCASE("every connected undirected graph on up to 5 vertices") {
    for (int n = 2; n <= 5; ++n) {
      enumerate_connected_graphs(n, false, [&](const Graph& g) {
        int exact = best_ordering_exact(g).time.total;
        OrderingReport walk = best_ordering_spanning_walk(g);
        CHECK(walk.time.total == exact);
        CHECK(minimum_spanning_walk(g).hop_count() == exact);
      });
    }
  }
}

TEST_CASE("tree_tmin_closed_form") {
  for (int n = 3; n <= 12; ++n) CHECK(tree_tmin_closed_form(gen_star(n)) == 2 * n - 4);
  for (int n = 2; n <= 12; ++n) CHECK(tree_tmin_closed_form(gen_line(n)) == n - 1);

  CHECK_THROWS_AS(tree_tmin_closed_form(gen_complete(4)), std::invalid_argument);
  CHECK_THROWS_AS(tree_tmin_closed_form(Graph(4, false, {{0, 1}, {2, 3}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(tree_tmin_closed_form(gen_directed_cycle(4)),
                  std::invalid_argument);

  SUBCASE("matches permutation brute force on random trees") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 30; ++trial) {
      int n = 2 + static_cast<int>(rng() % 8);  // 2..9
      Graph tree = gen_random_tree(n, rng);
      CHECK(tree_tmin_closed_form(tree) == best_ordering_exact(tree).time.total);
    }
  }
}

TEST_CASE("worst_line_ordering") {
  CHECK(comm_time(gen_line(6), worst_line_ordering(6)).total == 17);
  CHECK(comm_time(gen_line(4), worst_line_ordering(4)).total == 7);
  CHECK(comm_time(gen_line(2), worst_line_ordering(2)).total == 1);
  CHECK_THROWS_AS(worst_line_ordering(1), std::invalid_argument);

  SUBCASE("attains the brute-force maximum for n up to 9") {
    for (int n = 2; n <= 9; ++n)
      CHECK(comm_time(gen_line(n), worst_line_ordering(n)).total ==
            worst_ordering_exact(gen_line(n)).time.total);
  }
  SUBCASE("closed form floor(n^2/2) - 1 for larger n") {
    for (int n = 2; n <= 30; ++n)
      CHECK(comm_time(gen_line(n), worst_line_ordering(n)).total ==
            n * n / 2 - 1);
  }
}

TEST_CASE("worst_directed_cycle_ordering") {
  CHECK(comm_time(gen_directed_cycle(6), worst_directed_cycle_ordering(6))
            .total == 25);
  CHECK(comm_time(gen_directed_cycle(3), worst_directed_cycle_ordering(3))
            .total == 4);
  CHECK_THROWS_AS(worst_directed_cycle_ordering(2), std::invalid_argument);

  SUBCASE("matches the exact maximum on C_5") {
    CHECK(comm_time(gen_directed_cycle(5), worst_directed_cycle_ordering(5))
              .total == worst_ordering_exact(gen_directed_cycle(5)).time.total);
    CHECK(worst_ordering_exact(gen_directed_cycle(5)).time.total == 16);
  }
  SUBCASE("(n-1)^2 for a range of n") {
    for (int n = 3; n <= 12; ++n)
      CHECK(comm_time(gen_directed_cycle(n), worst_directed_cycle_ordering(n))
                .total == (n - 1) * (n - 1));
  }
}

TEST_CASE("dn_best_ordering") {
  CHECK(comm_time(gen_dn(8), dn_best_ordering(8)).total == 16);
  CHECK(comm_time(gen_dn(3), dn_best_ordering(3)).total == 2);
  CHECK_THROWS_AS(dn_best_ordering(2), std::invalid_argument);

  SUBCASE("matches the exact minimum on D_6") {
    CHECK(comm_time(gen_dn(6), dn_best_ordering(6)).total == 9);
    CHECK(best_ordering_exact(gen_dn(6)).time.total == 9);
  }
  SUBCASE("floor(n/2)*ceil(n/2) for a range of n") {
    for (int n = 3; n <= 12; ++n)
      CHECK(comm_time(gen_dn(n), dn_best_ordering(n)).total ==
            (n / 2) * ((n + 1) / 2));
  }
}

TEST_CASE("random_ordering") {
  CHECK(random_ordering(1, 99u) == Ordering::identity(1));
  CHECK(random_ordering(8, 5u) == random_ordering(8, 5u));

  SUBCASE("positions are uniform to within 2 percent over 10^4 draws") {
    const int n = 6, samples = 10000;
    std::mt19937_64 rng(123);
    std::vector<std::vector<int>> counts(n, std::vector<int>(n, 0));
    for (int s = 0; s < samples; ++s) {
      Ordering pi = random_ordering(n, rng);
      for (int v = 0; v < n; ++v) ++counts[v][pi.label_of(v) - 1];
    }
    for (int v = 0; v < n; ++v)
      for (int label = 0; label < n; ++label) {
        double freq = static_cast<double>(counts[v][label]) / samples;
        CHECK(freq == doctest::Approx(1.0 / n).epsilon(0.12));  // 1/6 +- 0.02
      }
  }
}

TEST_CASE("adding an edge never increases communication time") {
  std::mt19937_64 rng(77);
  int tested = 0;
  while (tested < 200) {
    Graph g = random_connected(rng, 8, 0.3);
    Ordering pi = random_ordering(8, rng);
    int before = comm_time(g, pi).total;
    // pick a random absent pair
    int u = static_cast<int>(rng() % 8), v = static_cast<int>(rng() % 8);
    if (u == v || g.has_edge(u, v)) continue;
    CHECK(comm_time(g.with_edge(u, v), pi).total <= before);
    ++tested;
  }
}

TEST_CASE("communication times stay inside the theory envelope") {
  std::mt19937_64 rng(88);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);  // 3..6
    Graph g = random_connected(rng, n, 0.5);
    int best = best_ordering_exact(g).time.total;
    int worst = worst_ordering_exact(g).time.total;
    CHECK(best >= n - 1);
    CHECK(best <= 2 * n - 4 + (n == 2 ? 1 : 0));
    CHECK(worst <= n * n / 2 - 1);
    CHECK(worst <= (n - 1) * (n - 1));
    int random_total = comm_time(g, random_ordering(n, rng)).total;
    CHECK(random_total >= best);
    CHECK(random_total <= worst);
  }
}
