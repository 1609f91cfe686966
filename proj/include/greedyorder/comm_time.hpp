#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "greedyorder/graph.hpp"

namespace greedyorder {

/// Bijection between vertices 0..n-1 and execution labels 1..n: the agent
/// labeled 1 acts first, label 2 second, and so on.
class Ordering {
 public:
  /// label_of_vertex[v] is v's label; must be a permutation of 1..n.
  explicit Ordering(std::vector<int> label_of_vertex);

  static Ordering identity(int n);
  /// Inverse view: vertex_of_label[i] is the vertex labeled i+1.
  static Ordering from_vertex_sequence(const std::vector<int>& vertex_of_label);

  int size() const { return static_cast<int>(label_of_.size()); }
  int label_of(int v) const;
  int vertex_of(int label) const;  // label in 1..n
  const std::vector<int>& labels() const { return label_of_; }

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.label_of_ == b.label_of_;
  }

 private:
  std::vector<int> label_of_;
  std::vector<int> vertex_of_;
};

/// Communication time split per step: per_step[i] is the shortest-path hop
/// count from the vertex labeled i+1 to the vertex labeled i+2. All lengths
/// here count hops (edges), never vertices.
struct TimeBreakdown {
  std::vector<int> per_step;
  int total = 0;
};

enum class OrderingMethod {
  exact_min,
  exact_max,
  spanning_walk,
  tree_closed_form,
  constructed_worst_line,
  random_draw,
};

std::string to_string(OrderingMethod method);

struct OrderingReport {
  Ordering ordering;
  TimeBreakdown time;
  OrderingMethod method;
};

/// Total communication time of the greedy execution under pi: the sum of
/// shortest-path hops between consecutively labeled vertices. Throws
/// std::domain_error on disconnected input and std::invalid_argument when
/// pi's size does not match the graph.
TimeBreakdown comm_time(const Graph& g, const Ordering& pi);

inline constexpr int kMaxExactSearchVertices = 9;
inline constexpr int kMaxWalkSearchVertices = 12;

/// Exact minimum over all n! orderings (branch-and-bound, n <= 9). Among
/// minimizers returns the lexicographically smallest labels() vector.
OrderingReport best_ordering_exact(const Graph& g);

/// Exact maximum, same budget and tie-break rule.
OrderingReport worst_ordering_exact(const Graph& g);

/// Fewest-hop walk visiting every vertex, by BFS over (vertex, visited-set)
/// states. Undirected connected graphs only, n <= 12.
Walk minimum_spanning_walk(const Graph& g);

/// Labels vertices in order of first appearance along a minimum spanning
/// walk; the resulting ordering attains the exact minimum communication time.
OrderingReport best_ordering_spanning_walk(const Graph& g);

/// Minimum communication time of a tree: 2(n-1) - diameter. Throws
/// std::invalid_argument if g is not an undirected tree.
int tree_tmin_closed_form(const Graph& g);

/// Adversarial labeling of the n-vertex line graph: consecutive labels
/// alternate between the two halves of the line, so the token bounces across
/// the middle on every step. Attains floor(n^2/2) - 1 on gen_line(n).
Ordering worst_line_ordering(int n);

/// Labels the directed n-cycle against the arc direction; every step costs
/// n-1 hops, for a total of (n-1)^2 on gen_directed_cycle(n).
Ordering worst_directed_cycle_ordering(int n);

/// The ordering that attains floor(n/2)*ceil(n/2) on gen_dn(n); no ordering
/// of that graph does better.
Ordering dn_best_ordering(int n);

/// Uniform random ordering, deterministic per seed.
Ordering random_ordering(int n, std::uint64_t rng_seed);
Ordering random_ordering(int n, std::mt19937_64& rng);

}  // namespace greedyorder
