#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "greedyorder/errors.hpp"

namespace greedyorder {

/// Communication network: a simple graph on vertices 0..n-1, optionally
/// directed. Undirected edges are stored canonically as (min, max) pairs;
/// the edge list is kept sorted and adjacency lists ascend by vertex id,
/// so traversals are deterministic.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph(int n, bool directed, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  bool is_directed() const { return directed_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Out-neighbors in ascending id order (all neighbors when undirected).
  std::span<const int> neighbors(int v) const;
  /// In-neighbors; identical to neighbors() when undirected.
  std::span<const int> in_neighbors(int v) const;

  bool has_edge(int u, int v) const;
  /// Copy of this graph with one extra edge.
  Graph with_edge(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

/// A vertex sequence whose consecutive entries are adjacent; repeats allowed.
/// Length is counted in hops (edges), not vertices; see hop_count().
struct Walk {
  std::vector<int> vertices;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int hop_count() const {
    return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1;
  }
};

/// A walk with all vertices distinct.
struct Path {
  std::vector<int> vertices;

  int hop_count() const {
    return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1;
  }
};

bool is_walk_of(const Graph& g, const std::vector<int>& vertices);
bool is_path_of(const Graph& g, const std::vector<int>& vertices);

/// Minimum number of edges on any src->dst path (BFS), nullopt if
/// unreachable, 0 when src == dst.
std::optional<int> shortest_path_hops(const Graph& g, int src, int dst);

/// Hop-count matrix from n BFS sweeps; -1 marks unreachable pairs.
std::vector<std::vector<int>> all_pairs_hops(const Graph& g);

/// Undirected: one component. Directed: strongly connected.
bool is_connected(const Graph& g);

/// Max shortest-path hops over all vertex pairs. Throws std::domain_error on
/// a disconnected graph.
int diameter(const Graph& g);

// Generators. All validate their minimum n and throw std::invalid_argument.
Graph gen_line(int n);            // edges (i, i+1), n >= 2
Graph gen_star(int n);            // vertex 0 is the center, n >= 3
Graph gen_complete(int n);        // n >= 2
Graph gen_directed_cycle(int n);  // arcs (i, i+1 mod n), n >= 2

/// Directed construction whose best ordering still needs floor(n/2)*ceil(n/2)
/// steps: a chain v1..v_{ceil(n/2)-1} feeding a hub that fans out to the
/// second half, which loops back to v1. n >= 3.
Graph gen_dn(int n);

/// G(n, p): each unordered pair is an edge independently with probability p.
Graph gen_erdos_renyi(int n, double p, std::uint64_t rng_seed);
Graph gen_erdos_renyi(int n, double p, std::mt19937_64& rng);

inline constexpr int kDefaultSamplingAttempts = 100000;

/// Rejection-samples G(n, p) until connected. Throws SamplingError after
/// max_attempts rejections; *rejections (optional) accumulates the number of
/// discarded samples.
Graph gen_connected_erdos_renyi(int n, double p, std::uint64_t rng_seed,
                                int max_attempts = kDefaultSamplingAttempts);
Graph gen_connected_erdos_renyi(int n, double p, std::mt19937_64& rng,
                                int max_attempts = kDefaultSamplingAttempts,
                                std::int64_t* rejections = nullptr);

/// Decode a Pruefer sequence (values in 0..n-1, length n-2) into the labeled
/// tree it encodes. n >= 1.
Graph tree_from_pruefer(int n, const std::vector<int>& seq);

/// Uniform random labeled tree via a random Pruefer sequence.
Graph gen_random_tree(int n, std::uint64_t rng_seed);
Graph gen_random_tree(int n, std::mt19937_64& rng);

inline constexpr int kMaxEnumUndirected = 6;
inline constexpr int kMaxEnumDirected = 4;

/// Visits every labeled connected graph on n vertices exactly once
/// (strongly connected when directed). Caps: n <= 6 undirected, n <= 4
/// directed; beyond them throws BudgetError.
void enumerate_connected_graphs(int n, bool directed,
                                const std::function<void(const Graph&)>& visit);

/// Visits all n^(n-2) labeled trees on n vertices (one tree for n <= 2).
void enumerate_labeled_trees(int n,
                             const std::function<void(const Graph&)>& visit);

/// Connected with exactly n-1 undirected edges.
bool is_tree(const Graph& g);

}  // namespace greedyorder
