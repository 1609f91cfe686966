#include "greedyorder/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

#include "greedyorder/rng.hpp"

namespace greedyorder {

Graph::Graph(int n, bool directed, std::vector<Edge> edges)
    : n_(n), directed_(directed), edges_(std::move(edges)) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto& [u, v] : edges_) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (!directed_ && u > v) std::swap(u, v);  // canonical unordered pair
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");

  out_.resize(n_);
  in_.resize(n_);
  for (auto [u, v] : edges_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
    if (!directed_) {
      out_[v].push_back(u);
      in_[u].push_back(v);
    }
  }
  for (auto& adj : out_) std::sort(adj.begin(), adj.end());
  for (auto& adj : in_) std::sort(adj.begin(), adj.end());
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex id " + std::to_string(v) +
                                " out of range for n=" + std::to_string(n_));
}

std::span<const int> Graph::neighbors(int v) const {
  check_vertex(v);
  return out_[v];
}

std::span<const int> Graph::in_neighbors(int v) const {
  check_vertex(v);
  return in_[v];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

Graph Graph::with_edge(int u, int v) const {
  auto edges = edges_;
  edges.emplace_back(u, v);
  return Graph(n_, directed_, std::move(edges));
}

bool is_walk_of(const Graph& g, const std::vector<int>& vertices) {
  if (vertices.empty()) return false;
  for (int v : vertices)
    if (v < 0 || v >= g.vertex_count()) return false;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (!g.has_edge(vertices[i], vertices[i + 1])) return false;
  return true;
}

bool is_path_of(const Graph& g, const std::vector<int>& vertices) {
  if (!is_walk_of(g, vertices)) return false;
  auto sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

namespace {

// BFS hop counts from src; -1 where unreachable. reversed follows in-edges.
std::vector<int> bfs_hops(const Graph& g, int src, bool reversed = false) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    auto next = reversed ? g.in_neighbors(v) : g.neighbors(v);
    for (int w : next)
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

}  // namespace

std::optional<int> shortest_path_hops(const Graph& g, int src, int dst) {
  if (src < 0 || src >= g.vertex_count() || dst < 0 || dst >= g.vertex_count())
    throw std::invalid_argument("vertex id out of range");
  auto dist = bfs_hops(g, src);
  if (dist[dst] < 0) return std::nullopt;
  return dist[dst];
}

std::vector<std::vector<int>> all_pairs_hops(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) d.push_back(bfs_hops(g, v));
  return d;
}

bool is_connected(const Graph& g) {
  auto covers_all = [&](const std::vector<int>& dist) {
    return std::none_of(dist.begin(), dist.end(),
                        [](int h) { return h < 0; });
  };
  if (!covers_all(bfs_hops(g, 0))) return false;
  // strong connectivity needs the reverse sweep as well
  return !g.is_directed() || covers_all(bfs_hops(g, 0, /*reversed=*/true));
}

int diameter(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto dist = bfs_hops(g, v);
    for (int h : dist) {
      if (h < 0) throw std::domain_error("diameter of a disconnected graph");
      best = std::max(best, h);
    }
  }
  return best;
}

Graph gen_line(int n) {
  if (n < 2) throw std::invalid_argument("line graph needs n >= 2");
  std::vector<Graph::Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, false, std::move(edges));
}

Graph gen_star(int n) {
  if (n < 3) throw std::invalid_argument("star graph needs n >= 3");
  std::vector<Graph::Edge> edges;
  for (int leaf = 1; leaf < n; ++leaf) edges.emplace_back(0, leaf);
  return Graph(n, false, std::move(edges));
}

Graph gen_complete(int n) {
  if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, false, std::move(edges));
}

Graph gen_directed_cycle(int n) {
  if (n < 2) throw std::invalid_argument("directed cycle needs n >= 2");
  std::vector<Graph::Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, true, std::move(edges));
}

Graph gen_dn(int n) {
  if (n < 3) throw std::invalid_argument("D_n construction needs n >= 3");
  // 1-based vertices v_1..v_n mapped to ids 0..n-1. A chain feeds the hub
  // v_{ceil(n/2)-1}; the hub fans out to every second-half vertex, each of
  // which has an arc back to v_1.
  int half = (n + 1) / 2;  // ceil(n/2)
  int hub = half - 2;      // id of v_{ceil(n/2)-1}
  std::vector<Graph::Edge> edges;
  for (int j = 1; j <= half - 2; ++j) edges.emplace_back(j - 1, j);
  for (int j = half; j <= n; ++j) {
    edges.emplace_back(hub, j - 1);
    edges.emplace_back(j - 1, 0);
  }
  return Graph(n, true, std::move(edges));
}

Graph gen_erdos_renyi(int n, double p, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform_real01(rng) < p) edges.emplace_back(u, v);
  return Graph(n, false, std::move(edges));
}

Graph gen_erdos_renyi(int n, double p, std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  return gen_erdos_renyi(n, p, rng);
}

Graph gen_connected_erdos_renyi(int n, double p, std::mt19937_64& rng,
                                int max_attempts, std::int64_t* rejections) {
  if (!(p > 0.0 && p <= 1.0))
    throw std::invalid_argument(
        "edge probability must lie in (0, 1] for connected sampling");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g = gen_erdos_renyi(n, p, rng);
    if (is_connected(g)) return g;
    if (rejections) ++*rejections;
  }
  throw SamplingError("no connected sample within " +
                      std::to_string(max_attempts) + " attempts");
}

Graph gen_connected_erdos_renyi(int n, double p, std::uint64_t rng_seed,
                                int max_attempts) {
  std::mt19937_64 rng(rng_seed);
  return gen_connected_erdos_renyi(n, p, rng, max_attempts);
}

Graph tree_from_pruefer(int n, const std::vector<int>& seq) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  int expect = n >= 2 ? n - 2 : 0;
  if (static_cast<int>(seq.size()) != expect)
    throw std::invalid_argument("Pruefer sequence must have length n-2");
  for (int s : seq)
    if (s < 0 || s >= n)
      throw std::invalid_argument("Pruefer value out of range");
  if (n == 1) return Graph(1, false, {});

  std::vector<int> degree(n, 1);
  for (int s : seq) ++degree[s];
  std::vector<Graph::Edge> edges;
  edges.reserve(n - 1);
  for (int s : seq) {
    for (int j = 0; j < n; ++j)
      if (degree[j] == 1) {
        edges.emplace_back(j, s);
        degree[j] = 0;
        --degree[s];
        break;
      }
  }
  // the two vertices still holding degree 1 close the tree
  int first = -1;
  for (int j = 0; j < n; ++j)
    if (degree[j] == 1) {
      if (first < 0)
        first = j;
      else
        edges.emplace_back(first, j);
    }
  return Graph(n, false, std::move(edges));
}

Graph gen_random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  std::vector<int> seq(n >= 2 ? n - 2 : 0);
  for (int& s : seq) s = static_cast<int>(uniform_index(rng, n));
  return tree_from_pruefer(n, seq);
}

Graph gen_random_tree(int n, std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  return gen_random_tree(n, rng);
}

void enumerate_connected_graphs(
    int n, bool directed, const std::function<void(const Graph&)>& visit) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  int cap = directed ? kMaxEnumDirected : kMaxEnumUndirected;
  if (n > cap)
    throw BudgetError("connected-graph enumeration capped at n=" +
                      std::to_string(cap));
  std::vector<Graph::Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (!directed && u > v) continue;
      pairs.emplace_back(u, v);
    }
  std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Graph::Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) edges.push_back(pairs[i]);
    Graph g(n, directed, edges);
    if (is_connected(g)) visit(g);
  }
}

void enumerate_labeled_trees(int n,
                             const std::function<void(const Graph&)>& visit) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (n <= 2) {
    visit(tree_from_pruefer(n, {}));
    return;
  }
  // odometer over all n^(n-2) Pruefer sequences
  std::vector<int> seq(n - 2, 0);
  while (true) {
    visit(tree_from_pruefer(n, seq));
    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
}

bool is_tree(const Graph& g) {
  return !g.is_directed() && g.edge_count() == g.vertex_count() - 1 &&
         is_connected(g);
}

}  // namespace greedyorder
