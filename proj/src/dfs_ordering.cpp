#include "greedyorder/dfs_ordering.hpp"

#include <algorithm>
#include <stdexcept>

namespace greedyorder {

std::string to_string(Algorithm1Variant variant) {
  switch (variant) {
    case Algorithm1Variant::standard: return "standard";
    case Algorithm1Variant::order_equals_n: return "order-n";
  }
  throw std::invalid_argument("unknown variant");
}

Algorithm1Variant variant_from_string(const std::string& token) {
  if (token == "standard") return Algorithm1Variant::standard;
  if (token == "order-n") return Algorithm1Variant::order_equals_n;
  throw std::invalid_argument("unknown variant token: " + token);
}

RunTrace run_algorithm1(const Graph& g, int seed,
                        const SubmodularProblem* problem,
                        Algorithm1Variant variant,
                        const NeighborPolicy& policy) {
  if (g.is_directed())
    throw std::invalid_argument("the token-passing run needs an undirected graph");
  int n = g.vertex_count();
  if (seed < 0 || seed >= n) throw std::invalid_argument("seed out of range");
  if (!is_connected(g))
    throw std::domain_error("the token-passing run needs a connected graph");
  if (problem) {
    problem->validate();
    if (problem->agent_count() != n)
      throw std::invalid_argument("problem needs one agent slot per vertex");
  }

  std::vector<char> done(n, 0);
  std::vector<int> order(n, 0);
  std::vector<int> parent(n, -1);
  std::vector<int> last_seen(n, 0);  // length of the action prefix seen last
  std::vector<int> chosen;           // action index per label; -1 without a problem
  std::vector<TraceEvent> events;
  ElementMask acc = 0;
  int t = 0;

  auto init_vertex = [&](int v, int par) {
    done[v] = 1;
    order[v] = static_cast<int>(chosen.size()) + 1;
    parent[v] = par;
    if (problem) {
      int idx = greedy_choice_index(*problem, v, acc);
      acc |= problem->agent_actions[v][idx];
      chosen.push_back(idx);
    } else {
      chosen.push_back(-1);
    }
    last_seen[v] = static_cast<int>(chosen.size());
  };

  init_vertex(seed, -1);
  int v = seed;
  std::vector<int> unvisited;
  while (true) {
    last_seen[v] = static_cast<int>(chosen.size());
    if (variant == Algorithm1Variant::order_equals_n && order[v] == n) break;
    unvisited.clear();
    for (int w : g.neighbors(v))
      if (!done[w]) unvisited.push_back(w);
    if (!unvisited.empty()) {
      int w = policy ? policy(v, std::span<const int>(unvisited))
                     : unvisited.front();
      if (std::find(unvisited.begin(), unvisited.end(), w) == unvisited.end())
        throw std::invalid_argument("policy picked a visited or non-adjacent vertex");
      events.push_back({++t, v, w, EventKind::init_forward});
      init_vertex(w, v);
      v = w;
    } else if (parent[v] != -1) {
      events.push_back({++t, v, parent[v], EventKind::backtrack});
      v = parent[v];
    } else {
      break;
    }
  }

  std::vector<AgentState> states(n);
  for (int u = 0; u < n; ++u) {
    AgentState& s = states[u];
    s.done = done[u] != 0;
    s.order = order[u];
    if (u != seed) s.parent = parent[u];
    s.neighborhood.assign(g.neighbors(u).begin(), g.neighbors(u).end());
    s.known_actions.assign(chosen.begin(), chosen.begin() + last_seen[u]);
  }

  return RunTrace{t,
                  Ordering(order),
                  std::move(events),
                  problem ? chosen : std::vector<int>{},
                  std::move(states),
                  seed,
                  variant};
}

bool verify_prop1_bound(const Graph& g, int seed) {
  RunTrace trace = run_algorithm1(g, seed);
  return trace.t <= 2 * g.vertex_count() - 2;
}

}  // namespace greedyorder
