#include "greedyorder/comm_time.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

#include "greedyorder/errors.hpp"
#include "greedyorder/rng.hpp"

namespace greedyorder {

Ordering::Ordering(std::vector<int> label_of_vertex)
    : label_of_(std::move(label_of_vertex)) {
  int n = static_cast<int>(label_of_.size());
  if (n == 0) throw std::invalid_argument("ordering must not be empty");
  vertex_of_.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int label = label_of_[v];
    if (label < 1 || label > n)
      throw std::invalid_argument("label out of range 1..n");
    if (vertex_of_[label - 1] != -1)
      throw std::invalid_argument("duplicate label");
    vertex_of_[label - 1] = v;
  }
}

Ordering Ordering::identity(int n) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  return Ordering(std::move(labels));
}

Ordering Ordering::from_vertex_sequence(const std::vector<int>& vertex_of_label) {
  int n = static_cast<int>(vertex_of_label.size());
  std::vector<int> labels(n, 0);
  for (int i = 0; i < n; ++i) {
    int v = vertex_of_label[i];
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    if (labels[v] != 0) throw std::invalid_argument("duplicate vertex");
    labels[v] = i + 1;
  }
  return Ordering(std::move(labels));
}

int Ordering::label_of(int v) const {
  if (v < 0 || v >= size()) throw std::invalid_argument("vertex out of range");
  return label_of_[v];
}

int Ordering::vertex_of(int label) const {
  if (label < 1 || label > size())
    throw std::invalid_argument("label out of range 1..n");
  return vertex_of_[label - 1];
}

std::string to_string(OrderingMethod method) {
  switch (method) {
    case OrderingMethod::exact_min: return "exact-min";
    case OrderingMethod::exact_max: return "exact-max";
    case OrderingMethod::spanning_walk: return "spanning-walk";
    case OrderingMethod::tree_closed_form: return "tree-closed-form";
    case OrderingMethod::constructed_worst_line: return "constructed-worst-line";
    case OrderingMethod::random_draw: return "random";
  }
  throw std::invalid_argument("unknown ordering method");
}

TimeBreakdown comm_time(const Graph& g, const Ordering& pi) {
  if (pi.size() != g.vertex_count())
    throw std::invalid_argument("ordering size does not match graph");
  if (!is_connected(g))
    throw std::domain_error("communication time needs a connected graph");
  TimeBreakdown out;
  out.per_step.reserve(pi.size() > 0 ? pi.size() - 1 : 0);
  for (int label = 1; label < pi.size(); ++label) {
    int hops = *shortest_path_hops(g, pi.vertex_of(label), pi.vertex_of(label + 1));
    out.per_step.push_back(hops);
    out.total += hops;
  }
  return out;
}

namespace {

// Pass 1 of the exact search: branch and bound over vertex visit sequences,
// returning only the extreme total. Candidates are tried closest-first when
// minimizing (farthest-first when maximizing) so the incumbent tightens fast.
struct TotalSearch {
  const std::vector<std::vector<int>>& d;
  int n;
  bool maximize;
  int dmax = 0;
  std::vector<std::vector<int>> candidates;  // per vertex, sorted by distance
  std::vector<char> used;
  int best = 0;

  TotalSearch(const std::vector<std::vector<int>>& dist, bool max_mode)
      : d(dist), n(static_cast<int>(dist.size())), maximize(max_mode) {
    for (int u = 0; u < n; ++u)
      dmax = std::max(dmax, *std::max_element(d[u].begin(), d[u].end()));
    candidates.resize(n);
    for (int u = 0; u < n; ++u) {
      std::vector<int>& cand = candidates[u];
      for (int v = 0; v < n; ++v)
        if (v != u) cand.push_back(v);
      std::sort(cand.begin(), cand.end(), [&](int a, int b) {
        return maximize ? d[u][a] > d[u][b] : d[u][a] < d[u][b];
      });
    }
    used.assign(n, 0);
    best = heuristic_bound();
    for (int start = 0; start < n; ++start) {
      used[start] = 1;
      descend(start, 1, 0);
      used[start] = 0;
    }
  }

  int heuristic_bound() const {
    int incumbent = maximize ? 0 : INT_MAX;
    std::vector<char> seen(n);
    for (int start = 0; start < n; ++start) {
      std::fill(seen.begin(), seen.end(), 0);
      seen[start] = 1;
      int at = start, total = 0;
      for (int placed = 1; placed < n; ++placed) {
        int pick = -1;
        for (int v : candidates[at])
          if (!seen[v]) { pick = v; break; }
        seen[pick] = 1;
        total += d[at][pick];
        at = pick;
      }
      incumbent = maximize ? std::max(incumbent, total)
                           : std::min(incumbent, total);
    }
    return incumbent;
  }

  void descend(int at, int placed, int partial) {
    if (placed == n) {
      best = maximize ? std::max(best, partial) : std::min(best, partial);
      return;
    }
    int remaining = n - placed;
    if (maximize) {
      if (partial + remaining * dmax <= best) return;
    } else {
      if (partial + remaining >= best) return;
    }
    for (int v : candidates[at]) {
      if (used[v]) continue;
      used[v] = 1;
      descend(v, placed + 1, partial + d[at][v]);
      used[v] = 0;
    }
  }
};

// Pass 2: first depth-first completion over label assignments in vertex
// order, trying labels ascending, is the lexicographically smallest labels()
// vector attaining the target total.
struct WitnessSearch {
  const std::vector<std::vector<int>>& d;
  int n;
  bool maximize;
  int target;
  int dmax;
  std::vector<int> label_of;
  std::vector<int> vertex_of;  // 1-based label -> vertex, -1 unassigned
  int partial = 0;
  int realized = 0;

  WitnessSearch(const std::vector<std::vector<int>>& dist, bool max_mode,
                int target_total, int dist_max)
      : d(dist), n(static_cast<int>(dist.size())), maximize(max_mode),
        target(target_total), dmax(dist_max) {
    label_of.assign(n, 0);
    vertex_of.assign(n + 2, -1);
    descend(0);
  }

  bool feasible() const {
    int unrealized = (n - 1) - realized;
    return maximize ? partial + unrealized * dmax >= target
                    : partial + unrealized <= target;
  }

  bool descend(int v) {
    if (v == n) return partial == target;
    for (int label = 1; label <= n; ++label) {
      if (vertex_of[label] != -1) continue;
      int delta = 0, pairs = 0;
      if (label > 1 && vertex_of[label - 1] != -1) {
        delta += d[vertex_of[label - 1]][v];
        ++pairs;
      }
      if (label < n && vertex_of[label + 1] != -1) {
        delta += d[v][vertex_of[label + 1]];
        ++pairs;
      }
      label_of[v] = label;
      vertex_of[label] = v;
      partial += delta;
      realized += pairs;
      if (feasible() && descend(v + 1)) return true;
      partial -= delta;
      realized -= pairs;
      vertex_of[label] = -1;
      label_of[v] = 0;
    }
    return false;
  }
};

OrderingReport exact_extreme(const Graph& g, bool maximize) {
  int n = g.vertex_count();
  if (n > kMaxExactSearchVertices)
    throw BudgetError("exact ordering search is capped at 9 vertices");
  if (!is_connected(g))
    throw std::domain_error("exact ordering search needs a connected graph");
  OrderingMethod method =
      maximize ? OrderingMethod::exact_max : OrderingMethod::exact_min;
  if (n == 1) return {Ordering::identity(1), TimeBreakdown{}, method};

  std::vector<std::vector<int>> d = all_pairs_hops(g);
  TotalSearch totals(d, maximize);
  WitnessSearch witness(d, maximize, totals.best, totals.dmax);

  Ordering pi(witness.label_of);
  TimeBreakdown time;
  for (int label = 1; label < n; ++label) {
    int hops = d[pi.vertex_of(label)][pi.vertex_of(label + 1)];
    time.per_step.push_back(hops);
    time.total += hops;
  }
  return {std::move(pi), std::move(time), method};
}

}  // namespace

OrderingReport best_ordering_exact(const Graph& g) {
  return exact_extreme(g, false);
}

OrderingReport worst_ordering_exact(const Graph& g) {
  return exact_extreme(g, true);
}

Walk minimum_spanning_walk(const Graph& g) {
  if (g.is_directed())
    throw std::invalid_argument("spanning walk search needs an undirected graph");
  int n = g.vertex_count();
  if (n > kMaxWalkSearchVertices)
    throw BudgetError("spanning walk search is capped at 12 vertices");
  if (!is_connected(g))
    throw std::domain_error("spanning walk needs a connected graph");
  if (n == 1) return Walk{{0}};

  // BFS over (vertex, visited-set) states finds a fewest-hop spanning walk.
  int full = (1 << n) - 1;
  std::vector<int> pred(static_cast<std::size_t>(n) << n, -2);
  std::vector<int> queue;
  auto id = [n](int v, int mask) { return mask * n + v; };
  for (int v = 0; v < n; ++v) {
    pred[id(v, 1 << v)] = -1;
    queue.push_back(id(v, 1 << v));
  }
  int goal = -1;
  for (std::size_t head = 0; head < queue.size() && goal < 0; ++head) {
    int cur = queue[head];
    int v = cur % n, mask = cur / n;
    for (int u : g.neighbors(v)) {
      int next = id(u, mask | (1 << u));
      if (pred[next] != -2) continue;
      pred[next] = cur;
      if ((mask | (1 << u)) == full) {
        goal = next;
        break;
      }
      queue.push_back(next);
    }
  }

  Walk walk;
  for (int cur = goal; cur != -1; cur = pred[cur])
    walk.vertices.push_back(cur % n);
  std::reverse(walk.vertices.begin(), walk.vertices.end());
  return walk;
}

OrderingReport best_ordering_spanning_walk(const Graph& g) {
  Walk walk = minimum_spanning_walk(g);
  int n = g.vertex_count();
  std::vector<int> label_of(n, 0);
  int next_label = 1;
  for (int v : walk.vertices)
    if (label_of[v] == 0) label_of[v] = next_label++;
  Ordering pi(std::move(label_of));
  TimeBreakdown time = comm_time(g, pi);
  return {std::move(pi), std::move(time), OrderingMethod::spanning_walk};
}

int tree_tmin_closed_form(const Graph& g) {
  if (!is_tree(g))
    throw std::invalid_argument("closed form applies only to trees");
  return 2 * (g.vertex_count() - 1) - diameter(g);
}

Ordering worst_line_ordering(int n) {
  if (n < 2) throw std::invalid_argument("line graphs need n >= 2");
  // Start near the middle, then bounce between the far ends so consecutive
  // labels always sit in opposite halves of the line.
  int mid = (n + 1) / 2;
  std::vector<int> position_of_label{mid};
  int hi = n, lo = 1;
  bool take_hi = true;
  while (static_cast<int>(position_of_label.size()) < n) {
    if (take_hi) {
      if (hi == mid) --hi;
      position_of_label.push_back(hi--);
    } else {
      if (lo == mid) ++lo;
      position_of_label.push_back(lo++);
    }
    take_hi = !take_hi;
  }
  for (int& q : position_of_label) --q;
  return Ordering::from_vertex_sequence(position_of_label);
}

Ordering worst_directed_cycle_ordering(int n) {
  if (n < 3) throw std::invalid_argument("directed cycle ordering needs n >= 3");
  // Label against the arc direction: each step must loop the long way round.
  std::vector<int> vertex_of_label(n);
  for (int i = 0; i < n; ++i) vertex_of_label[i] = (n - i) % n;
  return Ordering::from_vertex_sequence(vertex_of_label);
}

Ordering dn_best_ordering(int n) {
  if (n < 3) throw std::invalid_argument("gen_dn needs n >= 3");
  std::vector<int> label_of(n);
  for (int v = 0; v + 1 < n; ++v) label_of[v] = v + 2;
  label_of[n - 1] = 1;
  return Ordering(std::move(label_of));
}

Ordering random_ordering(int n, std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  return random_ordering(n, rng);
}

Ordering random_ordering(int n, std::mt19937_64& rng) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  shuffle_in_place(labels, rng);
  return Ordering(std::move(labels));
}

}  // namespace greedyorder
