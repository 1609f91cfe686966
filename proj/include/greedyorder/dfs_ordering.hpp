#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "greedyorder/comm_time.hpp"
#include "greedyorder/graph.hpp"
#include "greedyorder/submodular.hpp"

namespace greedyorder {

/// Per-vertex view at the end of a token-passing run. known_actions is the
/// prefix of choices (action indices, label order) this vertex last received;
/// in ordering-only runs the entries are the no-op token -1.
struct AgentState {
  std::vector<int> known_actions;
  std::optional<int> order;
  std::optional<int> parent;
  std::vector<int> neighborhood;
  bool done = false;
};

enum class Algorithm1Variant {
  standard,        // stop once the token drains back to the seed
  order_equals_n,  // stop as soon as some vertex is labeled n
};

std::string to_string(Algorithm1Variant variant);
Algorithm1Variant variant_from_string(const std::string& token);

enum class EventKind { init_forward, backtrack };

/// One counted message: the token moving from one vertex to an adjacent one.
struct TraceEvent {
  int time = 0;  // value of t after this message
  int from = 0;
  int to = 0;
  EventKind kind = EventKind::init_forward;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct RunTrace {
  int t = 0;
  Ordering ordering;
  std::vector<TraceEvent> events;
  std::vector<int> greedy_actions;  // per label; empty in ordering-only runs
  std::vector<AgentState> final_states;
  int seed = 0;
  Algorithm1Variant variant = Algorithm1Variant::standard;
};

/// Picks the next vertex to visit among the not-yet-done neighbors (always
/// nonempty when called). Defaults to the smallest vertex id.
using NeighborPolicy = std::function<int(int v, std::span<const int> unvisited)>;

/// Token-passing depth-first labeling: the seed starts at label 1, each
/// forward message labels an unvisited neighbor, each dead end sends the
/// token back to the parent, and both message kinds cost one time step.
/// With a problem attached (one agent slot per vertex) every newly labeled
/// vertex also makes its greedy choice from the actions carried by the token.
RunTrace run_algorithm1(const Graph& g, int seed,
                        const SubmodularProblem* problem = nullptr,
                        Algorithm1Variant variant = Algorithm1Variant::standard,
                        const NeighborPolicy& policy = {});

/// True iff a default-variant run from this seed finishes within 2n-2 steps.
bool verify_prop1_bound(const Graph& g, int seed);

}  // namespace greedyorder
