#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "greedyorder/comm_time.hpp"

namespace greedyorder {

/// Subset of the ground set, one bit per element id.
using ElementMask = std::uint64_t;
using SetFunction = std::function<double(ElementMask)>;

inline constexpr int kMaxGroundSize = 63;
inline constexpr int kMaxCheckerGroundSize = 12;
inline constexpr long kMaxJointProfiles = 1000000;

/// Comparison tolerance for real-valued objectives throughout.
inline constexpr double kValueEps = 1e-9;

ElementMask mask_of_elements(const std::vector<int>& elements, int ground_size);
std::vector<int> elements_of_mask(ElementMask mask);

/// f(S) = sum of weights over elements of S; modular, hence monotone
/// submodular for nonnegative weights.
struct CoverageObjective {
  std::vector<double> weights;

  double operator()(ElementMask s) const;
};

/// Agents, their action lists (subsets of the ground set; the empty opt-out
/// action must appear in every list), and the shared objective. When built
/// from the coverage family, coverage_weights keeps the serializable form.
struct SubmodularProblem {
  int ground_size = 0;
  std::vector<std::vector<ElementMask>> agent_actions;
  SetFunction objective;
  std::vector<double> coverage_weights;  // empty for non-coverage objectives

  int agent_count() const { return static_cast<int>(agent_actions.size()); }
  double value(ElementMask s) const { return objective(s); }
  /// Throws std::invalid_argument on malformed instances (no agents, masks
  /// outside the ground set, a missing opt-out action, no objective).
  void validate() const;
};

SubmodularProblem make_coverage_problem(
    std::vector<double> weights,
    std::vector<std::vector<ElementMask>> agent_actions);

/// One chosen action per agent, as an index into that agent's list.
struct JointAction {
  std::vector<int> action_index;
  ElementMask union_mask = 0;
};

JointAction make_joint(const SubmodularProblem& problem,
                       std::vector<int> action_index);

/// W(a) = f of the union of the chosen subsets.
double evaluate_w(const SubmodularProblem& problem, const JointAction& joint);

struct GreedyResult {
  JointAction joint;
  double value = 0;
};

/// The action agent would pick given the union of earlier choices: argmax of
/// f(union | action) over its list, earliest index on ties.
int greedy_choice_index(const SubmodularProblem& problem, int agent,
                        ElementMask current_union);

/// Agents act in label order; each maximizes the objective given the choices
/// of earlier labels, with everyone else opted out.
GreedyResult greedy_execute(const SubmodularProblem& problem,
                            const Ordering& pi);

/// Exhaustive maximum of W over all joint profiles (product of list sizes
/// capped at 10^6). Ties resolve to the lexicographically smallest index
/// vector.
GreedyResult brute_force_opt(const SubmodularProblem& problem);

/// True iff f is normalized (f(empty) = 0), monotone, and submodular over all
/// subsets of {0..ground_size-1}, within kValueEps. ground_size <= 12.
bool check_submodular_monotone(const SetFunction& f, int ground_size);

/// Random instance of the coverage family: per agent, the opt-out followed by
/// actions_per_agent uniform nonempty subsets; element weights uniform in
/// [0, 1). Weights are drawn first, then each agent's actions in agent order.
SubmodularProblem gen_random_coverage_problem(int n_agents, int ground_size,
                                              int actions_per_agent,
                                              std::uint64_t rng_seed);
SubmodularProblem gen_random_coverage_problem(int n_agents, int ground_size,
                                              int actions_per_agent,
                                              std::mt19937_64& rng);

}  // namespace greedyorder
