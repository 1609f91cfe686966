#include "greedyorder/submodular.hpp"

#include <algorithm>
#include <stdexcept>

#include "greedyorder/errors.hpp"
#include "greedyorder/rng.hpp"

namespace greedyorder {

ElementMask mask_of_elements(const std::vector<int>& elements, int ground_size) {
  ElementMask mask = 0;
  for (int e : elements) {
    if (e < 0 || e >= ground_size)
      throw std::invalid_argument("element id outside the ground set");
    ElementMask bit = ElementMask{1} << e;
    if (mask & bit) throw std::invalid_argument("duplicate element id");
    mask |= bit;
  }
  return mask;
}

std::vector<int> elements_of_mask(ElementMask mask) {
  std::vector<int> out;
  for (int e = 0; mask != 0; ++e, mask >>= 1)
    if (mask & 1) out.push_back(e);
  return out;
}

double CoverageObjective::operator()(ElementMask s) const {
  double total = 0;
  for (std::size_t e = 0; e < weights.size() && (s >> e) != 0; ++e)
    if ((s >> e) & 1) total += weights[e];
  return total;
}

void SubmodularProblem::validate() const {
  if (ground_size < 1 || ground_size > kMaxGroundSize)
    throw std::invalid_argument("ground size must be in 1..63");
  if (agent_actions.empty())
    throw std::invalid_argument("problem needs at least one agent");
  if (!objective) throw std::invalid_argument("problem needs an objective");
  ElementMask ground = (ElementMask{1} << ground_size) - 1;
  for (const auto& list : agent_actions) {
    if (std::find(list.begin(), list.end(), ElementMask{0}) == list.end())
      throw std::invalid_argument("every action list needs the opt-out action");
    for (ElementMask a : list)
      if (a & ~ground)
        throw std::invalid_argument("action uses elements outside the ground set");
  }
  if (!coverage_weights.empty()) {
    if (static_cast<int>(coverage_weights.size()) != ground_size)
      throw std::invalid_argument("weight count must equal the ground size");
    for (double w : coverage_weights)
      if (!(w >= 0))
        throw std::invalid_argument("coverage weights must be nonnegative");
  }
}

SubmodularProblem make_coverage_problem(
    std::vector<double> weights,
    std::vector<std::vector<ElementMask>> agent_actions) {
  SubmodularProblem p;
  p.ground_size = static_cast<int>(weights.size());
  p.agent_actions = std::move(agent_actions);
  p.objective = CoverageObjective{weights};
  p.coverage_weights = std::move(weights);
  p.validate();
  return p;
}

JointAction make_joint(const SubmodularProblem& problem,
                       std::vector<int> action_index) {
  if (static_cast<int>(action_index.size()) != problem.agent_count())
    throw std::invalid_argument("one action index per agent required");
  JointAction joint{std::move(action_index), 0};
  for (int agent = 0; agent < problem.agent_count(); ++agent) {
    int idx = joint.action_index[agent];
    const auto& list = problem.agent_actions[agent];
    if (idx < 0 || idx >= static_cast<int>(list.size()))
      throw std::invalid_argument("action index outside the agent's list");
    joint.union_mask |= list[idx];
  }
  return joint;
}

double evaluate_w(const SubmodularProblem& problem, const JointAction& joint) {
  problem.validate();
  return problem.value(make_joint(problem, joint.action_index).union_mask);
}

int greedy_choice_index(const SubmodularProblem& problem, int agent,
                        ElementMask current_union) {
  if (agent < 0 || agent >= problem.agent_count())
    throw std::invalid_argument("agent id out of range");
  const auto& list = problem.agent_actions[agent];
  int best_idx = 0;
  double best_value = 0;
  for (int idx = 0; idx < static_cast<int>(list.size()); ++idx) {
    double value = problem.value(current_union | list[idx]);
    if (idx == 0 || value > best_value) {
      best_idx = idx;
      best_value = value;
    }
  }
  return best_idx;
}

GreedyResult greedy_execute(const SubmodularProblem& problem,
                            const Ordering& pi) {
  problem.validate();
  if (pi.size() != problem.agent_count())
    throw std::invalid_argument("ordering size does not match agent count");
  std::vector<int> choice(problem.agent_count(), 0);
  ElementMask acc = 0;
  for (int label = 1; label <= pi.size(); ++label) {
    int agent = pi.vertex_of(label);
    int idx = greedy_choice_index(problem, agent, acc);
    choice[agent] = idx;
    acc |= problem.agent_actions[agent][idx];
  }
  JointAction joint = make_joint(problem, std::move(choice));
  return {joint, problem.value(joint.union_mask)};
}

GreedyResult brute_force_opt(const SubmodularProblem& problem) {
  problem.validate();
  long profiles = 1;
  for (const auto& list : problem.agent_actions) {
    profiles *= static_cast<long>(list.size());
    if (profiles > kMaxJointProfiles)
      throw BudgetError("joint profile count exceeds 10^6");
  }

  int n = problem.agent_count();
  auto union_of = [&](const std::vector<int>& ix) {
    ElementMask m = 0;
    for (int a = 0; a < n; ++a) m |= problem.agent_actions[a][ix[a]];
    return m;
  };

  // odometer over index vectors in lexicographic order; only strict
  // improvements replace the incumbent, so ties keep the smallest vector
  std::vector<int> idx(n, 0);
  std::vector<int> best_idx = idx;
  double best_value = problem.value(union_of(idx));
  while (true) {
    int pos = n - 1;
    while (pos >= 0 &&
           idx[pos] + 1 >= static_cast<int>(problem.agent_actions[pos].size())) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++idx[pos];
    double value = problem.value(union_of(idx));
    if (value > best_value) {
      best_value = value;
      best_idx = idx;
    }
  }

  JointAction joint = make_joint(problem, std::move(best_idx));
  return {joint, best_value};
}

bool check_submodular_monotone(const SetFunction& f, int ground_size) {
  if (ground_size < 1) throw std::invalid_argument("ground size must be >= 1");
  if (ground_size > kMaxCheckerGroundSize)
    throw BudgetError("property check is capped at 12 ground elements");

  std::size_t subsets = std::size_t{1} << ground_size;
  std::vector<double> value(subsets);
  for (std::size_t s = 0; s < subsets; ++s) value[s] = f(s);

  if (std::abs(value[0]) > kValueEps) return false;
  for (std::size_t s = 0; s < subsets; ++s) {
    for (int x = 0; x < ground_size; ++x) {
      if ((s >> x) & 1) continue;
      std::size_t sx = s | (std::size_t{1} << x);
      if (value[sx] < value[s] - kValueEps) return false;  // monotonicity
      for (int y = x + 1; y < ground_size; ++y) {
        if ((s >> y) & 1) continue;
        std::size_t sy = s | (std::size_t{1} << y);
        if (value[sx] + value[sy] < value[sx | sy] + value[s] - kValueEps)
          return false;  // submodularity
      }
    }
  }
  return true;
}

SubmodularProblem gen_random_coverage_problem(int n_agents, int ground_size,
                                              int actions_per_agent,
                                              std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  return gen_random_coverage_problem(n_agents, ground_size, actions_per_agent,
                                     rng);
}

SubmodularProblem gen_random_coverage_problem(int n_agents, int ground_size,
                                              int actions_per_agent,
                                              std::mt19937_64& rng) {
  if (n_agents < 1) throw std::invalid_argument("need at least one agent");
  if (ground_size < 1 || ground_size > kMaxGroundSize)
    throw std::invalid_argument("ground size must be in 1..63");
  if (actions_per_agent < 1)
    throw std::invalid_argument("need at least one action per agent");

  std::vector<double> weights(ground_size);
  for (double& w : weights) w = uniform_real01(rng);

  ElementMask nonempty_count = (ElementMask{1} << ground_size) - 1;
  std::vector<std::vector<ElementMask>> lists(n_agents);
  for (auto& list : lists) {
    list.push_back(0);
    for (int a = 0; a < actions_per_agent; ++a)
      list.push_back(uniform_index(rng, nonempty_count) + 1);
  }
  return make_coverage_problem(std::move(weights), std::move(lists));
}

}  // namespace greedyorder
