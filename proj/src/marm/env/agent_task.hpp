#pragma once

#include <random>
#include <vector>

#include "marm/core/error.hpp"
#include "marm/core/reward_machine.hpp"
#include "marm/core/trace.hpp"
#include "marm/env/grid_map.hpp"

namespace marm {

using Rng = std::mt19937_64;

enum class Action : int { Up = 0, Down, Left, Right, Noop };
inline constexpr int kNumActions = 5;

inline Action action_from_int(int a) {
  if (a < 0 || a >= kNumActions) throw std::invalid_argument("invalid action code");
  return static_cast<Action>(a);
}

struct StepOutcome {
  Label label;
  bool goal_achieved = false;
};

// One agent's local view of its sub-task during individual training. The
// agent observes its own cell only; doors, button flags and teammate events
// live inside the task. Shared propositions caused by teammates fire
// stochastically with probability p_sync per eligible step.
//
// Each instance is owned by exactly one trainer and is stateful per episode.
class AgentTask {
 public:
  virtual ~AgentTask() = default;

  virtual int agent_index() const = 0;
  virtual const PropSpace& props() const = 0;
  virtual std::vector<PropId> shared_props() const = 0;
  // Handcrafted machine for this sub-task; defines the termination predicate
  // (the episode's trace reaching its final state) and serves as the
  // provided-mode RM.
  virtual const RewardMachine& task_machine() const = 0;

  virtual int num_observations() const = 0;
  virtual void reset() = 0;
  virtual int observation() const = 0;
  virtual StepOutcome step(Action a, Rng& rng) = 0;
};

// Joint environment used for team evaluation: all agents move at once,
// shared propositions fire only with real synchronization.
class TeamEnv {
 public:
  virtual ~TeamEnv() = default;
  virtual int num_agents() const = 0;
  virtual void reset() = 0;
  virtual int observation(int agent) const = 0;
  struct TeamStep {
    std::vector<Label> labels;  // one per agent, at most one proposition each
    bool collective_goal = false;
  };
  virtual TeamStep step(const std::vector<Action>& joint) = 0;
  // Global label of the last step (union over the agents' labeling
  // functions), assembled from the environment events directly.
  virtual Label global_label() const = 0;
};

inline bool coin(Rng& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

}  // namespace marm
