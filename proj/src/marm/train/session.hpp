#pragma once

#include <memory>
#include <string>
#include <vector>

#include "marm/train/agent_learner.hpp"

namespace marm {

enum class TaskKind { ThreeButtons, Rendezvous };

const char* task_name(TaskKind k);
std::optional<TaskKind> task_from_name(const std::string& name);

struct TaskSuite {
  std::vector<std::unique_ptr<AgentTask>> tasks;
  std::unique_ptr<TeamEnv> team;
  int num_agents() const { return static_cast<int>(tasks.size()); }
};

TaskSuite make_suite(TaskKind kind, const GridMap& map, double p_sync);
std::vector<RewardMachine> handcrafted_machines(TaskKind kind);

struct EvalPoint {
  int episode = 0;
  long long cum_env_steps = 0;
  double steps_mean = 0.0;
  double reward_mean = 0.0;
  std::vector<int> rm_states;
  long long induction_calls = 0;
  double induction_wall_s = 0.0;
};

struct RunMetrics {
  std::vector<EvalPoint> points;
};

struct TrainResult {
  RunMetrics metrics;
  std::vector<RewardMachine> final_rms;
  std::vector<QPolicy> final_policies;
  std::vector<ExampleSets> final_examples;
  std::vector<InductionRecord> induction_log;
};

struct EvalOutcome {
  double steps_mean = 0.0;
  double reward_mean = 0.0;
};

// Greedy joint rollouts; each agent advances its own machine on its own
// labels with real synchronization from the team environment. Reward is 1
// iff the collective goal is reached within the horizon.
EvalOutcome evaluate_team(TeamEnv& team, const std::vector<const RewardMachine*>& rms,
                          const std::vector<const QPolicy*>& policies,
                          int n_episodes, int horizon);

// Per-agent individual training with lockstep round-robin stepping and
// periodic team evaluation.
TrainResult run_training(TaskSuite& suite, Mode mode, const Hyperparams& hp,
                         const InductionBudget& budget,
                         const std::vector<RewardMachine>* provided = nullptr,
                         bool check_hygiene = false);

}  // namespace marm
