#include "marm/train/session.hpp"

#include "marm/env/rendezvous.hpp"
#include "marm/env/three_buttons.hpp"

namespace marm {

const char* task_name(TaskKind k) {
  return k == TaskKind::ThreeButtons ? "three_buttons" : "rendezvous";
}

std::optional<TaskKind> task_from_name(const std::string& name) {
  if (name == "three_buttons") return TaskKind::ThreeButtons;
  if (name == "rendezvous") return TaskKind::Rendezvous;
  return std::nullopt;
}

TaskSuite make_suite(TaskKind kind, const GridMap& map, double p_sync) {
  TaskSuite suite;
  if (kind == TaskKind::ThreeButtons) {
    for (int i = 0; i < 3; ++i)
      suite.tasks.push_back(make_buttons_task(map, i, p_sync));
    suite.team = make_buttons_team(map);
  } else {
    for (int i = 0; i < 2; ++i)
      suite.tasks.push_back(make_rendezvous_task(map, i, p_sync));
    suite.team = make_rendezvous_team(map);
  }
  return suite;
}

std::vector<RewardMachine> handcrafted_machines(TaskKind kind) {
  std::vector<RewardMachine> rms;
  if (kind == TaskKind::ThreeButtons) {
    for (int i = 0; i < 3; ++i) rms.push_back(buttons_task_machine(i));
  } else {
    for (int i = 0; i < 2; ++i) rms.push_back(rendezvous_task_machine(i));
  }
  return rms;
}

EvalOutcome evaluate_team(TeamEnv& team, const std::vector<const RewardMachine*>& rms,
                          const std::vector<const QPolicy*>& policies,
                          int n_episodes, int horizon) {
  const int n = team.num_agents();
  double steps_sum = 0.0, reward_sum = 0.0;
  for (int ep = 0; ep < n_episodes; ++ep) {
    team.reset();
    std::vector<StateId> us(n);
    for (int i = 0; i < n; ++i) us[i] = rms[i]->initial();
    int steps = horizon;
    double reward = 0.0;
    std::vector<Action> joint(n);
    for (int t = 0; t < horizon; ++t) {
      for (int i = 0; i < n; ++i) {
        joint[i] = us[i] == rms[i]->final_state()
                       ? Action::Noop
                       : policies[i]->greedy_action(us[i], team.observation(i));
      }
      const TeamEnv::TeamStep ts = team.step(joint);
      for (int i = 0; i < n; ++i) {
        if (us[i] != rms[i]->final_state() && !ts.labels[i].empty())
          us[i] = rms[i]->step(us[i], ts.labels[i]).state;
      }
      if (ts.collective_goal) {
        steps = t + 1;
        reward = 1.0;
        break;
      }
    }
    steps_sum += steps;
    reward_sum += reward;
  }
  return {steps_sum / n_episodes, reward_sum / n_episodes};
}

TrainResult run_training(TaskSuite& suite, Mode mode, const Hyperparams& hp,
                         const InductionBudget& budget,
                         const std::vector<RewardMachine>* provided,
                         bool check_hygiene) {
  hp.validate();
  const int n = suite.num_agents();
  if (provided && static_cast<int>(provided->size()) != n)
    throw ConfigError("provided-machine count does not match agent count");

  TrainResult result;
  std::vector<AgentLearner> learners;
  learners.reserve(n);
  std::vector<Rng> rngs;
  for (int i = 0; i < n; ++i) {
    learners.emplace_back(*suite.tasks[i], mode, hp, budget,
                          provided ? std::optional<RewardMachine>((*provided)[i])
                                   : std::nullopt);
    learners.back().set_induction_log(&result.induction_log);
    learners.back().set_check_hygiene(check_hygiene);
    rngs.emplace_back(hp.seed * 0x9e3779b97f4a7c15ULL + 0x100 + i);
  }

  long long cum_steps = 0;
  for (int ep = 1; ep <= hp.num_episodes; ++ep) {
    const double eps = hp.epsilon_at(ep);
    for (auto& l : learners) l.begin_episode();
    bool all_done = false;
    for (int t = 0; !all_done && t < hp.horizon; ++t) {
      all_done = true;
      for (int i = 0; i < n; ++i) {
        if (!learners[i].done()) {
          learners[i].step(rngs[i], t, eps);
          ++cum_steps;
          all_done = all_done && learners[i].done();
        }
      }
    }

    if (ep % hp.eval_period == 0) {
      std::vector<const RewardMachine*> rms;
      std::vector<const QPolicy*> pols;
      for (const auto& l : learners) {
        rms.push_back(&l.rm());
        pols.push_back(&l.policy());
      }
      const EvalOutcome ev =
          evaluate_team(*suite.team, rms, pols, hp.eval_episodes, hp.horizon);
      EvalPoint pt;
      pt.episode = ep;
      pt.cum_env_steps = cum_steps;
      pt.steps_mean = ev.steps_mean;
      pt.reward_mean = ev.reward_mean;
      for (const auto& l : learners) {
        pt.rm_states.push_back(l.rm().num_states());
        pt.induction_calls += l.induction_calls();
        pt.induction_wall_s += l.induction_seconds();
      }
      result.metrics.points.push_back(std::move(pt));
    }
  }

  for (auto& l : learners) {
    result.final_rms.push_back(l.rm());
    result.final_policies.push_back(l.policy());
    result.final_examples.push_back(l.examples());
  }
  return result;
}

}  // namespace marm
