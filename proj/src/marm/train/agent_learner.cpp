#include "marm/train/agent_learner.hpp"

#include <chrono>

namespace marm {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Provided: return "provided";
    case Mode::Learn: return "learn";
    case Mode::Flat: return "flat";
  }
  return "?";
}

std::optional<Mode> mode_from_name(const std::string& name) {
  if (name == "provided") return Mode::Provided;
  if (name == "learn") return Mode::Learn;
  if (name == "flat") return Mode::Flat;
  return std::nullopt;
}

AgentLearner::AgentLearner(AgentTask& task, Mode mode, const Hyperparams& hp,
                           const InductionBudget& budget,
                           std::optional<RewardMachine> provided)
    : task_(task), mode_(mode), hp_(hp), budget_(budget) {
  if (mode_ == Mode::Provided) {
    rm_ = provided ? std::move(*provided) : task_.task_machine();
  } else {
    rm_ = RewardMachine::make(task_.props(), 2);
  }
  q_ = QPolicy(rm_.num_states(), task_.num_observations());
}

void AgentLearner::begin_episode() {
  task_.reset();
  episode_trace_ = Trace{};
  u_ = rm_.initial();
  done_ = false;
}

void AgentLearner::step(Rng& rng, int t, double epsilon) {
  if (done_) return;
  const int obs = task_.observation();
  const Action a = q_.select_action(u_, obs, epsilon, rng);
  const StepOutcome out = task_.step(a, rng);
  const int next_obs = task_.observation();
  episode_trace_.labels.push_back(out.label);

  if (mode_ == Mode::Flat) {
    // Two-state machine that reaches its final state exactly on task
    // completion: plain Q-learning over the environment state.
    const StateId next_u = out.goal_achieved ? rm_.final_state() : u_;
    q_.update(u_, obs, a, out.goal_achieved ? 1.0 : 0.0, next_obs, next_u,
              hp_.alpha, hp_.gamma);
    u_ = next_u;
  } else {
    q_.update_all(rm_, obs, a, next_obs, out.label, hp_.alpha, hp_.gamma);
    u_ = rm_.step(u_, out.label).state;
  }

  if (out.goal_achieved) {
    if (mode_ == Mode::Learn) {
      examples_.add_goal(episode_trace_);
      for (const Trace& p : proper_prefixes(episode_trace_))
        examples_.add_incomplete(p);
      relearn();
    }
    done_ = true;
  } else if (u_ == rm_.final_state()) {
    // Counterexample: the machine predicted completion but the task is not
    // done. Only possible against a learned (or mismatched) machine.
    if (mode_ == Mode::Learn) {
      examples_.add_incomplete(episode_trace_);
      relearn();
    }
    done_ = true;
  } else if (t + 1 >= hp_.horizon) {
    if (mode_ == Mode::Learn) examples_.add_incomplete(episode_trace_);
    done_ = true;
  }
}

bool AgentLearner::rm_consistent_with_examples() const {
  for (const auto& g : examples_.goals())
    if (!rm_.ends_in_final(g)) return false;
  for (const auto& i : examples_.incompletes())
    if (rm_.ends_in_final(i)) return false;
  return true;
}

void AgentLearner::relearn() {
  // A machine that is still consistent with the grown sets is kept; a full
  // search runs only once it is contradicted. Each search restarts from two
  // states: new goal traces widen the space of expressible machines, so the
  // minimal size can shrink as well as grow.
  if (!rm_consistent_with_examples()) {
    const auto t0 = std::chrono::steady_clock::now();
    LearnResult res = learn_minimal(task_.props(), examples_, 2, budget_);
    induction_seconds_ +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ++induction_calls_;
    if (log_)
      log_->push_back({task_.agent_index(), examples_, res.num_states});
    if (!(res.rm == rm_)) {
      rm_ = std::move(res.rm);
      q_.reset(rm_);
    }
  }
  if (check_hygiene_ && !rm_consistent_with_examples())
    throw std::logic_error("trace-set hygiene violated after relearn");
}

}  // namespace marm
