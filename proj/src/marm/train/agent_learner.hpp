#pragma once

#include <optional>
#include <vector>

#include "marm/env/agent_task.hpp"
#include "marm/induction/example_sets.hpp"
#include "marm/induction/learner.hpp"
#include "marm/rl/hyperparams.hpp"
#include "marm/rl/qpolicy.hpp"

namespace marm {

enum class Mode { Provided, Learn, Flat };

const char* mode_name(Mode m);
std::optional<Mode> mode_from_name(const std::string& name);

// Snapshot of one machine-search invocation, kept so the minimality of every
// learned machine can be re-checked against the exhaustive oracle.
struct InductionRecord {
  int agent = 0;
  ExampleSets examples;
  int result_states = 0;
};

// One agent's interleaved RL + RM-learning state. In `Learn` mode the RM
// starts as two unconnected states and is relearned whenever the example
// sets contradict it; relearning resets the Q-tables. `Provided` trains
// against a fixed machine. `Flat` keeps the two-state machine and jumps to
// the final state exactly when the task's goal is achieved, which reduces to
// ordinary Q-learning over the environment state.
class AgentLearner {
 public:
  AgentLearner(AgentTask& task, Mode mode, const Hyperparams& hp,
               const InductionBudget& budget,
               std::optional<RewardMachine> provided = std::nullopt);

  void begin_episode();
  // One tick of TrainAgent; `t` is the 0-based step index within the episode.
  void step(Rng& rng, int t, double epsilon);

  bool done() const { return done_; }
  const RewardMachine& rm() const { return rm_; }
  const QPolicy& policy() const { return q_; }
  const ExampleSets& examples() const { return examples_; }
  const Trace& episode_trace() const { return episode_trace_; }
  StateId rm_state() const { return u_; }

  long long induction_calls() const { return induction_calls_; }
  double induction_seconds() const { return induction_seconds_; }
  void set_induction_log(std::vector<InductionRecord>* log) { log_ = log; }
  void set_check_hygiene(bool on) { check_hygiene_ = on; }

 private:
  void relearn();
  bool rm_consistent_with_examples() const;

  AgentTask& task_;
  Mode mode_;
  Hyperparams hp_;
  InductionBudget budget_;
  RewardMachine rm_;
  QPolicy q_;
  ExampleSets examples_;

  Trace episode_trace_;
  StateId u_ = 0;
  bool done_ = true;

  long long induction_calls_ = 0;
  double induction_seconds_ = 0.0;
  std::vector<InductionRecord>* log_ = nullptr;
  bool check_hygiene_ = false;
};

}  // namespace marm
