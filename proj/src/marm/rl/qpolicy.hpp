#pragma once

#include <array>
#include <vector>

#include "marm/core/reward_machine.hpp"
#include "marm/env/agent_task.hpp"

namespace marm {

// One action-value table per RM state over the environment's observation
// space. Unvisited entries read as zero; the final state keeps an implicit
// all-zero table so bootstrapping through uA is well defined.
class QPolicy {
 public:
  QPolicy() = default;
  QPolicy(int num_rm_states, int num_observations)
      : num_obs_(num_observations),
        tables_(num_rm_states,
                std::vector<std::array<double, kNumActions>>(
                    num_observations, std::array<double, kNumActions>{})) {}

  // Fresh all-zero tables matching the (possibly relearned) machine.
  void reset(const RewardMachine& rm) { *this = QPolicy(rm.num_states(), num_obs_); }

  int num_rm_states() const { return static_cast<int>(tables_.size()); }
  int num_observations() const { return num_obs_; }

  double value(StateId u, int obs, int a) const { return tables_[u][obs][a]; }
  double max_value(StateId u, int obs) const;

  // Epsilon-greedy with uniform random tie-breaking among maximizers.
  Action select_action(StateId u, int obs, double epsilon, Rng& rng) const;
  // Deterministic greedy (first maximizer); used for evaluation.
  Action greedy_action(StateId u, int obs) const;

  void update(StateId u, int obs, Action a, double reward, int next_obs,
              StateId next_u, double alpha, double gamma);

  // Counterfactual sweep: applies the update for every non-final RM state
  // using the same experience tuple, the live state included.
  void update_all(const RewardMachine& rm, int obs, Action a, int next_obs,
                  const Label& label, double alpha, double gamma);

  bool operator==(const QPolicy& o) const {
    return num_obs_ == o.num_obs_ && tables_ == o.tables_;
  }

  // Debug dump of non-zero entries, one "rm_state obs action value" line
  // each; the format is not a stability contract.
  void dump(std::ostream& os) const;

 private:
  int num_obs_ = 0;
  std::vector<std::vector<std::array<double, kNumActions>>> tables_;
};

}  // namespace marm
