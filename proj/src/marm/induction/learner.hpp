#pragma once

#include <chrono>
#include <optional>

#include "marm/core/reward_machine.hpp"
#include "marm/induction/example_sets.hpp"

namespace marm {

struct InductionBudget {
  int max_states = 8;
  double timeout_s = 3600.0;
};

using Deadline = std::chrono::steady_clock::time_point;

inline Deadline deadline_after(double seconds) {
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
             std::chrono::duration<double>(seconds));
}

// Searches for a deterministic machine with exactly `n_states` states
// (initial u0, absorbing final uA) under which every goal trace ends in the
// final state and no incomplete trace ever reaches it. Trace-driven
// backtracking: (state, proposition) pairs are assigned on demand, fresh
// states are introduced in first-use order (canonical symmetry breaking),
// unassigned pairs self-loop. With `goal_edges_only`, transitions may exist
// only where a goal trace exercises them and incomplete traces act purely
// as pruning constraints. Returns nullopt when no such machine exists.
std::optional<RewardMachine> learn_fixed(const PropSpace& props,
                                         const ExampleSets& ex, int n_states,
                                         bool goal_edges_only,
                                         const Deadline& deadline);

struct LearnResult {
  RewardMachine rm;
  int num_states;
};

// Iterative deepening from `start_states` until satisfiable; the result is
// minimal among machines with at least `start_states` states, preferring the
// goal-edges-only space and falling back to the full space when that tier
// exhausts the state budget.
LearnResult learn_minimal(const PropSpace& props, const ExampleSets& ex,
                          int start_states, const InductionBudget& budget);

}  // namespace marm
