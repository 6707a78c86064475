#pragma once

#include <string>
#include <vector>

#include "marm/core/props.hpp"
#include "marm/core/trace.hpp"

namespace marm {

using StateId = int;
inline constexpr StateId kNoTransition = -1;

// Deterministic finite-state reward automaton. Transitions are labeled by
// single propositions; a label with no matching proposition self-loops.
// The final state is absorbing (no outgoing transitions) and transitioning
// into it yields reward 1; every other transition yields 0.
class RewardMachine {
 public:
  RewardMachine() = default;
  // States named u0..u<n-2>, final named uA, initial = u0.
  static RewardMachine make(PropSpace props, int num_states);
  static RewardMachine make_named(PropSpace props, std::vector<std::string> state_names,
                                  StateId initial, StateId final_state);

  int num_states() const { return static_cast<int>(state_names_.size()); }
  StateId initial() const { return initial_; }
  StateId final_state() const { return final_; }
  const PropSpace& props() const { return props_; }
  const std::string& state_name(StateId s) const { return state_names_.at(s); }
  const std::vector<std::string>& state_names() const { return state_names_; }

  // Throws if from == final (absorbing) or the pair is already mapped.
  void add_transition(StateId from, PropId prop, StateId to);

  StateId target(StateId from, PropId prop) const {
    return delta_[static_cast<size_t>(from) * props_.size() + prop];
  }
  int num_transitions() const;

  struct StepResult {
    StateId state;
    int reward;  // 1 iff this step entered the final state
  };

  // Caller must stop at the final state; stepping from it is an error.
  // More than one matching proposition in the label raises AmbiguousLabel.
  StepResult step(StateId u, const Label& l) const;

  // States visited while consuming the trace, length |t|+1, starting at the
  // initial state. Halts permanently at the final state once reached.
  std::vector<StateId> traverse(const Trace& t) const;
  std::vector<StateId> traverse(const std::vector<PropId>& strippedTrace) const;

  bool ends_in_final(const Trace& t) const;
  bool ends_in_final(const std::vector<PropId>& strippedTrace) const;

  // True iff every goal trace ends in the final state and no incomplete
  // trace does.
  bool is_consistent(const std::vector<Trace>& goals,
                     const std::vector<Trace>& incompletes) const;

  // Structural equality up to nothing: same names, same transitions.
  bool operator==(const RewardMachine& o) const;

 private:
  PropSpace props_;
  std::vector<std::string> state_names_;
  StateId initial_ = 0;
  StateId final_ = 0;
  std::vector<StateId> delta_;  // [state * num_props + prop] -> target or -1
};

// True iff a bijection on states preserves initial, final and all
// transitions. Both machines must carry the same proposition names.
bool isomorphic(const RewardMachine& a, const RewardMachine& b);

}  // namespace marm
