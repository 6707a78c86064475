#include "marm/core/reward_machine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "marm/core/error.hpp"

namespace marm {

RewardMachine RewardMachine::make(PropSpace props, int num_states) {
  if (num_states < 2)
    throw std::invalid_argument("reward machine needs at least initial and final state");
  std::vector<std::string> names;
  names.reserve(num_states);
  for (int i = 0; i + 1 < num_states; ++i) names.push_back("u" + std::to_string(i));
  names.push_back("uA");
  return make_named(std::move(props), std::move(names), 0, num_states - 1);
}

RewardMachine RewardMachine::make_named(PropSpace props,
                                        std::vector<std::string> state_names,
                                        StateId initial, StateId final_state) {
  if (state_names.size() < 2)
    throw std::invalid_argument("reward machine needs at least two states");
  if (initial == final_state)
    throw std::invalid_argument("initial and final state must differ");
  RewardMachine rm;
  rm.props_ = std::move(props);
  rm.state_names_ = std::move(state_names);
  rm.initial_ = initial;
  rm.final_ = final_state;
  rm.delta_.assign(rm.state_names_.size() * std::max(1, rm.props_.size()),
                   kNoTransition);
  return rm;
}

void RewardMachine::add_transition(StateId from, PropId prop, StateId to) {
  if (from == final_)
    throw std::invalid_argument("final state admits no outgoing transitions");
  if (from < 0 || from >= num_states() || to < 0 || to >= num_states())
    throw std::invalid_argument("transition endpoint out of range");
  if (prop < 0 || prop >= props_.size())
    throw std::invalid_argument("unknown proposition id");
  StateId& slot = delta_[static_cast<size_t>(from) * props_.size() + prop];
  if (slot != kNoTransition && slot != to)
    throw std::invalid_argument("nondeterministic transition for (" +
                                state_names_[from] + ", " + props_.name(prop) + ")");
  slot = to;
}

int RewardMachine::num_transitions() const {
  return static_cast<int>(
      std::count_if(delta_.begin(), delta_.end(),
                    [](StateId t) { return t != kNoTransition; }));
}

RewardMachine::StepResult RewardMachine::step(StateId u, const Label& l) const {
  if (u == final_) throw std::logic_error("step from final state");
  StateId to = kNoTransition;
  PropId matched = -1;
  for (PropId p : l.props) {
    if (p < 0 || p >= props_.size()) continue;  // proposition outside this machine's set
    StateId t = target(u, p);
    if (t == kNoTransition) continue;
    if (to != kNoTransition)
      throw AmbiguousLabel("label matches both " + props_.name(matched) + " and " +
                           props_.name(p) + " from " + state_names_[u]);
    to = t;
    matched = p;
  }
  if (to == kNoTransition) return {u, 0};  // implicit self-loop
  return {to, to == final_ ? 1 : 0};
}

std::vector<StateId> RewardMachine::traverse(const Trace& t) const {
  std::vector<StateId> seq;
  seq.reserve(t.labels.size() + 1);
  StateId u = initial_;
  seq.push_back(u);
  for (const Label& l : t.labels) {
    if (u != final_) u = step(u, l).state;
    seq.push_back(u);
  }
  return seq;
}

std::vector<StateId> RewardMachine::traverse(const std::vector<PropId>& s) const {
  std::vector<StateId> seq;
  seq.reserve(s.size() + 1);
  StateId u = initial_;
  seq.push_back(u);
  for (PropId p : s) {
    if (u != final_) u = step(u, Label{p}).state;
    seq.push_back(u);
  }
  return seq;
}

bool RewardMachine::ends_in_final(const Trace& t) const {
  return traverse(t).back() == final_;
}

bool RewardMachine::ends_in_final(const std::vector<PropId>& s) const {
  return traverse(s).back() == final_;
}

bool RewardMachine::is_consistent(const std::vector<Trace>& goals,
                                  const std::vector<Trace>& incompletes) const {
  for (const Trace& g : goals)
    if (!ends_in_final(g)) return false;
  for (const Trace& i : incompletes)
    if (ends_in_final(i)) return false;
  return true;
}

// Structural equality by state name; internal index order (which depends on
// construction order) is irrelevant.
bool RewardMachine::operator==(const RewardMachine& o) const {
  if (!props_.same_names(o.props_) || num_states() != o.num_states()) return false;
  if (state_names_[initial_] != o.state_names_[o.initial_]) return false;
  if (state_names_[final_] != o.state_names_[o.final_]) return false;
  std::map<std::string, StateId> theirs;
  for (StateId s = 0; s < o.num_states(); ++s) theirs[o.state_names_[s]] = s;
  if (theirs.size() != state_names_.size()) return false;
  for (StateId s = 0; s < num_states(); ++s) {
    auto it = theirs.find(state_names_[s]);
    if (it == theirs.end()) return false;
    if (s == final_) continue;
    for (PropId p = 0; p < props_.size(); ++p) {
      const StateId ta = target(s, p);
      const StateId tb = o.target(it->second, p);
      if ((ta == kNoTransition) != (tb == kNoTransition)) return false;
      if (ta != kNoTransition && state_names_[ta] != o.state_names_[tb]) return false;
    }
  }
  return true;
}

bool isomorphic(const RewardMachine& a, const RewardMachine& b) {
  if (!a.props().same_names(b.props())) return false;
  if (a.num_states() != b.num_states()) return false;
  const int n = a.num_states();
  const int np = a.props().size();

  // Candidate permutation: initial -> initial, final -> final, remaining
  // states permuted. Machines here stay tiny, brute force is fine.
  std::vector<StateId> restA, restB;
  for (StateId s = 0; s < n; ++s) {
    if (s != a.initial() && s != a.final_state()) restA.push_back(s);
    if (s != b.initial() && s != b.final_state()) restB.push_back(s);
  }
  std::vector<int> perm(restB.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<StateId> map(n, -1);
    map[a.initial()] = b.initial();
    map[a.final_state()] = b.final_state();
    for (size_t i = 0; i < restA.size(); ++i) map[restA[i]] = restB[perm[i]];
    bool ok = true;
    for (StateId s = 0; s < n && ok; ++s) {
      if (s == a.final_state()) continue;
      for (PropId p = 0; p < np && ok; ++p) {
        StateId ta = a.target(s, p);
        StateId tb = b.target(map[s], p);
        if (ta == kNoTransition) {
          ok = tb == kNoTransition;
        } else {
          ok = tb != kNoTransition && map[ta] == tb;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace marm
