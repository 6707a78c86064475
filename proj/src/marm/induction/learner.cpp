#include "marm/induction/learner.hpp"

#include <algorithm>

#include "marm/core/error.hpp"

namespace marm {

namespace {

constexpr StateId kUnassigned = -2;
constexpr StateId kNoEdge = -1;

class Searcher {
 public:
  Searcher(const PropSpace& props, const ExampleSets& ex, int n,
           bool goal_edges_only, const Deadline& deadline)
      : num_props_(std::max(1, props.size())),
        n_(n),
        final_(n - 1),
        goal_edges_only_(goal_edges_only),
        deadline_(deadline) {
    for (const auto& g : ex.goals()) {
      traces_.push_back(&g);
      is_goal_.push_back(true);
    }
    for (const auto& i : ex.incompletes()) {
      traces_.push_back(&i);
      is_goal_.push_back(false);
    }
    delta_.assign(static_cast<size_t>(n_) * num_props_, kUnassigned);
  }

  // Exhausts the space and keeps a machine with the fewest transitions;
  // among equals the first one found wins, so results are deterministic.
  bool run() {
    walk(0, 0, 0);
    return !best_.empty();
  }

  const std::vector<StateId>& delta() const { return best_; }

 private:
  void tick() {
    if ((++nodes_ & 0xff) == 0 &&
        std::chrono::steady_clock::now() > deadline_)
      throw TimeoutExceeded("induction timed out");
  }

  // Called with a fully consistent assignment; false keeps the search going.
  bool accept() {
    if (best_.empty() || edges_ < best_edges_) {
      best_ = delta_;
      best_edges_ = edges_;
    }
    return false;
  }

  // Replays traces through the partial transition map, branching over
  // targets whenever an unassigned (state, prop) pair is hit. In the
  // preferred goal-edges-only tier, incomplete traces never create
  // transitions: they follow the map (unassigned pairs self-loop) and prune
  // machines they drive into the final state. Goal traces run first, so by
  // then the edge set is complete. Only branch points recurse; plain replay
  // iterates, so stack depth stays bounded by the assignment count.
  bool walk(size_t ti, size_t pos, StateId cur) {
    while (true) {
      if (ti == traces_.size()) return accept();
      const auto& tr = *traces_[ti];
      const bool goal = is_goal_[ti];
      if (cur == final_) {
        if (!goal) return false;  // incomplete trace reached the final state
        ++ti;                     // goal satisfied; the machine halts at uA
        pos = 0;
        cur = 0;
        continue;
      }
      if (pos == tr.size()) {
        if (goal) return false;  // goal trace failed to reach the final state
        ++ti;
        pos = 0;
        cur = 0;
        continue;
      }
      const PropId p = tr[pos];
      const StateId slot = delta_[static_cast<size_t>(cur) * num_props_ + p];
      if (slot != kUnassigned || (!goal && goal_edges_only_)) {
        cur = slot == kUnassigned || slot == kNoEdge ? cur : slot;
        ++pos;
        continue;
      }
      tick();
      return branch(ti, pos, cur, goal, p);
    }
  }

  bool branch(size_t ti, size_t pos, StateId cur, bool goal, PropId p) {
    // Candidate order shapes which consistent machine is found first:
    // goal-trace steps prefer to make progress (a fresh state first), while
    // incomplete-trace steps (full space only) prefer to stay put.
    StateId fresh = max_used_ + 1 <= n_ - 2 ? max_used_ + 1 : kUnassigned;
    std::vector<StateId> cands;
    cands.reserve(n_ + 1);
    if (goal) {
      if (fresh != kUnassigned) cands.push_back(fresh);
      for (StateId s = 0; s <= max_used_; ++s)
        if (s != cur) cands.push_back(s);
      cands.push_back(final_);
      cands.push_back(kNoEdge);
    } else {
      // An incomplete trace entering uA is an instant violation, so the
      // final state is never a candidate here.
      cands.push_back(kNoEdge);
      if (fresh != kUnassigned) cands.push_back(fresh);
      for (StateId s = 0; s <= max_used_; ++s)
        if (s != cur) cands.push_back(s);
    }
    StateId& slot = delta_[static_cast<size_t>(cur) * num_props_ + p];
    for (StateId c : cands) {
      const int edge_cost = c == kNoEdge ? 0 : 1;
      // Edge counts only grow along a branch; prune once the best found
      // machine cannot be beaten.
      if (!best_.empty() && edges_ + edge_cost >= best_edges_) continue;
      slot = c;
      edges_ += edge_cost;
      const StateId saved_max = max_used_;
      if (c > 0 && c < final_) max_used_ = std::max(max_used_, c);
      const StateId nxt = c == kNoEdge ? cur : c;
      if (walk(ti, pos + 1, nxt)) return true;
      max_used_ = saved_max;
      edges_ -= edge_cost;
      slot = kUnassigned;
    }
    return false;
  }

  int num_props_;
  int n_;
  StateId final_;
  bool goal_edges_only_;
  Deadline deadline_;
  std::vector<const ExampleSets::Key*> traces_;
  std::vector<bool> is_goal_;
  std::vector<StateId> delta_;
  std::vector<StateId> best_;
  int best_edges_ = 0;
  int edges_ = 0;
  StateId max_used_ = 0;
  uint64_t nodes_ = 0;
};

}  // namespace

std::optional<RewardMachine> learn_fixed(const PropSpace& props,
                                         const ExampleSets& ex, int n_states,
                                         bool goal_edges_only,
                                         const Deadline& deadline) {
  if (n_states < 2) throw std::invalid_argument("learn_fixed: need n_states >= 2");
  if (std::chrono::steady_clock::now() > deadline)
    throw TimeoutExceeded("induction timed out");
  Searcher s(props, ex, n_states, goal_edges_only, deadline);
  if (!s.run()) return std::nullopt;

  RewardMachine rm = RewardMachine::make(props, n_states);
  const int np = std::max(1, props.size());
  for (StateId u = 0; u + 1 < n_states; ++u) {
    for (PropId p = 0; p < props.size(); ++p) {
      StateId t = s.delta()[static_cast<size_t>(u) * np + p];
      if (t >= 0) rm.add_transition(u, p, t);
    }
  }
  // Soundness check on every call.
  for (const auto& g : ex.goals())
    if (!rm.ends_in_final(g)) throw std::logic_error("learner returned an inconsistent machine");
  for (const auto& i : ex.incompletes())
    if (rm.ends_in_final(i)) throw std::logic_error("learner returned an inconsistent machine");
  return rm;
}

LearnResult learn_minimal(const PropSpace& props, const ExampleSets& ex,
                          int start_states, const InductionBudget& budget) {
  const Deadline deadline = deadline_after(budget.timeout_s);
  // Preferred tier: every transition is exercised by some goal trace.
  for (int n = std::max(2, start_states); n <= budget.max_states; ++n) {
    auto rm = learn_fixed(props, ex, n, true, deadline);
    if (rm) return {std::move(*rm), n};
  }
  // Some example families need escape transitions that no goal trace
  // exercises (for instance a reset observed only on failed episodes); fall
  // back to the full hypothesis space, which always contains a machine
  // consistent with machine-generated termination.
  for (int n = std::max(2, start_states); n <= budget.max_states; ++n) {
    auto rm = learn_fixed(props, ex, n, false, deadline);
    if (rm) return {std::move(*rm), n};
  }
  throw BudgetExhausted("no consistent machine with at most " +
                        std::to_string(budget.max_states) + " states");
}

}  // namespace marm
