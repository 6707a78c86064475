#include "marm/induction/oracle.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace marm {

namespace {

constexpr int kUnassigned = -2;
constexpr int kNoEdge = -1;

struct Node {
  std::map<PropId, int> children;
  bool goal_end = false;
  bool incomplete_end = false;
};

struct Tree {
  std::vector<Node> nodes{Node{}};

  void insert(const ExampleSets::Key& k, bool goal) {
    int cur = 0;
    for (PropId p : k) {
      auto it = nodes[cur].children.find(p);
      if (it == nodes[cur].children.end()) {
        int idx = static_cast<int>(nodes.size());
        nodes[cur].children.emplace(p, idx);
        nodes.emplace_back();
        cur = idx;
      } else {
        cur = it->second;
      }
    }
    if (goal)
      nodes[cur].goal_end = true;
    else
      nodes[cur].incomplete_end = true;
  }
};

struct Step {
  int node;
  int parent;
  PropId prop;
};

// Exhaustive enumeration of canonical partial transition functions over a
// merged prefix tree. In goal-edges-only mode the tree holds goal traces
// alone and incomplete traces are checked as a filter over each complete
// assignment; in full mode the tree holds every trace and assignments may
// happen anywhere.
class TreeSearch {
 public:
  TreeSearch(const Tree& tree, const std::vector<const ExampleSets::Key*>& filter,
             int n, int num_props)
      : tree_(tree),
        filter_(filter),
        n_(n),
        final_(n - 1),
        num_props_(std::max(1, num_props)) {
    // Preorder walk; children in prop-id order so the enumeration is
    // canonical and the first-use symmetry breaking below is sound.
    std::vector<int> stack{0};
    std::vector<int> parent_of(tree.nodes.size(), -1);
    std::vector<PropId> prop_of(tree.nodes.size(), -1);
    order_.reserve(tree.nodes.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order_.push_back({v, parent_of[v], prop_of[v]});
      const auto& ch = tree_.nodes[v].children;
      for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
        parent_of[it->second] = v;
        prop_of[it->second] = it->first;
        stack.push_back(it->second);
      }
    }
    state_of_.assign(tree.nodes.size(), -1);
    delta_.assign(static_cast<size_t>(n_) * num_props_, kUnassigned);
  }

  bool run() { return place(0); }

 private:
  bool violates(int node, int state) const {
    const Node& nd = tree_.nodes[node];
    if (nd.goal_end && state != final_) return true;
    if (nd.incomplete_end && state == final_) return true;
    return false;
  }

  // Traces outside the tree follow the finished map: unassigned pairs
  // self-loop, and reaching the final state anywhere rejects the machine.
  bool filter_ok() const {
    for (const auto* trace : filter_) {
      int cur = 0;
      for (PropId p : *trace) {
        const int slot = delta_[static_cast<size_t>(cur) * num_props_ + p];
        if (slot >= 0) cur = slot;
        if (cur == final_) return false;
      }
    }
    return true;
  }

  // Forced placements iterate; only genuine assignment choices recurse, so
  // stack depth is bounded by the number of (state, prop) pairs.
  bool place(size_t k) {
    while (true) {
      if (k == order_.size()) return filter_ok();
      const Step& st = order_[k];
      if (st.parent < 0) {  // root is the initial state
        if (violates(st.node, 0)) return false;
        state_of_[st.node] = 0;
        ++k;
        continue;
      }
      const int ps = state_of_[st.parent];
      if (ps == final_) {  // absorbing: descendants stay in the final state
        if (violates(st.node, final_)) return false;
        state_of_[st.node] = final_;
        ++k;
        continue;
      }
      const int slot = delta_[static_cast<size_t>(ps) * num_props_ + st.prop];
      if (slot != kUnassigned) {
        const int s = slot == kNoEdge ? ps : slot;
        if (violates(st.node, s)) return false;
        state_of_[st.node] = s;
        ++k;
        continue;
      }
      return branch(k, st, ps);
    }
  }

  bool branch(size_t k, const Step& st, int ps) {
    // Enumerate every assignment: a fresh state (canonical first-use order),
    // every used state, the final state, or no edge at all.
    std::vector<int> cands;
    if (max_used_ + 1 <= n_ - 2) cands.push_back(max_used_ + 1);
    for (int s = 0; s <= max_used_; ++s)
      if (s != ps) cands.push_back(s);
    cands.push_back(final_);
    cands.push_back(kNoEdge);
    int& slot = delta_[static_cast<size_t>(ps) * num_props_ + st.prop];
    for (int c : cands) {
      const int s = c == kNoEdge ? ps : c;
      if (violates(st.node, s)) continue;
      slot = c;
      const int saved = max_used_;
      if (c > 0 && c < final_) max_used_ = std::max(max_used_, c);
      state_of_[st.node] = s;
      if (place(k + 1)) return true;
      max_used_ = saved;
      slot = kUnassigned;
    }
    return false;
  }

  const Tree& tree_;
  const std::vector<const ExampleSets::Key*>& filter_;
  int n_;
  int final_;
  int num_props_;
  std::vector<Step> order_;
  std::vector<int> state_of_;
  std::vector<int> delta_;
  int max_used_ = 0;
};

}  // namespace

std::optional<int> oracle_minimal(const PropSpace& props, const ExampleSets& ex,
                                  int n_max) {
  // Preferred tier: transitions only where goal traces exercise them.
  Tree goal_tree;
  for (const auto& g : ex.goals()) goal_tree.insert(g, true);
  std::vector<const ExampleSets::Key*> incompletes;
  for (const auto& i : ex.incompletes()) incompletes.push_back(&i);
  for (int n = 2; n <= n_max; ++n) {
    TreeSearch search(goal_tree, incompletes, n, props.size());
    if (search.run()) return n;
  }
  // Full space: incomplete traces may exercise transitions too.
  Tree full_tree;
  for (const auto& g : ex.goals()) full_tree.insert(g, true);
  for (const auto& i : ex.incompletes()) full_tree.insert(i, false);
  const std::vector<const ExampleSets::Key*> empty_filter;
  for (int n = 2; n <= n_max; ++n) {
    TreeSearch search(full_tree, empty_filter, n, props.size());
    if (search.run()) return n;
  }
  return std::nullopt;
}

}  // namespace marm
