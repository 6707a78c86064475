#pragma once

#include <set>
#include <string>
#include <vector>

#include "marm/core/props.hpp"
#include "marm/core/trace.hpp"

namespace marm {

// Per-agent example traces driving induction: goal traces and incomplete
// traces. Traces are stored stripped of empty labels (empty labels self-loop
// on every machine, so consistency is unchanged) and deduplicated. A trace
// may not appear in both sets.
class ExampleSets {
 public:
  using Key = std::vector<PropId>;

  // Return true if the set changed.
  bool add_goal(const Trace& t) { return add_goal(stripped(t)); }
  bool add_goal(Key k);
  bool add_incomplete(const Trace& t) { return add_incomplete(stripped(t)); }
  bool add_incomplete(Key k);

  const std::set<Key>& goals() const { return goals_; }
  const std::set<Key>& incompletes() const { return incompletes_; }
  size_t num_goals() const { return goals_.size(); }
  size_t num_incompletes() const { return incompletes_.size(); }
  bool empty() const { return goals_.empty() && incompletes_.empty(); }

 private:
  std::set<Key> goals_;
  std::set<Key> incompletes_;
};

// One trace per line: "GOAL : {p} {q} {} ..." or "INC : ...". Proposition
// names are interned into `space`.
ExampleSets parse_trace_file(const std::string& text, PropSpace& space);
std::string format_trace_line(const ExampleSets::Key& k, bool goal,
                              const PropSpace& space);

}  // namespace marm
