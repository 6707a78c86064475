#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "marm/core/props.hpp"

namespace marm {

// A set of propositions observed in one step. Per-agent labeling functions
// emit at most one proposition per step; team-level labels may carry more.
struct Label {
  std::vector<PropId> props;

  Label() = default;
  Label(std::initializer_list<PropId> ps) : props(ps) { normalize(); }
  explicit Label(PropId p) : props{p} {}

  bool empty() const { return props.empty(); }
  void add(PropId p) {
    props.push_back(p);
    normalize();
  }
  bool contains(PropId p) const {
    return std::find(props.begin(), props.end(), p) != props.end();
  }
  void normalize() {
    std::sort(props.begin(), props.end());
    props.erase(std::unique(props.begin(), props.end()), props.end());
  }
  bool operator==(const Label& o) const { return props == o.props; }
};

enum class TraceKind { Goal, Incomplete };

// A finite sequence of labels. Goal traces end at the step where the agent's
// termination predicate fired.
struct Trace {
  std::vector<Label> labels;
  TraceKind kind = TraceKind::Incomplete;

  int length() const { return static_cast<int>(labels.size()); }
  bool operator==(const Trace& o) const {
    return kind == o.kind && labels == o.labels;
  }
};

// Empty labels traverse as self-loops on every machine, so a trace and its
// empty-label-stripped form are interchangeable for consistency checks.
// Requires at most one proposition per label.
std::vector<PropId> stripped(const Trace& t);

// The n-1 proper non-empty prefixes (lengths 1..n-1), tagged incomplete.
std::vector<Trace> proper_prefixes(const Trace& goal);

}  // namespace marm
