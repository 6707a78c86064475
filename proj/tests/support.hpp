#pragma once

#include <string>
#include <vector>

#include "marm/core/reward_machine.hpp"
#include "marm/env/three_buttons.hpp"

#ifndef MARM_SOURCE_DIR
#define MARM_SOURCE_DIR "."
#endif

namespace marm::test {

inline std::string data_path(const std::string& rel) {
  return std::string(MARM_SOURCE_DIR) + "/" + rel;
}

inline Label label_of(const PropSpace& ps, const std::string& name) {
  if (name.empty()) return Label{};
  return Label{*ps.find(name)};
}

inline Trace make_trace(const PropSpace& ps, const std::vector<std::string>& names,
                        TraceKind kind = TraceKind::Incomplete) {
  Trace t;
  t.kind = kind;
  for (const auto& n : names) t.labels.push_back(label_of(ps, n));
  return t;
}

// The learned machine for agent 2 reported by the reference experiments:
// the u3 -> u2 back edge on A2_NOT_RB is missing.
inline RewardMachine a2_machine_without_back_edge() {
  PropSpace ps = buttons_agent_props(1);
  RewardMachine rm = RewardMachine::make(ps, 5);
  rm.add_transition(0, *ps.find("YB"), 1);
  rm.add_transition(1, *ps.find("GB"), 2);
  rm.add_transition(2, *ps.find("A2_RB"), 3);
  rm.add_transition(3, *ps.find("RB"), 4);
  return rm;
}

}  // namespace marm::test
