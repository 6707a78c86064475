#pragma once

#include <string>

#include "marm/core/reward_machine.hpp"

namespace marm {

// Text format, one item per line, '#' starts a comment:
//   states <n>
//   initial <name>
//   final <name>
//   trans <from> <prop> <to>
// State indices are assigned in first-mention order (initial, final, then
// transition endpoints); names round-trip exactly for machines whose states
// all appear in the file.
std::string serialize(const RewardMachine& rm);

// Interns proposition names into `space`; the machine shares its ids.
RewardMachine deserialize(const std::string& text, PropSpace& space);
RewardMachine deserialize_file(const std::string& path, PropSpace& space);

// Graphviz export: one node per state (final doubled), one edge per
// proposition-labeled transition.
std::string to_dot(const RewardMachine& rm, const std::string& graph_name = "rm");

}  // namespace marm
