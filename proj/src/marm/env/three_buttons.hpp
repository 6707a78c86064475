#pragma once

#include <array>
#include <memory>

#include "marm/env/agent_task.hpp"

namespace marm {

// ThreeButtons: three agents open color-coded doors by pushing buttons.
// Agent 1 pushes the yellow button, agent 2 crosses the yellow door and
// pushes the green button, agents 2 and 3 push the red button together, and
// agent 1 crosses the red door to the goal.
//
// Local proposition sets:
//   P1 = {YB, RB, GOAL}
//   P2 = {YB, GB, A2_RB, A2_NOT_RB, RB}
//   P3 = {GB, A3_RB, A3_NOT_RB, RB}
// Pressing propositions (A2_RB, A3_RB) are emitted every step the agent
// stays on the red button; stepping off before synchronization emits the
// corresponding NOT proposition.

PropSpace buttons_global_props();
PropSpace buttons_agent_props(int agent);

// Handcrafted sub-task machine for one agent, over buttons_agent_props(i).
// Also defines the agent's termination predicate.
RewardMachine buttons_task_machine(int agent);

std::unique_ptr<AgentTask> make_buttons_task(const GridMap& map, int agent,
                                             double p_sync);
std::unique_ptr<TeamEnv> make_buttons_team(const GridMap& map);

}  // namespace marm
