#pragma once

#include <memory>

#include "marm/env/agent_task.hpp"

namespace marm {

// Rendezvous: two agents must occupy the rendezvous cell simultaneously for
// at least one timestep (proposition R), then each must reach its own goal
// cell. Local proposition sets: Pi = {Ri, NOT_Ri, R, Gi}. Ri is emitted every
// step the agent stays on the rendezvous cell before R fires; leaving it
// beforehand emits NOT_Ri; Gi fires on stepping onto the agent's goal cell.

PropSpace rendezvous_global_props();
PropSpace rendezvous_agent_props(int agent);
RewardMachine rendezvous_task_machine(int agent);

std::unique_ptr<AgentTask> make_rendezvous_task(const GridMap& map, int agent,
                                                double p_sync);
std::unique_ptr<TeamEnv> make_rendezvous_team(const GridMap& map);

}  // namespace marm
