#include "marm/env/rendezvous.hpp"

#include <array>
#include <stdexcept>

namespace marm {

namespace {

Cell moved(const GridMap& map, const Cell& from, Action a) {
  int r = from.row, c = from.col;
  switch (a) {
    case Action::Up: --r; break;
    case Action::Down: ++r; break;
    case Action::Left: --c; break;
    case Action::Right: ++c; break;
    case Action::Noop: return from;
  }
  if (!map.in_bounds(r, c) || map.is_wall(r, c)) return from;
  return Cell{r, c};
}

void require_rendezvous_layout(const GridMap& map) {
  if (map.starts.size() != 2) throw ConfigError("Rendezvous needs exactly 2 agent starts");
  if (map.goals.size() != 2) throw ConfigError("Rendezvous needs exactly 2 goal cells");
  if (!map.rendezvous) throw ConfigError("Rendezvous map is missing the 'V' cell");
}

class RendezvousAgentTask final : public AgentTask {
 public:
  RendezvousAgentTask(const GridMap& map, int agent, double p_sync)
      : map_(map),
        agent_(agent),
        p_sync_(p_sync),
        props_(rendezvous_agent_props(agent)),
        machine_(rendezvous_task_machine(agent)) {
    require_rendezvous_layout(map_);
    if (agent < 0 || agent > 1) throw ConfigError("rendezvous agent index out of range");
    ri_ = *props_.find(agent == 0 ? "R1" : "R2");
    not_ri_ = *props_.find(agent == 0 ? "NOT_R1" : "NOT_R2");
    r_ = *props_.find("R");
    gi_ = *props_.find(agent == 0 ? "G1" : "G2");
    reset();
  }

  int agent_index() const override { return agent_; }
  const PropSpace& props() const override { return props_; }
  std::vector<PropId> shared_props() const override { return {r_}; }
  const RewardMachine& task_machine() const override { return machine_; }
  int num_observations() const override { return map_.num_cells(); }

  void reset() override {
    cell_ = map_.starts[agent_];
    prev_ = cell_;
    tm_ = machine_.initial();
  }

  int observation() const override { return map_.cell_index(cell_); }

  StepOutcome step(Action a, Rng& rng) override {
    prev_ = cell_;
    cell_ = moved(map_, cell_, a);

    StepOutcome out;
    const bool on_v = cell_ == *map_.rendezvous;
    if (on_v && coin(rng, p_sync_))
      out.label = Label{r_};
    else if (cell_ == map_.goals[agent_] && !(prev_ == map_.goals[agent_]))
      out.label = Label{gi_};
    else if (on_v)
      out.label = Label{ri_};
    else if (prev_ == *map_.rendezvous)
      out.label = Label{not_ri_};

    if (tm_ != machine_.final_state() && !out.label.empty())
      tm_ = machine_.step(tm_, out.label).state;
    out.goal_achieved = tm_ == machine_.final_state();
    return out;
  }

 private:
  const GridMap& map_;
  int agent_;
  double p_sync_;
  PropSpace props_;
  RewardMachine machine_;
  PropId ri_, not_ri_, r_, gi_;
  Cell cell_, prev_;
  StateId tm_ = 0;
};

class RendezvousTeam final : public TeamEnv {
 public:
  explicit RendezvousTeam(const GridMap& map)
      : map_(map), global_(rendezvous_global_props()) {
    require_rendezvous_layout(map_);
    for (int i = 0; i < 2; ++i) agent_props_[i] = rendezvous_agent_props(i);
    reset();
  }

  int num_agents() const override { return 2; }

  void reset() override {
    for (int i = 0; i < 2; ++i) {
      cells_[i] = prev_[i] = map_.starts[i];
      reached_[i] = false;
    }
    prev_both_on_v_ = false;
    rdv_done_ = false;
    last_global_ = {};
  }

  int observation(int agent) const override { return map_.cell_index(cells_[agent]); }

  TeamStep step(const std::vector<Action>& joint) override {
    if (joint.size() != 2) throw std::invalid_argument("need 2 actions");
    for (int i = 0; i < 2; ++i) {
      prev_[i] = cells_[i];
      cells_[i] = moved(map_, cells_[i], joint[i]);
    }
    const Cell v = *map_.rendezvous;
    const bool both_now = cells_[0] == v && cells_[1] == v;
    // Both agents must hold the rendezvous cell for a full step; the
    // confirmation repeats for as long as they keep holding it, mirroring
    // the per-step synchronization of individual training.
    const bool e_r = both_now && prev_both_on_v_;
    if (e_r) rdv_done_ = true;

    TeamStep out;
    out.labels.resize(2);
    last_global_ = {};
    for (int i = 0; i < 2; ++i) {
      const std::string ri = i == 0 ? "R1" : "R2";
      const std::string not_ri = i == 0 ? "NOT_R1" : "NOT_R2";
      const std::string gi = i == 0 ? "G1" : "G2";
      if (e_r) {
        out.labels[i] = Label{*agent_props_[i].find("R")};
      } else if (cells_[i] == map_.goals[i] && !(prev_[i] == map_.goals[i])) {
        out.labels[i] = Label{*agent_props_[i].find(gi)};
        last_global_.add(*global_.find(gi));
      } else if (cells_[i] == v) {
        out.labels[i] = Label{*agent_props_[i].find(ri)};
        last_global_.add(*global_.find(ri));
      } else if (prev_[i] == v) {
        out.labels[i] = Label{*agent_props_[i].find(not_ri)};
        last_global_.add(*global_.find(not_ri));
      }
      if (rdv_done_ && cells_[i] == map_.goals[i]) reached_[i] = true;
    }
    if (e_r) last_global_.add(*global_.find("R"));

    prev_both_on_v_ = both_now;
    out.collective_goal = reached_[0] && reached_[1];
    return out;
  }

  Label global_label() const override { return last_global_; }

 private:
  const GridMap& map_;
  PropSpace global_;
  std::array<PropSpace, 2> agent_props_;
  std::array<Cell, 2> cells_, prev_;
  std::array<bool, 2> reached_{false, false};
  bool prev_both_on_v_ = false;
  bool rdv_done_ = false;
  Label last_global_;
};

}  // namespace

PropSpace rendezvous_global_props() {
  return PropSpace({"R1", "NOT_R1", "R2", "NOT_R2", "R", "G1", "G2"});
}

PropSpace rendezvous_agent_props(int agent) {
  switch (agent) {
    case 0: return PropSpace({"R1", "NOT_R1", "R", "G1"});
    case 1: return PropSpace({"R2", "NOT_R2", "R", "G2"});
    default: throw ConfigError("rendezvous agent index out of range");
  }
}

RewardMachine rendezvous_task_machine(int agent) {
  PropSpace ps = rendezvous_agent_props(agent);
  auto id = [&](const std::string& n) { return *ps.find(n); };
  RewardMachine rm = RewardMachine::make(ps, 4);
  const std::string ri = agent == 0 ? "R1" : "R2";
  const std::string not_ri = agent == 0 ? "NOT_R1" : "NOT_R2";
  const std::string gi = agent == 0 ? "G1" : "G2";
  rm.add_transition(0, id(ri), 1);
  rm.add_transition(1, id(not_ri), 0);
  rm.add_transition(1, id("R"), 2);
  rm.add_transition(2, id(gi), 3);
  return rm;
}

std::unique_ptr<AgentTask> make_rendezvous_task(const GridMap& map, int agent,
                                                double p_sync) {
  return std::make_unique<RendezvousAgentTask>(map, agent, p_sync);
}

std::unique_ptr<TeamEnv> make_rendezvous_team(const GridMap& map) {
  return std::make_unique<RendezvousTeam>(map);
}

}  // namespace marm
