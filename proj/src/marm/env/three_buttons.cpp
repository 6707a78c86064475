#include "marm/env/three_buttons.hpp"

#include <stdexcept>

namespace marm {

namespace {

Cell moved(const GridMap& map, const Cell& from, Action a,
           const std::array<bool, 3>& doors_open) {
  int r = from.row, c = from.col;
  switch (a) {
    case Action::Up: --r; break;
    case Action::Down: ++r; break;
    case Action::Left: --c; break;
    case Action::Right: ++c; break;
    case Action::Noop: return from;
  }
  if (!map.in_bounds(r, c) || map.is_wall(r, c)) return from;
  if (auto d = map.door_at(r, c)) {
    int idx = *d == 'y' ? 0 : *d == 'g' ? 1 : 2;
    if (!doors_open[idx]) return from;
  }
  return Cell{r, c};
}

void require_buttons_layout(const GridMap& map) {
  if (map.starts.size() != 3)
    throw ConfigError("ThreeButtons needs exactly 3 agent starts");
  for (char b : {'Y', 'G', 'R'})
    if (!map.buttons.count(b))
      throw ConfigError(std::string("ThreeButtons map is missing button '") + b + "'");
  if (map.goals.size() != 1) throw ConfigError("ThreeButtons needs exactly one goal");
}

class ButtonsAgentTask final : public AgentTask {
 public:
  ButtonsAgentTask(const GridMap& map, int agent, double p_sync)
      : map_(map),
        agent_(agent),
        p_sync_(p_sync),
        props_(buttons_agent_props(agent)),
        machine_(buttons_task_machine(agent)) {
    require_buttons_layout(map_);
    if (agent < 0 || agent > 2) throw ConfigError("buttons agent index out of range");
    auto id = [&](const char* n) {
      auto v = props_.find(n);
      return v ? *v : PropId{-1};
    };
    yb_ = id("YB");
    gb_ = id("GB");
    rb_ = id("RB");
    press_ = agent == 1 ? id("A2_RB") : agent == 2 ? id("A3_RB") : PropId{-1};
    not_press_ = agent == 1 ? id("A2_NOT_RB") : agent == 2 ? id("A3_NOT_RB") : PropId{-1};
    goal_ = id("GOAL");
    reset();
  }

  int agent_index() const override { return agent_; }
  const PropSpace& props() const override { return props_; }
  std::vector<PropId> shared_props() const override {
    std::vector<PropId> s;
    if (yb_ >= 0) s.push_back(yb_);
    if (gb_ >= 0) s.push_back(gb_);
    if (rb_ >= 0) s.push_back(rb_);
    return s;
  }
  const RewardMachine& task_machine() const override { return machine_; }

  // The observed state is the agent's cell plus the door/button flags it can
  // see; without the flags, episodes where events arrived in an unexpected
  // order alias against normal ones and poison the tables.
  int num_observations() const override {
    return map_.num_cells() * (agent_ == 2 ? 2 : 4);
  }

  void reset() override {
    cell_ = map_.starts[agent_];
    prev_ = cell_;
    yellow_ = false;
    green_ = false;
    red_door_ = false;
    tm_ = machine_.initial();
  }

  int observation() const override {
    const int cell = map_.cell_index(cell_);
    switch (agent_) {
      case 0: return cell + map_.num_cells() * ((yellow_ ? 1 : 0) + 2 * (red_door_ ? 1 : 0));
      case 1: return cell + map_.num_cells() * ((yellow_ ? 1 : 0) + 2 * (green_ ? 1 : 0));
      default: return cell + map_.num_cells() * (green_ ? 1 : 0);
    }
  }

  StepOutcome step(Action a, Rng& rng) override {
    prev_ = cell_;
    cell_ = moved(map_, cell_, a, doors_open());

    StepOutcome out;
    switch (agent_) {
      case 0: out.label = label_agent1(rng); break;
      case 1: out.label = label_agent2(rng); break;
      case 2: out.label = label_agent3(rng); break;
    }
    if (tm_ != machine_.final_state() && !out.label.empty())
      tm_ = machine_.step(tm_, out.label).state;
    out.goal_achieved = tm_ == machine_.final_state();
    return out;
  }

 private:
  std::array<bool, 3> doors_open() const {
    switch (agent_) {
      case 0: return {yellow_, false, red_door_};
      case 1: return {yellow_, green_, false};
      default: return {false, green_, false};
    }
  }

  bool on(const Cell& c, char button) const { return c == map_.buttons.at(button); }

  // A1 pushes YB itself; RB arrives from the teammates (opens the red door);
  // GOAL fires on stepping onto the goal cell.
  Label label_agent1(Rng& rng) {
    if (!yellow_ && on(cell_, 'Y')) {
      yellow_ = true;
      return Label{yb_};
    }
    if (!red_door_ && coin(rng, p_sync_)) {
      red_door_ = true;
      return Label{rb_};
    }
    if (cell_ == map_.goals[0] && !(prev_ == map_.goals[0])) return Label{goal_};
    return {};
  }

  // A2 waits for YB (opens the yellow door), pushes GB itself, then presses
  // the red button until the teammate confirmation RB arrives.
  Label label_agent2(Rng& rng) {
    const bool on_red = on(cell_, 'R');
    if (on_red && coin(rng, p_sync_)) return Label{rb_};
    if (!green_ && on(cell_, 'G')) {
      green_ = true;
      return Label{gb_};
    }
    if (!yellow_ && coin(rng, p_sync_)) {
      yellow_ = true;
      return Label{yb_};
    }
    if (on_red) return Label{press_};
    if (on(prev_, 'R')) return Label{not_press_};
    return {};
  }

  // A3 waits for GB (opens the green door), then presses the red button.
  Label label_agent3(Rng& rng) {
    const bool on_red = on(cell_, 'R');
    if (on_red && coin(rng, p_sync_)) return Label{rb_};
    if (!green_ && coin(rng, p_sync_)) {
      green_ = true;
      return Label{gb_};
    }
    if (on_red) return Label{press_};
    if (on(prev_, 'R')) return Label{not_press_};
    return {};
  }

  const GridMap& map_;
  int agent_;
  double p_sync_;
  PropSpace props_;
  RewardMachine machine_;
  PropId yb_ = -1, gb_ = -1, rb_ = -1, press_ = -1, not_press_ = -1, goal_ = -1;

  Cell cell_, prev_;
  bool yellow_ = false, green_ = false, red_door_ = false;
  StateId tm_ = 0;
};

class ButtonsTeam final : public TeamEnv {
 public:
  explicit ButtonsTeam(const GridMap& map)
      : map_(map), global_(buttons_global_props()) {
    require_buttons_layout(map_);
    for (int i = 0; i < 3; ++i) agent_props_[i] = buttons_agent_props(i);
    reset();
  }

  int num_agents() const override { return 3; }

  void reset() override {
    for (int i = 0; i < 3; ++i) cells_[i] = prev_[i] = map_.starts[i];
    yellow_ = green_ = red_ = false;
    last_global_ = {};
  }

  int observation(int agent) const override {
    const int cell = map_.cell_index(cells_[agent]);
    switch (agent) {
      case 0: return cell + map_.num_cells() * ((yellow_ ? 1 : 0) + 2 * (red_ ? 1 : 0));
      case 1: return cell + map_.num_cells() * ((yellow_ ? 1 : 0) + 2 * (green_ ? 1 : 0));
      default: return cell + map_.num_cells() * (green_ ? 1 : 0);
    }
  }

  TeamStep step(const std::vector<Action>& joint) override {
    if (joint.size() != 3) throw std::invalid_argument("need 3 actions");
    const std::array<bool, 3> doors{yellow_, green_, red_};
    for (int i = 0; i < 3; ++i) {
      prev_[i] = cells_[i];
      cells_[i] = moved(map_, cells_[i], joint[i], doors);
    }
    const bool e_yellow = !yellow_ && cells_[0] == map_.buttons.at('Y');
    const bool e_green = !green_ && cells_[1] == map_.buttons.at('G');
    const bool on_red2 = cells_[1] == map_.buttons.at('R');
    const bool on_red3 = cells_[2] == map_.buttons.at('R');
    const bool e_red = !red_ && on_red2 && on_red3;
    const bool was_red = red_;
    if (e_yellow) yellow_ = true;
    if (e_green) green_ = true;
    if (e_red) red_ = true;

    TeamStep out;
    out.labels.resize(3);
    auto emit = [&](int agent, const char* name) {
      out.labels[agent] = Label{*agent_props_[agent].find(name)};
    };
    // Agent 1
    if (e_red)
      emit(0, "RB");
    else if (e_yellow)
      emit(0, "YB");
    else if (cells_[0] == map_.goals[0] && !(prev_[0] == map_.goals[0]))
      emit(0, "GOAL");
    // Agent 2
    if (e_red)
      emit(1, "RB");
    else if (e_yellow)
      emit(1, "YB");
    else if (e_green)
      emit(1, "GB");
    else if (!was_red && on_red2)
      emit(1, "A2_RB");
    else if (!was_red && prev_[1] == map_.buttons.at('R') && !on_red2)
      emit(1, "A2_NOT_RB");
    // Agent 3
    if (e_red)
      emit(2, "RB");
    else if (e_green)
      emit(2, "GB");
    else if (!was_red && on_red3)
      emit(2, "A3_RB");
    else if (!was_red && prev_[2] == map_.buttons.at('R') && !on_red3)
      emit(2, "A3_NOT_RB");

    // Global labeling function, assembled from the events themselves.
    last_global_ = {};
    auto g = [&](const char* name) { last_global_.add(*global_.find(name)); };
    if (e_yellow) g("YB");
    if (e_green) g("GB");
    if (e_red) g("RB");
    if (!e_red && !was_red && on_red2) g("A2_RB");
    if (!e_red && !was_red && prev_[1] == map_.buttons.at('R') && !on_red2) g("A2_NOT_RB");
    if (!e_red && !was_red && on_red3) g("A3_RB");
    if (!e_red && !was_red && prev_[2] == map_.buttons.at('R') && !on_red3) g("A3_NOT_RB");
    if (cells_[0] == map_.goals[0] && !(prev_[0] == map_.goals[0]) && !e_red && !e_yellow)
      g("GOAL");

    out.collective_goal = cells_[0] == map_.goals[0];
    return out;
  }

  Label global_label() const override { return last_global_; }

 private:
  const GridMap& map_;
  PropSpace global_;
  std::array<PropSpace, 3> agent_props_;
  std::array<Cell, 3> cells_, prev_;
  bool yellow_ = false, green_ = false, red_ = false;
  Label last_global_;
};

}  // namespace

PropSpace buttons_global_props() {
  return PropSpace({"YB", "GB", "RB", "A2_RB", "A2_NOT_RB", "A3_RB", "A3_NOT_RB", "GOAL"});
}

PropSpace buttons_agent_props(int agent) {
  switch (agent) {
    case 0: return PropSpace({"YB", "RB", "GOAL"});
    case 1: return PropSpace({"YB", "GB", "A2_RB", "A2_NOT_RB", "RB"});
    case 2: return PropSpace({"GB", "A3_RB", "A3_NOT_RB", "RB"});
    default: throw ConfigError("buttons agent index out of range");
  }
}

RewardMachine buttons_task_machine(int agent) {
  PropSpace ps = buttons_agent_props(agent);
  auto id = [&](const char* n) { return *ps.find(n); };
  switch (agent) {
    case 0: {
      RewardMachine rm = RewardMachine::make(ps, 4);
      rm.add_transition(0, id("YB"), 1);
      rm.add_transition(1, id("RB"), 2);
      rm.add_transition(2, id("GOAL"), 3);
      return rm;
    }
    case 1: {
      RewardMachine rm = RewardMachine::make(ps, 5);
      rm.add_transition(0, id("YB"), 1);
      rm.add_transition(1, id("GB"), 2);
      rm.add_transition(2, id("A2_RB"), 3);
      rm.add_transition(3, id("A2_NOT_RB"), 2);
      rm.add_transition(3, id("RB"), 4);
      return rm;
    }
    case 2: {
      RewardMachine rm = RewardMachine::make(ps, 4);
      rm.add_transition(0, id("GB"), 1);
      rm.add_transition(1, id("A3_RB"), 2);
      rm.add_transition(2, id("A3_NOT_RB"), 1);
      rm.add_transition(2, id("RB"), 3);
      return rm;
    }
    default:
      throw ConfigError("buttons agent index out of range");
  }
}

std::unique_ptr<AgentTask> make_buttons_task(const GridMap& map, int agent,
                                             double p_sync) {
  return std::make_unique<ButtonsAgentTask>(map, agent, p_sync);
}

std::unique_ptr<TeamEnv> make_buttons_team(const GridMap& map) {
  return std::make_unique<ButtonsTeam>(map);
}

}  // namespace marm
