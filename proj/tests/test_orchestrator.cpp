#include <doctest.h>

#include "marm/env/rendezvous.hpp"
#include "marm/train/session.hpp"
#include "support.hpp"

using namespace marm;
using namespace marm::test;

namespace {

// Deterministic stand-in environment: emits a scripted label sequence per
// episode regardless of the chosen actions; termination follows the given
// task machine.
class ScriptTask final : public AgentTask {
 public:
  ScriptTask(PropSpace ps, RewardMachine tm, std::vector<std::vector<Label>> episodes)
      : ps_(std::move(ps)), tm_(std::move(tm)), episodes_(std::move(episodes)) {}

  int agent_index() const override { return 0; }
  const PropSpace& props() const override { return ps_; }
  std::vector<PropId> shared_props() const override { return {}; }
  const RewardMachine& task_machine() const override { return tm_; }
  int num_observations() const override { return 1; }
  void reset() override {
    episode_ = (episode_ + 1) % static_cast<int>(episodes_.size());
    cursor_ = 0;
    u_ = tm_.initial();
  }
  int observation() const override { return 0; }
  StepOutcome step(Action, Rng&) override {
    StepOutcome out;
    const auto& script = episodes_[episode_];
    if (cursor_ < script.size()) out.label = script[cursor_];
    ++cursor_;
    if (u_ != tm_.final_state() && !out.label.empty())
      u_ = tm_.step(u_, out.label).state;
    out.goal_achieved = u_ == tm_.final_state();
    return out;
  }

 private:
  PropSpace ps_;
  RewardMachine tm_;
  std::vector<std::vector<Label>> episodes_;
  int episode_ = -1;
  size_t cursor_ = 0;
  StateId u_ = 0;
};

std::vector<Label> script_of(const PropSpace& ps, const std::vector<std::string>& names) {
  std::vector<Label> out;
  for (const auto& n : names) out.push_back(label_of(ps, n));
  return out;
}

}  // namespace

TEST_CASE("prefix generation matches the worked example exactly") {
  PropSpace ps = buttons_agent_props(2);
  const Trace goal = make_trace(
      ps, {"", "GB", "A3_RB", "A3_NOT_RB", "A3_RB", "RB"}, TraceKind::Goal);
  const std::vector<Trace> prefixes = proper_prefixes(goal);
  REQUIRE(prefixes.size() == 5);
  CHECK(prefixes[0] == make_trace(ps, {""}));
  CHECK(prefixes[1] == make_trace(ps, {"", "GB"}));
  CHECK(prefixes[2] == make_trace(ps, {"", "GB", "A3_RB"}));
  CHECK(prefixes[3] == make_trace(ps, {"", "GB", "A3_RB", "A3_NOT_RB"}));
  CHECK(prefixes[4] == make_trace(ps, {"", "GB", "A3_RB", "A3_NOT_RB", "A3_RB"}));
  for (const Trace& p : prefixes) CHECK(p.kind == TraceKind::Incomplete);
}

TEST_CASE("prefix cardinality is length minus one") {
  PropSpace ps = buttons_agent_props(0);
  CHECK(proper_prefixes(make_trace(ps, {"YB"}, TraceKind::Goal)).empty());
  CHECK(proper_prefixes(make_trace(ps, {"YB", "RB", "GOAL"}, TraceKind::Goal)).size() == 2);
}

TEST_CASE("each episode ending updates the example sets correctly") {
  PropSpace ps = buttons_agent_props(2);
  const RewardMachine tm = buttons_task_machine(2);
  ScriptTask task(ps, tm,
                  {// episode 1: a goal trace
                   script_of(ps, {"", "GB", "A3_RB", "RB"}),
                   // episode 2: a counterexample against the first learned
                   // machine (RB without completing the sub-task)
                   script_of(ps, {"", "RB", "", ""}),
                   // episode 3: horizon timeout with a fresh label pattern
                   script_of(ps, {"", "A3_NOT_RB", "", ""})});
  Hyperparams hp;
  hp.horizon = 4;
  hp.num_episodes = 3;
  AgentLearner learner(task, Mode::Learn, hp, InductionBudget{});
  Rng rng(53);

  // Case (a): goal achieved -> goal trace recorded, prefixes to the
  // incomplete set, machine relearned.
  learner.begin_episode();
  for (int t = 0; t < hp.horizon && !learner.done(); ++t) learner.step(rng, t, 0.0);
  CHECK(learner.done());
  CHECK(learner.examples().num_goals() == 1);
  CHECK(learner.examples().num_incompletes() == 3);
  CHECK(learner.induction_calls() == 1);
  // The minimal machine for this evidence jumps straight to uA on RB.
  CHECK(learner.rm().num_states() == 2);

  // Case (b): the learned machine reaches uA but the task is not done ->
  // the trace is a counterexample and triggers a relearn.
  learner.begin_episode();
  for (int t = 0; t < hp.horizon && !learner.done(); ++t) learner.step(rng, t, 0.0);
  CHECK(learner.done());
  CHECK(learner.examples().num_goals() == 1);
  CHECK(learner.examples().num_incompletes() == 4);
  CHECK(learner.induction_calls() == 2);
  std::vector<PropId> rb_only{*ps.find("RB")};
  CHECK_FALSE(learner.rm().ends_in_final(rb_only));

  // Case (c): horizon reached -> the trace joins the incomplete set without
  // a relearn.
  learner.begin_episode();
  for (int t = 0; t < hp.horizon && !learner.done(); ++t) learner.step(rng, t, 0.0);
  CHECK(learner.done());
  CHECK(learner.examples().num_incompletes() == 5);
  CHECK(learner.induction_calls() == 2);
}

TEST_CASE("against a two-state unconnected machine the agent idles in u0") {
  PropSpace ps = buttons_agent_props(0);
  ScriptTask task(ps, buttons_task_machine(0), {script_of(ps, {"", "YB", "", ""})});
  Hyperparams hp;
  hp.horizon = 4;
  AgentLearner learner(task, Mode::Learn, hp, InductionBudget{});
  Rng rng(59);
  learner.begin_episode();
  for (int t = 0; t < hp.horizon && !learner.done(); ++t) {
    learner.step(rng, t, 0.0);
    CHECK(learner.rm_state() == learner.rm().initial());
  }
  CHECK(learner.done());  // case (c)
}

TEST_CASE("flat mode reproduces plain Q-learning step for step") {
  const GridMap map = GridMap::parse_file(data_path("data/maps/rendezvous_7x7.map"));
  Hyperparams hp;
  hp.num_episodes = 150;
  hp.horizon = 80;
  hp.gamma = 0.99;

  auto task_a = make_rendezvous_task(map, 0, 0.3);
  AgentLearner flat(*task_a, Mode::Flat, hp, InductionBudget{});
  Rng rng_a(61);
  for (int ep = 1; ep <= hp.num_episodes; ++ep) {
    flat.begin_episode();
    for (int t = 0; t < hp.horizon && !flat.done(); ++t)
      flat.step(rng_a, t, hp.epsilon_at(ep));
  }

  // Hand-rolled single-table Q-learning over the same environment, seeds
  // and exploration schedule; reward 1 exactly on task completion.
  auto task_b = make_rendezvous_task(map, 0, 0.3);
  QPolicy q(2, task_b->num_observations());
  Rng rng_b(61);
  for (int ep = 1; ep <= hp.num_episodes; ++ep) {
    task_b->reset();
    for (int t = 0; t < hp.horizon; ++t) {
      const int obs = task_b->observation();
      const Action a = q.select_action(0, obs, hp.epsilon_at(ep), rng_b);
      const StepOutcome out = task_b->step(a, rng_b);
      const int next_obs = task_b->observation();
      q.update(0, obs, a, out.goal_achieved ? 1.0 : 0.0, next_obs,
               out.goal_achieved ? 1 : 0, hp.alpha, hp.gamma);
      if (out.goal_achieved) break;
    }
  }
  CHECK(flat.policy() == q);
}

TEST_CASE("zero episodes produce empty metrics") {
  const GridMap map = GridMap::parse_file(data_path("data/maps/three_buttons_7x7.map"));
  TaskSuite suite = make_suite(TaskKind::ThreeButtons, map, 0.3);
  Hyperparams hp;
  hp.num_episodes = 0;
  const TrainResult res = run_training(suite, Mode::Learn, hp, InductionBudget{});
  CHECK(res.metrics.points.empty());
  CHECK(res.induction_log.empty());
}

TEST_CASE("with p_sync 0 the dependent agents never record a goal trace") {
  const GridMap map = GridMap::parse_file(data_path("data/maps/three_buttons_7x7.map"));
  TaskSuite suite = make_suite(TaskKind::ThreeButtons, map, 0.0);
  Hyperparams hp;
  hp.num_episodes = 25;
  hp.horizon = 120;
  hp.eval_period = 25;
  const TrainResult res = run_training(suite, Mode::Learn, hp, InductionBudget{});
  CHECK(res.final_examples[1].num_goals() == 0);
  CHECK(res.final_examples[2].num_goals() == 0);
  // Every episode ended by horizon, so incompletes accumulated instead.
  CHECK(res.final_examples[1].num_incompletes() > 0);
}

TEST_CASE("trace-set hygiene holds after every relearn and at the end") {
  const GridMap map = GridMap::parse_file(data_path("data/maps/three_buttons_7x7.map"));
  TaskSuite suite = make_suite(TaskKind::ThreeButtons, map, 0.3);
  Hyperparams hp;
  hp.num_episodes = 400;
  hp.eval_period = 100;
  // check_hygiene revalidates the sets after every induction call.
  const TrainResult res =
      run_training(suite, Mode::Learn, hp, InductionBudget{}, nullptr, true);
  for (int i = 0; i < 3; ++i) {
    const RewardMachine& rm = res.final_rms[i];
    for (const auto& g : res.final_examples[i].goals()) CHECK(rm.ends_in_final(g));
    for (const auto& in : res.final_examples[i].incompletes())
      CHECK_FALSE(rm.ends_in_final(in));
  }
}

TEST_CASE("untrained teams evaluate to zero reward at the full horizon") {
  const GridMap map = GridMap::parse_file(data_path("data/maps/three_buttons_7x7.map"));
  TaskSuite suite = make_suite(TaskKind::ThreeButtons, map, 0.3);
  std::vector<RewardMachine> rms = handcrafted_machines(TaskKind::ThreeButtons);
  std::vector<QPolicy> qs;
  std::vector<const RewardMachine*> rm_ptrs;
  std::vector<const QPolicy*> q_ptrs;
  for (int i = 0; i < 3; ++i) qs.emplace_back(rms[i].num_states(), suite.tasks[i]->num_observations());
  for (int i = 0; i < 3; ++i) {
    rm_ptrs.push_back(&rms[i]);
    q_ptrs.push_back(&qs[i]);
  }
  const EvalOutcome ev = evaluate_team(*suite.team, rm_ptrs, q_ptrs, 5, 200);
  CHECK(ev.reward_mean == 0.0);
  CHECK(ev.steps_mean == 200.0);
}

TEST_CASE("provided machines that disagree with the task cut episodes short") {
  // A mismatched machine reaching uA early behaves like a counterexample
  // but must not trigger induction outside learn mode.
  PropSpace ps = buttons_agent_props(2);
  RewardMachine eager = RewardMachine::make(ps, 2);
  eager.add_transition(0, *ps.find("GB"), 1);
  ScriptTask task(ps, buttons_task_machine(2), {script_of(ps, {"", "GB", "A3_RB", "RB"})});
  Hyperparams hp;
  hp.horizon = 4;
  AgentLearner learner(task, Mode::Provided, hp, InductionBudget{}, eager);
  Rng rng(67);
  learner.begin_episode();
  int steps = 0;
  for (int t = 0; t < hp.horizon && !learner.done(); ++t, ++steps) learner.step(rng, t, 0.0);
  CHECK(steps == 2);  // stopped when the mismatched machine hit uA
  CHECK(learner.induction_calls() == 0);
  CHECK(learner.examples().empty());
}
