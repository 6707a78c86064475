#include <doctest.h>

#include <random>

#include "marm/core/error.hpp"
#include "marm/core/text_io.hpp"
#include "support.hpp"

using namespace marm;
using namespace marm::test;

TEST_CASE("step follows labeled transitions and rewards entry into the final state") {
  const RewardMachine rm = buttons_task_machine(0);  // u0-YB->u1-RB->u2-GOAL->uA
  const PropSpace& ps = rm.props();

  auto [u1, r1] = rm.step(0, label_of(ps, "YB"));
  CHECK(u1 == 1);
  CHECK(r1 == 0);

  auto [ua, r2] = rm.step(2, label_of(ps, "GOAL"));
  CHECK(ua == rm.final_state());
  CHECK(r2 == 1);

  // Empty label: implicit self-loop.
  auto [same, r3] = rm.step(1, Label{});
  CHECK(same == 1);
  CHECK(r3 == 0);

  // Unmatched proposition: also a self-loop.
  auto [same2, r4] = rm.step(1, label_of(ps, "YB"));
  CHECK(same2 == 1);
  CHECK(r4 == 0);

  CHECK_THROWS_AS((void)rm.step(rm.final_state(), Label{}), std::logic_error);
}

TEST_CASE("step raises AmbiguousLabel when two propositions match") {
  PropSpace ps({"a", "b"});
  RewardMachine rm = RewardMachine::make(ps, 3);
  rm.add_transition(0, 0, 1);
  rm.add_transition(0, 1, 2);
  Label both;
  both.add(0);
  both.add(1);
  CHECK_THROWS_AS((void)rm.step(0, both), AmbiguousLabel);
  // Only one matching proposition is fine even when the label has two.
  RewardMachine rm2 = RewardMachine::make(ps, 3);
  rm2.add_transition(0, 0, 1);
  CHECK(rm2.step(0, both).state == 1);
}

TEST_CASE("traverse runs the whole trace and halts permanently at the final state") {
  const RewardMachine a1 = buttons_task_machine(0);
  const PropSpace& p1 = a1.props();
  const Trace t1 = make_trace(p1, {"YB", "RB", "GOAL"}, TraceKind::Goal);
  CHECK(a1.traverse(t1) == std::vector<StateId>{0, 1, 2, 3});

  const RewardMachine a2 = buttons_task_machine(1);
  const PropSpace& p2 = a2.props();
  const Trace t2 = make_trace(
      p2, {"YB", "GB", "A2_RB", "A2_NOT_RB", "A2_RB", "RB"}, TraceKind::Goal);
  CHECK(a2.traverse(t2) == std::vector<StateId>{0, 1, 2, 3, 2, 3, 4});

  // No transitions defined: every label self-loops in the initial state.
  RewardMachine bare = RewardMachine::make(p1, 2);
  CHECK(bare.traverse(t1) == std::vector<StateId>{0, 0, 0, 0});

  // Labels after the final state leave the machine there.
  const Trace over = make_trace(p1, {"YB", "RB", "GOAL", "YB"}, TraceKind::Incomplete);
  auto seq = a1.traverse(over);
  CHECK(seq.size() == 5);
  CHECK(seq[3] == a1.final_state());
  CHECK(seq[4] == a1.final_state());
}

TEST_CASE("ends_in_final distinguishes complete from prefix traces") {
  const RewardMachine a1 = buttons_task_machine(0);
  const PropSpace& p1 = a1.props();
  CHECK(a1.ends_in_final(make_trace(p1, {"YB", "RB", "GOAL"})));
  CHECK_FALSE(a1.ends_in_final(make_trace(p1, {"YB"})));
}

TEST_CASE("the machine without the back edge accepts strictly more toggle traces") {
  const RewardMachine with_edge = buttons_task_machine(1);
  const RewardMachine without_edge = a2_machine_without_back_edge();
  const PropSpace& ps = with_edge.props();

  // Both accept the toggle trace that was actually observed: the back-edge
  // machine retraces u2<->u3, the other stalls in u3 until RB fires.
  const Trace observed = make_trace(
      ps, {"YB", "GB", "A2_RB", "A2_NOT_RB", "A2_RB", "RB"}, TraceKind::Goal);
  CHECK(with_edge.ends_in_final(observed));
  CHECK(without_edge.ends_in_final(observed));

  // They diverge when RB arrives right after the agent stops pressing.
  const Trace diverging =
      make_trace(ps, {"YB", "GB", "A2_RB", "A2_NOT_RB", "RB"}, TraceKind::Incomplete);
  CHECK_FALSE(with_edge.ends_in_final(diverging));
  CHECK(without_edge.ends_in_final(diverging));
}

TEST_CASE("is_consistent checks goal and incomplete trace sets") {
  const RewardMachine a1 = buttons_task_machine(0);
  const PropSpace& ps = a1.props();
  const Trace goal = make_trace(ps, {"", "YB", "RB", "GOAL"}, TraceKind::Goal);
  const std::vector<Trace> prefixes = proper_prefixes(goal);
  CHECK(prefixes.size() == 3);
  CHECK(a1.is_consistent({goal}, prefixes));

  RewardMachine bare = RewardMachine::make(ps, 2);
  CHECK(bare.is_consistent({}, prefixes));          // vacuous goal condition
  CHECK_FALSE(bare.is_consistent({goal}, {}));      // final state unreachable
}

TEST_CASE("isomorphic is invariant to state renaming and nothing else") {
  const RewardMachine a1 = buttons_task_machine(0);
  PropSpace ps = a1.props();

  RewardMachine renamed = RewardMachine::make_named(
      ps, {"start", "mid", "uA", "late"}, 0, 2);
  renamed.add_transition(0, *ps.find("YB"), 1);
  renamed.add_transition(1, *ps.find("RB"), 3);
  renamed.add_transition(3, *ps.find("GOAL"), 2);
  CHECK(isomorphic(a1, renamed));

  CHECK_FALSE(isomorphic(buttons_task_machine(1), a2_machine_without_back_edge()));
  CHECK_FALSE(isomorphic(a1, RewardMachine::make(ps, 3)));  // state-count mismatch
}

TEST_CASE("serialization round-trips and counts are stable") {
  const RewardMachine a1 = buttons_task_machine(0);
  PropSpace space = buttons_agent_props(0);
  CHECK(deserialize(serialize(a1), space) == a1);

  RewardMachine bare = RewardMachine::make(buttons_agent_props(0), 2);
  const std::string text = serialize(bare);
  CHECK(text.find("states 2") != std::string::npos);
  CHECK(text.find("trans") == std::string::npos);
  PropSpace s2 = buttons_agent_props(0);
  CHECK(deserialize(text, s2) == bare);
}

TEST_CASE("round-trip holds for randomly generated machines") {
  std::mt19937_64 rng(7);
  PropSpace ps({"p", "q", "r", "s"});
  for (int it = 0; it < 200; ++it) {
    const int n = 2 + static_cast<int>(rng() % 5);
    RewardMachine rm = RewardMachine::make(ps, n);
    std::vector<bool> mentioned(n, false);
    mentioned[rm.initial()] = mentioned[rm.final_state()] = true;
    for (StateId u = 0; u + 1 < n; ++u)
      for (PropId p = 0; p < ps.size(); ++p)
        if (rng() % 3 == 0) {
          const StateId to = static_cast<StateId>(rng() % n);
          rm.add_transition(u, p, to);
          mentioned[u] = mentioned[to] = true;
        }
    PropSpace space = ps;
    const RewardMachine back = deserialize(serialize(rm), space);
    // States that never appear in the text get synthesized names back, so
    // the round trip is exact up to renaming those; with every state
    // mentioned it is the identity.
    CHECK(isomorphic(back, rm));
    bool all_mentioned = true;
    for (bool m : mentioned) all_mentioned = all_mentioned && m;
    if (all_mentioned) CHECK(back == rm);
  }
}

TEST_CASE("random machines keep the determinism, absorbing-final and reward invariants") {
  std::mt19937_64 rng(11);
  PropSpace ps({"p", "q", "r"});
  for (int it = 0; it < 100; ++it) {
    const int n = 2 + static_cast<int>(rng() % 4);
    RewardMachine rm = RewardMachine::make(ps, n);
    for (StateId u = 0; u + 1 < n; ++u)
      for (PropId p = 0; p < ps.size(); ++p)
        if (rng() % 2 == 0) rm.add_transition(u, p, static_cast<StateId>(rng() % n));
    CHECK_THROWS(rm.add_transition(rm.final_state(), 0, 0));

    Trace t;
    for (int k = 0; k < 30; ++k) {
      Label l;
      if (rng() % 2) l.add(static_cast<PropId>(rng() % ps.size()));
      t.labels.push_back(l);
    }
    const auto seq = rm.traverse(t);
    bool seen_final = false;
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
      if (seq[i] == rm.final_state()) seen_final = true;
      if (seen_final) CHECK(seq[i + 1] == rm.final_state());
      if (seq[i] != rm.final_state()) {
        auto [next, reward] = rm.step(seq[i], t.labels[i]);
        CHECK(next == seq[i + 1]);
        CHECK(reward == (next == rm.final_state() ? 1 : 0));
        if (t.labels[i].empty()) CHECK(next == seq[i]);
      }
    }
  }
}

TEST_CASE("parser reports line numbers on malformed input") {
  PropSpace s;
  CHECK_THROWS_AS((void)deserialize("states 2\ninitial u0\nfinal u0\n", s), ParseError);
  try {
    PropSpace s2;
    (void)deserialize("states 4\ninitial u0\nfinal uA\nbogus line here\n", s2);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  try {
    PropSpace s3;
    (void)deserialize("states 2\ninitial u0\nfinal uA\ntrans u0 p u1\n", s3);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);  // u1 exceeds the declared state count
  }
}

TEST_CASE("dot export lists every state and transition") {
  const RewardMachine a3 = buttons_task_machine(2);
  const std::string dot = to_dot(a3);
  int nodes = 0, edges = 0;
  size_t pos = 0;
  while ((pos = dot.find("shape=", pos)) != std::string::npos) ++nodes, ++pos;
  pos = 0;
  while ((pos = dot.find("label=", pos)) != std::string::npos) ++edges, ++pos;
  CHECK(nodes == 4 + 1);  // 4 states plus the entry marker
  CHECK(edges == 4);      // includes the A3_NOT_RB back edge
  CHECK(dot.find("doublecircle") != std::string::npos);
}
