#include "marm/cli/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "marm/cli/stats.hpp"
#include "marm/core/text_io.hpp"
#include "marm/env/rendezvous.hpp"
#include "marm/env/three_buttons.hpp"
#include "marm/induction/oracle.hpp"

namespace marm {

namespace {

std::string fmt(double v, const char* spec = "%.6f") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::vector<RewardMachine> load_provided(const RunConfig& cfg, int n_agents) {
  std::vector<RewardMachine> rms;
  for (int i = 0; i < n_agents; ++i) {
    const std::string path =
        cfg.resolved_rm_dir() + "/agent" + std::to_string(i + 1) + ".rm";
    // Intern into the matching agent task's proposition space so ids line up.
    PropSpace space = cfg.task == TaskKind::ThreeButtons
                          ? buttons_agent_props(i)
                          : rendezvous_agent_props(i);
    rms.push_back(deserialize_file(path, space));
  }
  return rms;
}

}  // namespace

int cmd_run(const RunConfig& cfg) {
  namespace fs = std::filesystem;
  const GridMap map = GridMap::parse_file(cfg.resolved_map_path());
  const int n_agents = cfg.task == TaskKind::ThreeButtons ? 3 : 2;

  std::vector<RewardMachine> provided;
  if (cfg.mode == Mode::Provided) provided = load_provided(cfg, n_agents);

  fs::create_directories(cfg.out_dir);
  const std::string stem =
      std::string(task_name(cfg.task)) + "_" + mode_name(cfg.mode);

  // episode -> per-seed metric values, for the aggregate file
  std::map<int, std::vector<double>> steps_by_ep, reward_by_ep;

  for (uint64_t seed : cfg.seeds) {
    TaskSuite suite = make_suite(cfg.task, map, cfg.hp.p_sync);
    Hyperparams hp = cfg.hp;
    hp.seed = seed;
    const TrainResult res =
        run_training(suite, cfg.mode, hp, cfg.budget,
                     cfg.mode == Mode::Provided ? &provided : nullptr);

    const std::string seed_tag = stem + "_seed" + std::to_string(seed);
    std::ofstream csv(cfg.out_dir + "/" + seed_tag + ".csv");
    csv << "seed,episode,eval_steps_mean,eval_reward_mean";
    for (int i = 1; i <= n_agents; ++i) csv << ",rm_states_agent_" << i;
    csv << ",induction_calls,induction_wall_s,cum_env_steps\n";
    for (const EvalPoint& pt : res.metrics.points) {
      csv << seed << "," << pt.episode << "," << fmt(pt.steps_mean) << ","
          << fmt(pt.reward_mean);
      for (int s : pt.rm_states) csv << "," << s;
      csv << "," << pt.induction_calls << "," << fmt(pt.induction_wall_s, "%.3f")
          << "," << pt.cum_env_steps << "\n";
      steps_by_ep[pt.episode].push_back(pt.steps_mean);
      reward_by_ep[pt.episode].push_back(pt.reward_mean);
    }

    for (int i = 0; i < n_agents; ++i) {
      std::ofstream rmf(cfg.out_dir + "/" + seed_tag + "_agent" +
                        std::to_string(i + 1) + ".rm");
      rmf << serialize(res.final_rms[i]);
    }
    std::cout << seed_tag << ": " << res.metrics.points.size()
              << " evaluation points, final reward "
              << (res.metrics.points.empty()
                      ? std::string("n/a")
                      : fmt(res.metrics.points.back().reward_mean, "%.2f"))
              << "\n";
  }

  std::ofstream agg(cfg.out_dir + "/" + stem + "_aggregate.csv");
  agg << "episode,steps_mean,steps_ci95,reward_mean,reward_ci95\n";
  for (const auto& [ep, steps] : steps_by_ep) {
    const MeanCi s = mean_ci95(steps);
    const MeanCi r = mean_ci95(reward_by_ep[ep]);
    agg << ep << "," << fmt(s.mean) << "," << fmt(s.ci95_half) << ","
        << fmt(r.mean) << "," << fmt(r.ci95_half) << "\n";
  }
  return 0;
}

int cmd_inspect(const std::string& rm_file, const std::string& dot_out) {
  PropSpace space;
  const RewardMachine rm = deserialize_file(rm_file, space);
  std::cout << rm.num_states() << " states, " << rm.num_transitions()
            << " transitions\n";
  std::cout << "initial " << rm.state_name(rm.initial()) << ", final "
            << rm.state_name(rm.final_state()) << "\n";
  for (StateId s = 0; s < rm.num_states(); ++s) {
    if (s == rm.final_state()) continue;
    for (PropId p = 0; p < rm.props().size(); ++p) {
      StateId t = rm.target(s, p);
      if (t == kNoTransition) continue;
      std::cout << "  " << rm.state_name(s) << " --" << rm.props().name(p)
                << "--> " << rm.state_name(t) << "\n";
    }
  }
  if (!dot_out.empty()) {
    std::ofstream out(dot_out);
    out << to_dot(rm);
    std::cout << "dot written to " << dot_out << "\n";
  }
  return 0;
}

int cmd_oracle(const std::string& trace_file, int n_max) {
  std::ifstream in(trace_file);
  if (!in) throw ConfigError("cannot open trace file: " + trace_file);
  std::ostringstream ss;
  ss << in.rdbuf();
  PropSpace space;
  const ExampleSets ex = parse_trace_file(ss.str(), space);
  const auto n = oracle_minimal(space, ex, n_max);
  if (n)
    std::cout << *n << "\n";
  else
    std::cout << "NONE\n";
  return 0;
}

}  // namespace marm
