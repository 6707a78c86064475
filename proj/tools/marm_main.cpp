#include <iostream>

#include <CLI11.hpp>

#include "marm/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"marm: multi-agent reward machine learning experiments"};
  app.require_subcommand(1);

  // run: values land in locals so the config file can be applied first and
  // explicitly-passed flags override it afterwards.
  std::string config_path, task_s, mode_s, seeds_s, map_s, rm_dir_s, out_s;
  int episodes = 0, horizon = 0, eval_period = 0, eval_episodes = 0, max_states = 0;
  double alpha = 0, gamma = 0, epsilon = 0, p_sync = 0, timeout_s = 0;

  auto* run = app.add_subcommand("run", "train agents and evaluate the team");
  run->add_option("--config", config_path, "key = value config file");
  auto* o_task = run->add_option("--task", task_s, "three_buttons | rendezvous");
  auto* o_mode = run->add_option("--mode", mode_s, "provided | learn | flat");
  auto* o_map = run->add_option("--map", map_s, "ASCII map file");
  auto* o_rmdir = run->add_option("--rm-dir", rm_dir_s, "directory with agent<i>.rm (provided mode)");
  auto* o_seeds = run->add_option("--seeds", seeds_s, "seed count (\"5\" -> 0..4) or comma list");
  auto* o_epis = run->add_option("--episodes", episodes, "training episodes per agent");
  auto* o_hor = run->add_option("--horizon", horizon, "steps per episode");
  auto* o_alpha = run->add_option("--alpha", alpha, "learning rate");
  auto* o_gamma = run->add_option("--gamma", gamma, "discount factor");
  auto* o_eps = run->add_option("--epsilon", epsilon, "initial exploration rate");
  auto* o_psync = run->add_option("--p-sync", p_sync, "synchronization probability");
  auto* o_evalp = run->add_option("--eval-period", eval_period, "episodes between evaluations");
  auto* o_evale = run->add_option("--eval-episodes", eval_episodes, "greedy episodes per evaluation");
  auto* o_maxst = run->add_option("--max-states", max_states, "induction state cap");
  auto* o_tmo = run->add_option("--timeout-s", timeout_s, "induction timeout, seconds");
  auto* o_out = run->add_option("--out", out_s, "output directory");

  // inspect
  std::string rm_file, dot_out;
  auto* inspect = app.add_subcommand("inspect", "summarize a reward machine file");
  inspect->add_option("rm_file", rm_file, "reward machine text file")->required();
  inspect->add_option("--dot", dot_out, "write Graphviz output here");

  // oracle
  std::string trace_file;
  int n_max = 5;
  auto* oracle = app.add_subcommand("oracle", "minimal consistent state count for a trace file");
  oracle->add_option("trace_file", trace_file, "GOAL/INC trace file")->required();
  oracle->add_option("--max-states", n_max, "exhaustive search cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      marm::RunConfig cfg;
      if (!config_path.empty()) marm::apply_config_file(cfg, config_path);
      auto set = [&](CLI::Option* o, const char* key, const std::string& v) {
        if (o->count() > 0) marm::apply_key_value(cfg, key, v);
      };
      set(o_task, "task", task_s);
      set(o_mode, "mode", mode_s);
      set(o_map, "map", map_s);
      set(o_rmdir, "rm-dir", rm_dir_s);
      set(o_seeds, "seeds", seeds_s);
      set(o_epis, "episodes", std::to_string(episodes));
      set(o_hor, "horizon", std::to_string(horizon));
      set(o_alpha, "alpha", std::to_string(alpha));
      set(o_gamma, "gamma", std::to_string(gamma));
      set(o_eps, "epsilon", std::to_string(epsilon));
      set(o_psync, "p-sync", std::to_string(p_sync));
      set(o_evalp, "eval-period", std::to_string(eval_period));
      set(o_evale, "eval-episodes", std::to_string(eval_episodes));
      set(o_maxst, "max-states", std::to_string(max_states));
      set(o_tmo, "timeout-s", std::to_string(timeout_s));
      set(o_out, "out", out_s);
      cfg.finalize();
      return marm::cmd_run(cfg);
    }
    if (inspect->parsed()) return marm::cmd_inspect(rm_file, dot_out);
    if (oracle->parsed()) return marm::cmd_oracle(trace_file, n_max);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
