#pragma once

#include <string>
#include <vector>

#include "marm/induction/learner.hpp"
#include "marm/train/session.hpp"

namespace marm {

// Experiment configuration. Defaults follow the benchmark setup: 5 seeds,
// 7x7 maps, 10000 episodes, horizon 500, p_sync 0.3, 1h induction timeout.
// The discount defaults to 0.95 for ThreeButtons and 0.99 for Rendezvous
// when not set explicitly.
struct RunConfig {
  TaskKind task = TaskKind::ThreeButtons;
  Mode mode = Mode::Learn;
  std::string map_path;  // empty: data/maps/<task>_7x7.map
  std::string rm_dir;    // empty: data/rms/<task> (provided mode only)
  std::vector<uint64_t> seeds = {0, 1, 2, 3, 4};
  Hyperparams hp;
  bool gamma_set = false;
  InductionBudget budget;
  std::string out_dir = "out";

  void finalize();  // fills derived defaults, validates
  std::string resolved_map_path() const;
  std::string resolved_rm_dir() const;
};

// `key = value` lines, '#' comments. Keys match the long CLI flags.
void apply_config_file(RunConfig& cfg, const std::string& path);
void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value);

// "5" means seeds 0..4; "2,7,9" is an explicit list.
std::vector<uint64_t> parse_seeds(const std::string& text);

}  // namespace marm
