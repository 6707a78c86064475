#include "marm/cli/config.hpp"

#include <fstream>
#include <sstream>

#include "marm/core/error.hpp"

namespace marm {

void RunConfig::finalize() {
  if (!gamma_set)
    hp.gamma = task == TaskKind::Rendezvous ? 0.99 : 0.95;
  if (seeds.empty()) throw ConfigError("need at least one seed");
  hp.validate();
  if (budget.max_states < 2) throw ConfigError("max-states must be >= 2");
  if (budget.timeout_s <= 0) throw ConfigError("timeout-s must be positive");
}

std::string RunConfig::resolved_map_path() const {
  if (!map_path.empty()) return map_path;
  return std::string("data/maps/") + task_name(task) + "_7x7.map";
}

std::string RunConfig::resolved_rm_dir() const {
  if (!rm_dir.empty()) return rm_dir;
  return std::string("data/rms/") + task_name(task);
}

std::vector<uint64_t> parse_seeds(const std::string& text) {
  std::vector<uint64_t> out;
  if (text.find(',') == std::string::npos) {
    size_t pos = 0;
    unsigned long long n = std::stoull(text, &pos);
    if (pos != text.size()) throw ConfigError("bad seeds value: " + text);
    for (unsigned long long s = 0; s < n; ++s) out.push_back(s);
    if (out.empty()) throw ConfigError("seed count must be positive");
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    out.push_back(std::stoull(item, &pos));
    if (pos != item.size()) throw ConfigError("bad seed: " + item);
  }
  if (out.empty()) throw ConfigError("empty seed list");
  return out;
}

void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value) {
  try {
    if (key == "task") {
      auto t = task_from_name(value);
      if (!t) throw ConfigError("unknown task: " + value);
      cfg.task = *t;
    } else if (key == "mode") {
      auto m = mode_from_name(value);
      if (!m) throw ConfigError("unknown mode: " + value);
      cfg.mode = *m;
    } else if (key == "map") {
      cfg.map_path = value;
    } else if (key == "rm-dir" || key == "rm_dir") {
      cfg.rm_dir = value;
    } else if (key == "seeds") {
      cfg.seeds = parse_seeds(value);
    } else if (key == "episodes") {
      cfg.hp.num_episodes = std::stoi(value);
    } else if (key == "horizon") {
      cfg.hp.horizon = std::stoi(value);
    } else if (key == "alpha") {
      cfg.hp.alpha = std::stod(value);
    } else if (key == "gamma") {
      cfg.hp.gamma = std::stod(value);
      cfg.gamma_set = true;
    } else if (key == "epsilon") {
      cfg.hp.epsilon = std::stod(value);
    } else if (key == "p-sync" || key == "p_sync") {
      cfg.hp.p_sync = std::stod(value);
    } else if (key == "eval-period" || key == "eval_period") {
      cfg.hp.eval_period = std::stoi(value);
    } else if (key == "eval-episodes" || key == "eval_episodes") {
      cfg.hp.eval_episodes = std::stoi(value);
    } else if (key == "max-states" || key == "max_states") {
      cfg.budget.max_states = std::stoi(value);
    } else if (key == "timeout-s" || key == "timeout_s") {
      cfg.budget.timeout_s = std::stod(value);
    } else if (key == "out") {
      cfg.out_dir = value;
    } else {
      throw ConfigError("unknown config key: " + key);
    }
  } catch (const std::invalid_argument&) {
    throw ConfigError("bad value for " + key + ": " + value);
  } catch (const std::out_of_range&) {
    throw ConfigError("value out of range for " + key + ": " + value);
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    auto trim = [](std::string s) {
      const char* ws = " \t\r";
      s.erase(0, s.find_first_not_of(ws));
      auto last = s.find_last_not_of(ws);
      s.erase(last == std::string::npos ? 0 : last + 1);
      return s;
    };
    if (eq == std::string::npos) {
      if (!trim(line).empty())
        throw ParseError(lineno, "expected 'key = value'");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ParseError(lineno, "expected 'key = value'");
    apply_key_value(cfg, key, value);
  }
}

}  // namespace marm
