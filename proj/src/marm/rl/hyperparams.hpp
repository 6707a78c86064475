#pragma once

#include <cstdint>
#include <stdexcept>

namespace marm {

struct Hyperparams {
  double alpha = 0.1;          // learning rate, (0, 1]
  double gamma = 0.95;         // discount, [0, 1)
  double epsilon = 0.1;        // initial exploration rate
  double epsilon_final = 0.01; // linear decay target over the episode budget
  int horizon = 500;           // steps per episode
  int num_episodes = 10000;
  double p_sync = 0.3;         // shared-proposition synchronization probability
  int eval_period = 50;        // team evaluation every this many episodes
  int eval_episodes = 10;
  uint64_t seed = 0;

  void validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must be in (0,1]");
    if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must be in [0,1)");
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must be in [0,1]");
    if (horizon < 1) throw std::invalid_argument("horizon must be positive");
    if (num_episodes < 0) throw std::invalid_argument("num_episodes must be >= 0");
    if (!(p_sync >= 0.0 && p_sync <= 1.0)) throw std::invalid_argument("p_sync must be in [0,1]");
    if (eval_period < 1 || eval_episodes < 1)
      throw std::invalid_argument("evaluation cadence must be positive");
  }

  double epsilon_at(int episode) const {
    if (num_episodes <= 1 || epsilon <= epsilon_final) return epsilon;
    double frac = static_cast<double>(episode - 1) / (num_episodes - 1);
    return epsilon + (epsilon_final - epsilon) * frac;
  }
};

}  // namespace marm
