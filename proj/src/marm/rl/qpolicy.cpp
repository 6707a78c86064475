#include "marm/rl/qpolicy.hpp"

#include <ostream>

namespace marm {

double QPolicy::max_value(StateId u, int obs) const {
  const auto& row = tables_[u][obs];
  double best = row[0];
  for (int a = 1; a < kNumActions; ++a)
    if (row[a] > best) best = row[a];
  return best;
}

Action QPolicy::select_action(StateId u, int obs, double epsilon, Rng& rng) const {
  if (epsilon > 0.0 &&
      std::uniform_real_distribution<double>(0.0, 1.0)(rng) < epsilon) {
    return static_cast<Action>(
        std::uniform_int_distribution<int>(0, kNumActions - 1)(rng));
  }
  const auto& row = tables_[u][obs];
  double best = row[0];
  for (int a = 1; a < kNumActions; ++a)
    if (row[a] > best) best = row[a];
  int ties[kNumActions];
  int n = 0;
  for (int a = 0; a < kNumActions; ++a)
    if (row[a] == best) ties[n++] = a;
  if (n == 1) return static_cast<Action>(ties[0]);
  return static_cast<Action>(ties[std::uniform_int_distribution<int>(0, n - 1)(rng)]);
}

Action QPolicy::greedy_action(StateId u, int obs) const {
  const auto& row = tables_[u][obs];
  int best = 0;
  for (int a = 1; a < kNumActions; ++a)
    if (row[a] > row[best]) best = a;
  return static_cast<Action>(best);
}

void QPolicy::update(StateId u, int obs, Action a, double reward, int next_obs,
                     StateId next_u, double alpha, double gamma) {
  double& q = tables_[u][obs][static_cast<int>(a)];
  const double target = reward + gamma * max_value(next_u, next_obs);
  q += alpha * (target - q);
}

void QPolicy::update_all(const RewardMachine& rm, int obs, Action a, int next_obs,
                         const Label& label, double alpha, double gamma) {
  for (StateId u = 0; u < rm.num_states(); ++u) {
    if (u == rm.final_state()) continue;
    const auto [next_u, reward] = rm.step(u, label);
    update(u, obs, a, reward, next_obs, next_u, alpha, gamma);
  }
}


void QPolicy::dump(std::ostream& os) const {
  for (size_t u = 0; u < tables_.size(); ++u)
    for (int s = 0; s < num_obs_; ++s)
      for (int a = 0; a < kNumActions; ++a)
        if (tables_[u][s][a] != 0.0)
          os << u << " " << s << " " << a << " " << tables_[u][s][a] << "\n";
}

}  // namespace marm
