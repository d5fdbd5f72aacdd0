#include "wayex/core.hpp"

#include <algorithm>
#include <cmath>

#include "wayex/errors.hpp"

namespace wayex {

void clamp_action(ActionVector& action) {
  for (double& c : action.components) c = std::clamp(c, -1.0, 1.0);
}

bool is_chained(const EpisodeTrajectory& trajectory) {
  const auto& ts = trajectory.transitions;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if (!(ts[i].next_state == ts[i + 1].state)) return false;
  }
  return true;
}

bool all_finite(const std::vector<double>& values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v); });
}

bool is_finite(const StateVector& state) {
  return all_finite(state.params) && all_finite(state.goal);
}

void RewardConfig::validate() const {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw ConfigError("gamma must be in (0, 1)");
  if (l_max <= 0) throw ConfigError("l_max must be positive");
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be > 0");
  if (warmup_steps < 0) throw ConfigError("warmup_steps must be >= 0");
  if (failure_limit <= 0) throw ConfigError("failure_limit must be positive");
}

double goal_distance(const StateVector& state) {
  const std::size_t g = state.goal.size();
  if (g == 0 || state.params.size() < g) return 0.0;
  const double* tail = state.params.data() + (state.params.size() - g);
  double acc = 0.0;
  for (std::size_t i = 0; i < g; ++i) acc += tail[i] * tail[i];
  return std::sqrt(acc);
}

double sparse_reward(const StateVector& state, double goal_tolerance) {
  return goal_distance(state) <= goal_tolerance ? 0.0 : -1.0;
}

}  // namespace wayex
