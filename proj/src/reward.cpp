#include "wayex/reward.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wayex {

double wayex_reward(bool has_prox, std::size_t t, std::size_t l_d,
                    const RewardConfig& cfg) {
  if (t > l_d)
    throw std::invalid_argument("wayex_reward: waypoint index exceeds l_d");
  const double g = cfg.gamma;
  if (has_prox) {
    // sum_{i=0}^{l_d - t} -g^i
    const double n = static_cast<double>(l_d - t) + 1.0;
    return -(1.0 - std::pow(g, n)) / (1.0 - g);
  }
  // sum_{i=1}^{l_max} -g^i
  return -g * (1.0 - std::pow(g, static_cast<double>(cfg.l_max))) / (1.0 - g);
}

RewardBreakdown fused_reward(const StateVector& s_e,
                             const StateVector& s_next, bool next_is_goal,
                             Demonstration& demo, const CriticFn& critic,
                             long step_count, const RewardConfig& cfg) {
  const MatchResult match = nearest_waypoint(s_e, demo);
  register_outcome(demo, match.index, match.is_proximal, cfg);

  RewardBreakdown out;
  out.matched_index = match.index;
  out.proximal = match.is_proximal;
  out.r_waypoint = wayex_reward(match.is_proximal, match.index, demo.l_d(), cfg);

  if (step_count < cfg.warmup_steps) {
    out.r_critic = -std::numeric_limits<double>::infinity();
    out.r_final = out.r_waypoint;
  } else {
    out.r_critic = cfg.gamma * critic(s_next);
    out.r_final = std::max(out.r_waypoint, out.r_critic);
  }
  // Eq.-1-style terminal success dominates the waypoint formula.
  if (next_is_goal) out.r_final = 0.0;
  return out;
}

double dense_baseline_reward(const Env& env, const StateVector& state) {
  return env.dense_reward(state);
}

}  // namespace wayex
