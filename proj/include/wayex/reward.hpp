#pragma once

#include <cstddef>
#include <functional>

#include "wayex/core.hpp"
#include "wayex/demo.hpp"
#include "wayex/env.hpp"
#include "wayex/matching.hpp"

namespace wayex {

// One fused-reward evaluation, kept for logging and tests.
struct RewardBreakdown {
  double r_waypoint = 0.0;   // geometric-sum waypoint reward
  double r_critic = 0.0;     // gamma * critic(s_next); -inf during warmup
  double r_final = 0.0;      // max of the two, or 0 on terminal success
  std::size_t matched_index = 0;
  bool proximal = false;
};

// Waypoint reward for a state matched to waypoint t of a demo of length l_d:
//   proximal:      sum_{i=0}^{l_d - t} -gamma^i
//   not proximal:  sum_{i=1}^{l_max}   -gamma^i
// evaluated in closed form. Throws std::invalid_argument when t > l_d.
double wayex_reward(bool has_prox, std::size_t t, std::size_t l_d,
                    const RewardConfig& cfg);

using CriticFn = std::function<double(const StateVector&)>;

// Full per-transition pipeline: nearest waypoint, proximity test, failure
// bookkeeping, waypoint reward, then the critic-max fusion once past warmup.
// Terminal success overrides everything with 0. `next_is_goal` comes from
// the environment's goal predicate.
RewardBreakdown fused_reward(const StateVector& s_e,
                             const StateVector& s_next, bool next_is_goal,
                             Demonstration& demo, const CriticFn& critic,
                             long step_count, const RewardConfig& cfg);

// Hand-tuned shaped baseline, delegated to the environment.
double dense_baseline_reward(const Env& env, const StateVector& state);

}  // namespace wayex
