#pragma once

#include <cstddef>
#include <vector>

// Shared vocabulary for every other module: states, actions, transitions,
// trajectories, and the reward constants.

namespace wayex {

// A state as the learner sees it. `params` holds K relative environmental
// parameters; by repo-wide convention the trailing goal.size() entries are
// the goal residual (goal minus the achieved quantity), so a state is at the
// goal exactly when that block vanishes. `goal` is the goal descriptor g
// appended to the policy input; it is excluded from waypoint matching.
struct StateVector {
  std::vector<double> params;
  std::vector<double> goal;

  bool operator==(const StateVector&) const = default;
};

// Normalized actuation; every component lives in [-1, 1].
struct ActionVector {
  std::vector<double> components;

  bool operator==(const ActionVector&) const = default;
};

// Clamp all components into [-1, 1] in place.
void clamp_action(ActionVector& action);

struct TransitionRecord {
  StateVector state;
  ActionVector action;
  double reward = 0.0;
  StateVector next_state;
  bool done = false;
  bool is_goal = false;
};

struct EpisodeTrajectory {
  std::vector<TransitionRecord> transitions;
};

// True when consecutive transitions chain (next_state == following state).
bool is_chained(const EpisodeTrajectory& trajectory);

bool all_finite(const std::vector<double>& values);
bool is_finite(const StateVector& state);

// Constants behind the waypoint reward and its bookkeeping.
struct RewardConfig {
  double gamma = 0.95;      // discount, in (0, 1)
  int l_max = 50;           // maximum episode length, steps
  double epsilon = 0.001;   // per-component threshold growth
  int warmup_steps = 1000;  // critic excluded from the fused reward before this
  int failure_limit = 10;   // consecutive misses before thresholds grow

  // Throws ConfigError when a field is out of range.
  void validate() const;
};

// Euclidean norm of the trailing goal-residual block of `params`.
double goal_distance(const StateVector& state);

// 0 when the goal-residual block is within `goal_tolerance`, else -1.
double sparse_reward(const StateVector& state, double goal_tolerance);

}  // namespace wayex
