#include <algorithm>
#include <cmath>

#include "env_common.hpp"
#include "wayex/env.hpp"
#include "wayex/errors.hpp"

namespace wayex {

using detail::perturb_bounded;

PointMassReach::PointMassReach(ReachLayout layout) : layout_(layout) {
  x_ = layout_.start_x;
  y_ = layout_.start_y;
  gx_ = layout_.goal_x;
  gy_ = layout_.goal_y;
}

StateVector PointMassReach::reset(double start_noise, double goal_noise,
                                  Rng& rng) {
  if (start_noise < 0 || goal_noise < 0)
    throw EnvError("reset noise must be non-negative");
  x_ = perturb_bounded(layout_.start_x, start_noise, layout_.lo, layout_.hi,
                       rng, clamp_events_);
  y_ = perturb_bounded(layout_.start_y, start_noise, layout_.lo, layout_.hi,
                       rng, clamp_events_);
  gx_ = perturb_bounded(layout_.goal_x, goal_noise, layout_.lo, layout_.hi,
                        rng, clamp_events_);
  gy_ = perturb_bounded(layout_.goal_y, goal_noise, layout_.lo, layout_.hi,
                        rng, clamp_events_);
  steps_ = 0;
  return state();
}

StepResult PointMassReach::step(const ActionVector& action) {
  if (action.components.size() != 2)
    throw EnvError("reach expects a 2-component action");
  ActionVector a = action;
  clamp_action(a);
  x_ = std::clamp(x_ + layout_.max_step * a.components[0], layout_.lo,
                  layout_.hi);
  y_ = std::clamp(y_ + layout_.max_step * a.components[1], layout_.lo,
                  layout_.hi);
  ++steps_;
  StepResult r;
  r.next = state();
  r.is_goal = goal_distance(r.next) <= layout_.goal_tolerance;
  r.done = r.is_goal || steps_ >= horizon();
  return r;
}

StateVector PointMassReach::state() const {
  StateVector s;
  s.params = {gx_ - x_, gy_ - y_};
  s.goal = {gx_, gy_};
  return s;
}

void PointMassReach::teleport(double x, double y) {
  x_ = x;
  y_ = y;
}

EpisodeTrajectory PointMassReach::scripted_expert() {
  Rng unused(0);
  reset(0, 0, unused);
  EpisodeTrajectory traj;
  for (int i = 0; i < horizon(); ++i) {
    ActionVector a;
    a.components = {std::clamp((gx_ - x_) / layout_.max_step, -1.0, 1.0),
                    std::clamp((gy_ - y_) / layout_.max_step, -1.0, 1.0)};
    TransitionRecord t;
    t.state = state();
    t.action = a;
    const StepResult r = step(a);
    t.next_state = r.next;
    t.is_goal = r.is_goal;
    t.done = r.done;
    t.reward = r.is_goal ? 0.0 : -1.0;
    traj.transitions.push_back(std::move(t));
    if (r.is_goal) return traj;
  }
  throw EnvError("reach expert did not reach the goal within the horizon");
}

double PointMassReach::dense_reward(const StateVector& state) const {
  return -goal_distance(state);
}

}  // namespace wayex
