#include <algorithm>
#include <cmath>

#include "env_common.hpp"
#include "wayex/env.hpp"
#include "wayex/errors.hpp"

namespace wayex {

using detail::perturb_bounded;

PlanarPickLift::PlanarPickLift(PickLiftLayout layout) : layout_(layout) {
  gx_ = layout_.gripper_x;
  gy_ = layout_.gripper_y;
  ox_ = layout_.object_x;
  oy_ = layout_.table_y;
  goal_x_ = layout_.goal_x;
  goal_y_ = layout_.goal_y;
}

StateVector PlanarPickLift::reset(double start_noise, double goal_noise,
                                  Rng& rng) {
  if (start_noise < 0 || goal_noise < 0)
    throw EnvError("reset noise must be non-negative");
  gx_ = perturb_bounded(layout_.gripper_x, start_noise, layout_.lo, layout_.hi,
                        rng, clamp_events_);
  gy_ = perturb_bounded(layout_.gripper_y, start_noise, layout_.lo, layout_.hi,
                        rng, clamp_events_);
  ox_ = perturb_bounded(layout_.object_x, start_noise, layout_.lo, layout_.hi,
                        rng, clamp_events_);
  oy_ = layout_.table_y;  // the object starts resting on the table
  goal_x_ = perturb_bounded(layout_.goal_x, goal_noise, layout_.lo, layout_.hi,
                            rng, clamp_events_);
  goal_y_ = perturb_bounded(layout_.goal_y, goal_noise, layout_.table_y,
                            layout_.hi, rng, clamp_events_);
  aperture_ = 1.0;
  held_ = false;
  steps_ = 0;
  return state();
}

StepResult PlanarPickLift::step(const ActionVector& action) {
  if (action.components.size() != 3)
    throw EnvError("picklift expects a 3-component action");
  ActionVector a = action;
  clamp_action(a);
  gx_ = std::clamp(gx_ + layout_.max_step * a.components[0], layout_.lo,
                   layout_.hi);
  gy_ = std::clamp(gy_ + layout_.max_step * a.components[1], layout_.lo,
                   layout_.hi);
  aperture_ =
      std::clamp(aperture_ + layout_.aperture_rate * a.components[2], 0.0, 1.0);

  if (held_) {
    if (aperture_ > layout_.grip_threshold) {
      // Opening drops the object straight onto the table.
      held_ = false;
      oy_ = layout_.table_y;
    } else {
      ox_ = gx_;
      oy_ = gy_;
    }
  } else {
    const double dx = gx_ - ox_;
    const double dy = gy_ - oy_;
    if (std::sqrt(dx * dx + dy * dy) <= layout_.grasp_radius &&
        aperture_ <= layout_.grip_threshold) {
      held_ = true;
      ox_ = gx_;
      oy_ = gy_;
    }
  }

  ++steps_;
  StepResult r;
  r.next = state();
  r.is_goal = goal_distance(r.next) <= layout_.goal_tolerance;
  r.done = r.is_goal || steps_ >= horizon();
  return r;
}

StateVector PlanarPickLift::state() const {
  StateVector s;
  s.params = {gx_ - ox_,        gy_ - oy_,        aperture_,
              held_ ? 1.0 : 0.0, goal_x_ - ox_,   goal_y_ - oy_};
  s.goal = {goal_x_, goal_y_};
  return s;
}

EpisodeTrajectory PlanarPickLift::scripted_expert() {
  Rng unused(0);
  reset(0, 0, unused);
  EpisodeTrajectory traj;
  for (int i = 0; i < horizon(); ++i) {
    ActionVector a;
    a.components.assign(3, 0.0);
    if (!held_) {
      const double dx = ox_ - gx_;
      const double dy = oy_ - gy_;
      if (std::sqrt(dx * dx + dy * dy) > layout_.grasp_radius) {
        // Approach with the gripper held open.
        a.components[0] = std::clamp(dx / layout_.max_step, -1.0, 1.0);
        a.components[1] = std::clamp(dy / layout_.max_step, -1.0, 1.0);
        a.components[2] = 1.0;
      } else {
        a.components[2] = -1.0;  // close until the grasp engages
      }
    } else {
      a.components[0] = std::clamp((goal_x_ - gx_) / layout_.max_step, -1.0, 1.0);
      a.components[1] = std::clamp((goal_y_ - gy_) / layout_.max_step, -1.0, 1.0);
      a.components[2] = -1.0;  // keep squeezing while carrying
    }
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
  throw EnvError("picklift expert did not reach the goal within the horizon");
}

double PlanarPickLift::dense_reward(const StateVector& state) const {
  // Staged shaping: approach the object first, then carry it to the goal.
  // The -2 offset keeps every not-held reward below every held reward.
  const bool held = state.params[3] > 0.5;
  if (held) return -goal_distance(state);
  const double dx = state.params[0];
  const double dy = state.params[1];
  return -2.0 - std::sqrt(dx * dx + dy * dy);
}

std::unique_ptr<Env> make_env(const std::string& name,
                              const std::string& map_file) {
  if (name == "grid") {
    if (map_file.empty())
      throw ConfigError("env 'grid' requires map_file to be set");
    return std::make_unique<GridWorld>(load_grid_map(map_file));
  }
  if (name == "reach") return std::make_unique<PointMassReach>();
  if (name == "picklift") return std::make_unique<PlanarPickLift>();
  throw ConfigError("unknown env '" + name +
                    "' (expected grid, reach, or picklift)");
}

}  // namespace wayex
