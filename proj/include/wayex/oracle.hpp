#pragma once

#include <vector>

#include "wayex/core.hpp"
#include "wayex/demo.hpp"
#include "wayex/env.hpp"

// Bellman value-iteration oracle on the grid world, used to validate the
// waypoint reward against the solved reward field.

namespace wayex {

// Reward convention: every transition out of a non-goal cell costs -1
// (including the one entering the goal); the goal is absorbing with value 0.
// A free cell at shortest-path distance d therefore holds
// V* = -(1 - gamma^d) / (1 - gamma).
struct ValueField {
  int width = 0;
  int height = 0;
  double gamma = 0.0;
  std::vector<double> values;           // row-major; NaN on walls
  std::vector<double> sweep_residuals;  // max per-cell change, per sweep
  int sweeps = 0;
  double residual = 0.0;

  double at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * width + x];
  }
};

// Jacobi sweeps to the stated tolerance. Throws TrainError with the residual
// when max_sweeps is exhausted first.
ValueField value_iteration(const GridMap& map, double gamma,
                           double tol = 1e-10, int max_sweeps = 100000);

struct WaypointDelta {
  std::size_t index = 0;
  int cell_x = 0, cell_y = 0;
  double v_star = 0.0;        // oracle value at the waypoint's cell
  double v_star_backup = 0.0; // -1 + gamma * v_star
  double wayex_value = 0.0;   // proximal waypoint reward at this index
  double delta = 0.0;         // wayex_value - v_star_backup
};

// Per-waypoint comparison between the waypoint reward and the solved field.
// A state granted the waypoint-t reward sits one sparse step short of the
// waypoint's cell, so the matched quantity is the one-step backup
// -1 + gamma*V*; on a shortest-path demo every delta is exactly zero.
// Suboptimal demos give strictly negative deltas before the detour.
std::vector<WaypointDelta> compare_wayex_to_oracle(const Demonstration& demo,
                                                   const GridMap& map,
                                                   const ValueField& field,
                                                   const RewardConfig& cfg);

}  // namespace wayex
