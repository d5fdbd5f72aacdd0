#include "wayex/oracle.hpp"

#include <cmath>
#include <limits>

#include "wayex/errors.hpp"
#include "wayex/reward.hpp"

namespace wayex {

ValueField value_iteration(const GridMap& map, double gamma, double tol,
                           int max_sweeps) {
  const auto reachable = grid_goal_distances(map);
  ValueField field;
  field.width = map.width;
  field.height = map.height;
  field.gamma = gamma;
  const std::size_t n = map.cells.size();
  field.values.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (map.cells[i] == '#')
      field.values[i] = std::numeric_limits<double>::quiet_NaN();
  }

  const std::size_t goal =
      static_cast<std::size_t>(map.goal_y) * map.width + map.goal_x;
  std::vector<double> next(field.values);
  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    double residual = 0.0;
    for (int y = 0; y < map.height; ++y) {
      for (int x = 0; x < map.width; ++x) {
        const std::size_t i = static_cast<std::size_t>(y) * map.width + x;
        if (map.cells[i] == '#' || i == goal) continue;
        double best = -std::numeric_limits<double>::infinity();
        for (int a = 0; a < GridWorld::kActions; ++a) {
          int nx = x + GridWorld::kDx[static_cast<std::size_t>(a)];
          int ny = y + GridWorld::kDy[static_cast<std::size_t>(a)];
          if (map.wall(nx, ny)) {  // bumping a wall keeps the agent in place
            nx = x;
            ny = y;
          }
          const double v =
              field.values[static_cast<std::size_t>(ny) * map.width + nx];
          best = std::max(best, -1.0 + gamma * v);
        }
        next[i] = best;
        residual = std::max(residual, std::abs(best - field.values[i]));
      }
    }
    field.values.swap(next);
    field.sweep_residuals.push_back(residual);
    field.sweeps = sweep;
    field.residual = residual;
    if (residual <= tol) return field;
  }
  throw TrainError("value iteration did not converge in " +
                   std::to_string(max_sweeps) +
                   " sweeps (residual " + std::to_string(field.residual) + ")");
}

std::vector<WaypointDelta> compare_wayex_to_oracle(const Demonstration& demo,
                                                   const GridMap& map,
                                                   const ValueField& field,
                                                   const RewardConfig& cfg) {
  if (field.width != map.width || field.height != map.height)
    throw EnvError("value field does not match the map");
  if (demo.env_name != "grid")
    throw EnvError("oracle comparison needs a grid demo");

  std::vector<WaypointDelta> out;
  out.reserve(demo.waypoints.size());
  for (std::size_t t = 0; t < demo.waypoints.size(); ++t) {
    const auto& s = demo.waypoints[t];
    WaypointDelta d;
    d.index = t;
    d.cell_x = static_cast<int>(std::lround(s.goal[0] - s.params[0]));
    d.cell_y = static_cast<int>(std::lround(s.goal[1] - s.params[1]));
    if (map.wall(d.cell_x, d.cell_y))
      throw EnvError("demo waypoint " + std::to_string(t) +
                     " lies outside the map's free cells");
    d.v_star = field.at(d.cell_x, d.cell_y);
    d.v_star_backup = -1.0 + field.gamma * d.v_star;
    d.wayex_value = wayex_reward(true, t, demo.l_d(), cfg);
    d.delta = d.wayex_value - d.v_star_backup;
    out.push_back(d);
  }
  return out;
}

}  // namespace wayex
