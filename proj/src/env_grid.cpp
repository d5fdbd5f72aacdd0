#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <sstream>

#include "wayex/env.hpp"
#include "wayex/errors.hpp"

namespace wayex {

GridMap parse_grid_map(const std::string& text, const std::string& origin) {
  GridMap map;
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(line);
  }
  if (rows.empty()) throw ParseError(origin + ": empty map");
  map.height = static_cast<int>(rows.size());
  map.width = static_cast<int>(rows[0].size());
  map.cells.resize(static_cast<std::size_t>(map.width) * map.height, '.');
  for (int y = 0; y < map.height; ++y) {
    if (static_cast<int>(rows[y].size()) != map.width) {
      throw ParseError(origin + ": row " + std::to_string(y + 1) +
                       " has width " + std::to_string(rows[y].size()) +
                       ", expected " + std::to_string(map.width));
    }
    for (int x = 0; x < map.width; ++x) {
      const char c = rows[y][static_cast<std::size_t>(x)];
      char cell = '.';
      switch (c) {
        case '#': cell = '#'; break;
        case '.': cell = '.'; break;
        case 'S':
          if (map.start_x >= 0)
            throw ParseError(origin + ": duplicate start cell");
          map.start_x = x;
          map.start_y = y;
          break;
        case 'G':
          if (map.goal_x >= 0)
            throw ParseError(origin + ": duplicate goal cell");
          map.goal_x = x;
          map.goal_y = y;
          break;
        default:
          throw ParseError(origin + ": unknown map character '" +
                           std::string(1, c) + "' at row " +
                           std::to_string(y + 1));
      }
      map.cells[static_cast<std::size_t>(y) * map.width + x] = cell;
    }
  }
  if (map.start_x < 0) throw ParseError(origin + ": missing start cell 'S'");
  if (map.goal_x < 0) throw ParseError(origin + ": missing goal cell 'G'");

  const auto dist = grid_goal_distances(map);
  if (dist[static_cast<std::size_t>(map.start_y) * map.width + map.start_x] < 0)
    throw EnvError(origin + ": no path from start to goal");
  return map;
}

GridMap load_grid_map(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open map file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_grid_map(buf.str(), path.string());
}

std::vector<int> grid_goal_distances(const GridMap& map) {
  std::vector<int> dist(map.cells.size(), -1);
  std::deque<std::pair<int, int>> frontier;
  dist[static_cast<std::size_t>(map.goal_y) * map.width + map.goal_x] = 0;
  frontier.emplace_back(map.goal_x, map.goal_y);
  while (!frontier.empty()) {
    const auto [x, y] = frontier.front();
    frontier.pop_front();
    const int d = dist[static_cast<std::size_t>(y) * map.width + x];
    for (int a = 0; a < GridWorld::kActions; ++a) {
      const int nx = x + GridWorld::kDx[static_cast<std::size_t>(a)];
      const int ny = y + GridWorld::kDy[static_cast<std::size_t>(a)];
      if (map.wall(nx, ny)) continue;
      auto& cell = dist[static_cast<std::size_t>(ny) * map.width + nx];
      if (cell < 0) {
        cell = d + 1;
        frontier.emplace_back(nx, ny);
      }
    }
  }
  return dist;
}

GridWorld::GridWorld(GridMap map)
    : map_(std::move(map)), horizon_(4 * (map_.width + map_.height)) {
  x_ = map_.start_x;
  y_ = map_.start_y;
}

StateVector GridWorld::make_state(int x, int y) const {
  StateVector s;
  s.params = {static_cast<double>(map_.goal_x - x),
              static_cast<double>(map_.goal_y - y)};
  s.goal = {static_cast<double>(map_.goal_x),
            static_cast<double>(map_.goal_y)};
  return s;
}

StateVector GridWorld::reset(double start_noise, double goal_noise, Rng&) {
  if (start_noise < 0 || goal_noise < 0)
    throw EnvError("reset noise must be non-negative");
  // Discrete environment: continuous start/goal noise has no effect.
  x_ = map_.start_x;
  y_ = map_.start_y;
  steps_ = 0;
  return state();
}

StepResult GridWorld::step_discrete(int action) {
  if (action < 0 || action >= kActions)
    throw EnvError("grid action out of range");
  const int nx = x_ + kDx[static_cast<std::size_t>(action)];
  const int ny = y_ + kDy[static_cast<std::size_t>(action)];
  if (!map_.wall(nx, ny)) {
    x_ = nx;
    y_ = ny;
  }
  ++steps_;
  StepResult r;
  r.next = state();
  r.is_goal = (x_ == map_.goal_x && y_ == map_.goal_y);
  r.done = r.is_goal || steps_ >= horizon_;
  return r;
}

StepResult GridWorld::step(const ActionVector& action) {
  if (action.components.size() != kActions)
    throw EnvError("grid expects a 4-component action");
  // Continuous adapter: the largest component selects the move.
  int best = 0;
  for (int a = 1; a < kActions; ++a) {
    if (action.components[static_cast<std::size_t>(a)] >
        action.components[static_cast<std::size_t>(best)])
      best = a;
  }
  return step_discrete(best);
}

StateVector GridWorld::state() const { return make_state(x_, y_); }

std::pair<int, int> GridWorld::cell_of(const StateVector& state) const {
  const int x = map_.goal_x - static_cast<int>(std::lround(state.params[0]));
  const int y = map_.goal_y - static_cast<int>(std::lround(state.params[1]));
  return {x, y};
}

EpisodeTrajectory GridWorld::scripted_expert() {
  const auto dist = grid_goal_distances(map_);
  Rng unused(0);
  reset(0, 0, unused);
  EpisodeTrajectory traj;
  // Walk downhill on the BFS distance field.
  while (!(x_ == map_.goal_x && y_ == map_.goal_y)) {
    const int here = dist[static_cast<std::size_t>(y_) * map_.width + x_];
    int chosen = -1;
    for (int a = 0; a < kActions; ++a) {
      const int nx = x_ + kDx[static_cast<std::size_t>(a)];
      const int ny = y_ + kDy[static_cast<std::size_t>(a)];
      if (map_.wall(nx, ny)) continue;
      if (dist[static_cast<std::size_t>(ny) * map_.width + nx] == here - 1) {
        chosen = a;
        break;
      }
    }
    if (chosen < 0) throw EnvError("grid expert is stuck; map is inconsistent");
    TransitionRecord t;
    t.state = state();
    t.action.components.assign(kActions, -1.0);
    t.action.components[static_cast<std::size_t>(chosen)] = 1.0;
    const StepResult r = step_discrete(chosen);
    t.next_state = r.next;
    t.is_goal = r.is_goal;
    t.done = r.done;
    t.reward = r.is_goal ? 0.0 : -1.0;
    traj.transitions.push_back(std::move(t));
    if (static_cast<int>(traj.transitions.size()) > horizon_)
      throw EnvError("grid expert exceeded the horizon");
  }
  if (traj.transitions.empty() || !traj.transitions.back().is_goal)
    throw EnvError("grid expert did not reach the goal");
  return traj;
}

double GridWorld::dense_reward(const StateVector& state) const {
  // Manhattan distance to the goal, ignoring walls.
  return -(std::abs(state.params[0]) + std::abs(state.params[1]));
}

}  // namespace wayex
