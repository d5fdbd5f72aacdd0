#pragma once

#include <array>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wayex/core.hpp"
#include "wayex/rng.hpp"

// Three deterministic desk-scale goal-conditioned environments with scripted
// experts. All state parameters are relative (never absolute world
// coordinates for goal-relevant quantities), and the trailing goal.size()
// parameters are the goal residual; see core.hpp.

namespace wayex {

struct StepResult {
  StateVector next;
  bool is_goal = false;
  bool done = false;
};

class Env {
 public:
  virtual ~Env() = default;

  virtual std::string_view name() const = 0;
  virtual std::size_t param_dim() const = 0;
  virtual std::size_t goal_dim() const = 0;
  virtual std::size_t action_dim() const = 0;
  virtual double goal_tolerance() const = 0;
  virtual int horizon() const = 0;

  // Place the environment at its nominal demo start/goal perturbed by
  // zero-mean Gaussian noise; resamples out-of-bounds draws (up to 100
  // tries), then clamps. Throws EnvError on negative noise.
  virtual StateVector reset(double start_noise, double goal_noise, Rng& rng) = 0;

  // Deterministic transition. Throws EnvError on an action dimensionality
  // mismatch. done = is_goal or horizon reached.
  virtual StepResult step(const ActionVector& action) = 0;

  virtual StateVector state() const = 0;

  // Rolls the built-in expert from the nominal start; throws EnvError if the
  // script fails to reach the goal.
  virtual EpisodeTrajectory scripted_expert() = 0;

  // Hand-tuned shaped reward for the dense baseline.
  virtual double dense_reward(const StateVector& state) const = 0;

  // Number of times reset() had to clamp after exhausting resampling.
  long clamp_events() const { return clamp_events_; }

 protected:
  long clamp_events_ = 0;
};

// ---------------------------------------------------------------------------
// Grid world

struct GridMap {
  int width = 0;
  int height = 0;
  std::vector<char> cells;  // row-major; '#' wall, '.' free
  int start_x = -1, start_y = -1;
  int goal_x = -1, goal_y = -1;

  bool wall(int x, int y) const {
    if (x < 0 || y < 0 || x >= width || y >= height) return true;
    return cells[static_cast<std::size_t>(y) * width + x] == '#';
  }
};

// Loads a plain-text map: '#' wall, '.' free, 'S' start, 'G' goal. Throws
// ParseError on malformed input (ragged rows, missing or duplicate S/G,
// unknown characters) and EnvError when no path from S to G exists.
GridMap load_grid_map(const std::filesystem::path& path);
GridMap parse_grid_map(const std::string& text, const std::string& origin);

// BFS distance from every free cell to the goal; walls and unreachable cells
// hold -1.
std::vector<int> grid_goal_distances(const GridMap& map);

class GridWorld final : public Env {
 public:
  // Actions, in encoding order: up, down, left, right.
  static constexpr int kActions = 4;
  static constexpr std::array<int, 4> kDx{0, 0, -1, 1};
  static constexpr std::array<int, 4> kDy{-1, 1, 0, 0};

  explicit GridWorld(GridMap map);

  std::string_view name() const override { return "grid"; }
  std::size_t param_dim() const override { return 2; }
  std::size_t goal_dim() const override { return 2; }
  std::size_t action_dim() const override { return kActions; }
  double goal_tolerance() const override { return 0.5; }
  int horizon() const override { return horizon_; }

  StateVector reset(double start_noise, double goal_noise, Rng& rng) override;
  StepResult step(const ActionVector& action) override;
  StateVector state() const override;
  EpisodeTrajectory scripted_expert() override;
  double dense_reward(const StateVector& state) const override;

  // Discrete interface for the tabular learner.
  StepResult step_discrete(int action);
  int cell_index() const { return y_ * map_.width + x_; }
  int cell_count() const { return map_.width * map_.height; }
  const GridMap& map() const { return map_; }

  // Recover the cell a state refers to (params are goal-relative).
  std::pair<int, int> cell_of(const StateVector& state) const;

 private:
  StateVector make_state(int x, int y) const;

  GridMap map_;
  int x_ = 0, y_ = 0;
  int steps_ = 0;
  int horizon_ = 0;
};

// ---------------------------------------------------------------------------
// Point-mass reach

struct ReachLayout {
  double start_x = 0.2, start_y = 0.2;
  double goal_x = 0.8, goal_y = 0.8;
  double max_step = 0.05;
  double goal_tolerance = 0.02;
  double lo = 0.0, hi = 1.0;  // square arena bounds
};

class PointMassReach final : public Env {
 public:
  explicit PointMassReach(ReachLayout layout = {});

  std::string_view name() const override { return "reach"; }
  std::size_t param_dim() const override { return 2; }
  std::size_t goal_dim() const override { return 2; }
  std::size_t action_dim() const override { return 2; }
  double goal_tolerance() const override { return layout_.goal_tolerance; }
  int horizon() const override { return 50; }

  StateVector reset(double start_noise, double goal_noise, Rng& rng) override;
  StepResult step(const ActionVector& action) override;
  StateVector state() const override;
  EpisodeTrajectory scripted_expert() override;
  double dense_reward(const StateVector& state) const override;

  // Test hook: place the mass without touching goal or step counter.
  void teleport(double x, double y);

 private:
  ReachLayout layout_;
  double x_ = 0, y_ = 0;
  double gx_ = 0, gy_ = 0;
  int steps_ = 0;
};

// ---------------------------------------------------------------------------
// Planar pick-and-lift (vertical plane: x horizontal, y height)

struct PickLiftLayout {
  double gripper_x = 0.2, gripper_y = 0.5;
  double object_x = 0.55;
  double table_y = 0.1;  // objects rest here when not held
  double goal_x = 0.75, goal_y = 0.6;
  double max_step = 0.05;
  double aperture_rate = 0.25;
  double grasp_radius = 0.02;
  double grip_threshold = 0.3;  // aperture below this can hold the object
  double goal_tolerance = 0.03;
  double lo = 0.0, hi = 1.0;
};

class PlanarPickLift final : public Env {
 public:
  explicit PlanarPickLift(PickLiftLayout layout = {});

  std::string_view name() const override { return "picklift"; }
  // [gripper-object x, gripper-object y, aperture, held, goal-object x, goal-object y]
  std::size_t param_dim() const override { return 6; }
  std::size_t goal_dim() const override { return 2; }
  std::size_t action_dim() const override { return 3; }
  double goal_tolerance() const override { return layout_.goal_tolerance; }
  int horizon() const override { return 50; }

  StateVector reset(double start_noise, double goal_noise, Rng& rng) override;
  StepResult step(const ActionVector& action) override;
  StateVector state() const override;
  EpisodeTrajectory scripted_expert() override;
  double dense_reward(const StateVector& state) const override;

  bool object_held() const { return held_; }

 private:
  PickLiftLayout layout_;
  double gx_ = 0, gy_ = 0;   // gripper
  double aperture_ = 1.0;    // 1 open, 0 closed
  double ox_ = 0, oy_ = 0;   // object
  bool held_ = false;
  double goal_x_ = 0, goal_y_ = 0;
  int steps_ = 0;
};

// Factory. `map_file` is required for "grid" and ignored otherwise. Throws
// ConfigError on an unknown name.
std::unique_ptr<Env> make_env(const std::string& name,
                              const std::string& map_file);

}  // namespace wayex
