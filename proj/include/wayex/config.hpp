#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wayex/core.hpp"

namespace wayex {

// Flat key = value configuration with full schema validation: unknown keys
// are rejected and every value is range-checked with an explicit message.
struct ExperimentConfig {
  std::string env = "reach";            // grid | reach | picklift
  std::string map_file;                 // required when env = grid
  std::string reward_mode = "wayex";    // sparse | dense | wayex
  std::string demo_file;                // required when reward_mode = wayex
  std::vector<int> seeds{0, 1, 2, 3};
  long total_steps = 200000;
  long epoch_steps = 40000;
  int eval_episodes = 50;
  double eval_noise = 0.0;              // reference sigma for evaluation
  double gamma = 0.95;
  double threshold_epsilon = 0.001;
  int failure_limit = 10;
  int warmup_steps = 1000;
  int expansion_cadence = 25;
  double expansion_increment = 0.001;
  double expansion_success_threshold = 0.05;
  double action_noise = 0.1;
  std::vector<int> hidden_sizes{64, 64};
  double actor_lr = 1e-4;
  double critic_lr = 1e-3;
  double tau = 0.005;
  int batch_size = 128;
  long replay_capacity = 1000000;
  int learn_start = 1000;
  int update_every = 1;
  double tabular_lr = 0.5;
  double tabular_epsilon = 0.2;         // epsilon-greedy exploration (grid)
  std::string out_dir = "out";

  // Parse a config file, then apply `key=value` overrides in order. Throws
  // ConfigError on unknown keys, bad syntax, or out-of-range values.
  static ExperimentConfig load(const std::filesystem::path& path,
                               const std::vector<std::string>& overrides = {});

  // Overrides applied to built-in defaults, no file involved.
  static ExperimentConfig from_overrides(
      const std::vector<std::string>& overrides);

  // Cross-field checks (map_file with grid, demo_file with wayex, ...).
  void validate() const;

  // Every effective value, one `key = value` line each.
  void print_effective(std::ostream& out) const;

  RewardConfig reward_config(int env_horizon) const;
};

}  // namespace wayex
