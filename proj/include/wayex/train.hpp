#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wayex/agent.hpp"
#include "wayex/config.hpp"
#include "wayex/demo.hpp"
#include "wayex/env.hpp"
#include "wayex/expansion.hpp"
#include "wayex/replay.hpp"
#include "wayex/reward.hpp"

// Training loops: an episode roll-out feeds per-transition rewards (fused
// waypoint reward, sparse, or dense, per config) into the learner, the
// expansion schedule grows start/goal noise, and per-epoch metrics land in
// CSV files. Runs are deterministic per (config, seed); wall-clock timing
// goes to stdout and a sidecar file, never into the metrics CSV.

namespace wayex {

struct EpochRow {
  long epoch = 0;
  long env_steps = 0;
  double train_success = 0.0;
  double eval_success = 0.0;
  double mean_episode_reward = 0.0;
  double sigma = 0.0;
  double mean_matched_index = 0.0;
  double critic_loss = 0.0;
};

std::string metrics_header();
std::string format_metrics_row(const EpochRow& row);

using EpochCallback = std::function<void(const EpochRow&)>;
// episode index (0-based), env steps so far, terminal success, sigma after
// the expansion update.
using EpisodeCallback =
    std::function<void(long, long, bool, double)>;

// Continuous-control loop (reach, picklift) around the actor-critic.
class ContinuousTrainer {
 public:
  ContinuousTrainer(const ExperimentConfig& cfg, int seed);

  // Runs until total_steps; callbacks may be empty.
  void run(const EpochCallback& on_epoch, const EpisodeCallback& on_episode);

  // Mean terminal success over n greedy episodes at the given reset noise.
  double eval_success(double noise_sigma, int episodes, Rng& rng);

  ActorCritic& agent() { return *agent_; }
  const ExpansionState& expansion() const { return expansion_; }
  long fused_calls() const { return fused_calls_; }
  long env_steps() const { return env_steps_; }
  const Demonstration& demo() const { return demo_; }

 private:
  double step_reward(const StateVector& s, const StepResult& r);

  ExperimentConfig cfg_;
  int seed_;
  std::unique_ptr<Env> env_;
  std::unique_ptr<Env> eval_env_;
  RewardConfig reward_cfg_;
  Demonstration demo_;
  std::unique_ptr<ActorCritic> agent_;
  ReplayBuffer buffer_;
  ExpansionState expansion_;
  Rng act_rng_, reset_rng_, replay_rng_, eval_rng_;
  long env_steps_ = 0;
  long fused_calls_ = 0;
  // per-epoch accumulators
  double epoch_reward_sum_ = 0.0;
  long epoch_episodes_ = 0, epoch_successes_ = 0;
  double epoch_matched_sum_ = 0.0;
  long epoch_matched_count_ = 0;
  double epoch_critic_loss_sum_ = 0.0;
  long epoch_updates_ = 0;
};

// Tabular Q-learning loop on the grid world.
class GridTrainer {
 public:
  GridTrainer(const ExperimentConfig& cfg, int seed);

  struct EpisodeStats {
    bool success = false;
    double reward_sum = 0.0;
    long steps = 0;
  };

  EpisodeStats run_episode();
  bool greedy_rollout();  // from the nominal start, no exploration
  double eval_success(int episodes);

  void run(const EpochCallback& on_epoch, const EpisodeCallback& on_episode);

  TabularQ& agent() { return *agent_; }
  GridWorld& env() { return *env_; }
  const ExpansionState& expansion() const { return expansion_; }
  long fused_calls() const { return fused_calls_; }
  long env_steps() const { return env_steps_; }
  long episodes() const { return episodes_; }

 private:
  double step_reward(const StateVector& s, const StepResult& r);

  ExperimentConfig cfg_;
  std::unique_ptr<GridWorld> env_;
  std::unique_ptr<GridWorld> eval_env_;
  RewardConfig reward_cfg_;
  Demonstration demo_;
  std::unique_ptr<TabularQ> agent_;
  ExpansionState expansion_;
  Rng explore_rng_, reset_rng_;
  long env_steps_ = 0;
  long episodes_ = 0;
  long fused_calls_ = 0;
  double epoch_critic_loss_sum_ = 0.0;
  long epoch_updates_ = 0;
  double epoch_matched_sum_ = 0.0;
  long epoch_matched_count_ = 0;
};

struct TrainResult {
  std::filesystem::path metrics_csv;
  std::filesystem::path episodes_csv;
  std::filesystem::path timing_csv;
  std::filesystem::path checkpoint;
  long env_steps = 0;
  long fused_calls = 0;
  double final_eval_success = 0.0;
};

// Full harness: trains one seed, writes metrics/episode/timing CSVs and a
// checkpoint under cfg.out_dir. Logs progress to `log` when non-null.
TrainResult train(const ExperimentConfig& cfg, int seed,
                  std::ostream* log = nullptr);

struct EvalReport {
  double success_at_checkpoint_sigma = 0.0;
  double success_at_reference_sigma = 0.0;
  double checkpoint_sigma = 0.0;
  double reference_sigma = 0.0;
};

// Greedy evaluation of a saved checkpoint at its stored expansion noise and
// at the config's reference noise. Throws on a version mismatch or when
// episodes < 1.
EvalReport evaluate(const std::filesystem::path& checkpoint_path,
                    const ExperimentConfig& cfg, int episodes);

// Checkpoint IO (JSON; exact round-trip on all weights).
void save_checkpoint(const std::filesystem::path& path,
                     const ExperimentConfig& cfg, ContinuousTrainer& trainer);
void save_checkpoint(const std::filesystem::path& path,
                     const ExperimentConfig& cfg, GridTrainer& trainer);

}  // namespace wayex
