#pragma once

#include <cstddef>
#include <vector>

#include "wayex/core.hpp"
#include "wayex/mlp.hpp"
#include "wayex/rng.hpp"

// Learners. A deterministic actor-critic with target networks covers the
// continuous tasks; one-step tabular Q-learning covers the grid world.
// Instances are single-threaded; run one per training loop.

namespace wayex {

struct ActorCriticConfig {
  std::vector<std::size_t> hidden{64, 64};
  double actor_lr = 1e-4;
  double critic_lr = 1e-3;
  double tau = 0.005;          // soft target update rate
  double gamma = 0.95;
  double action_noise = 0.1;   // exploration noise scale
};

class ActorCritic {
 public:
  ActorCritic(std::size_t state_dim, std::size_t action_dim,
              ActorCriticConfig cfg, Rng& rng);

  // Deterministic actor output; with explore, zero-mean Gaussian noise is
  // added per component and the result clamped to [-1, 1].
  ActionVector act(const StateVector& state, bool explore, Rng& rng);

  // Q_target(s, actor_target(s)); the critic term of the fused reward.
  double target_value(const StateVector& state);

  double live_value(const StateVector& state, const ActionVector& action);

  struct UpdateDiag {
    double critic_loss = 0.0;
    double actor_objective = 0.0;  // mean Q under the live actor
  };

  // One gradient step on a sampled batch; throws TrainError on NaN losses.
  UpdateDiag update(const std::vector<const TransitionRecord*>& batch);

  Mlp& actor() { return actor_; }
  Mlp& critic() { return critic_; }
  Mlp& actor_target() { return actor_target_; }
  Mlp& critic_target() { return critic_target_; }
  const ActorCriticConfig& config() const { return cfg_; }
  std::size_t state_dim() const { return state_dim_; }
  std::size_t action_dim() const { return action_dim_; }

  // targets <- tau * live + (1 - tau) * targets
  void soft_update_targets();

 private:
  std::vector<double> flatten(const StateVector& state) const;

  ActorCriticConfig cfg_;
  std::size_t state_dim_;
  std::size_t action_dim_;
  Mlp actor_, critic_, actor_target_, critic_target_;
  Adam actor_opt_, critic_opt_;
  Mlp::Workspace actor_ws_, critic_ws_, actor_target_ws_, critic_target_ws_;
  std::vector<double> actor_grad_, critic_grad_;
  std::vector<double> input_scratch_, input_grad_scratch_;
};

class TabularQ {
 public:
  TabularQ(int n_cells, int n_actions, double init_value, double lr,
           double gamma);

  int greedy_action(int cell) const;  // ties break toward the lowest index
  double max_q(int cell) const;
  double q(int cell, int action) const {
    return q_[static_cast<std::size_t>(cell) * n_actions_ + action];
  }

  // Standard one-step Q-learning on an externally computed reward.
  void update(int cell, int action, double reward, int next_cell, bool done);

  double last_td_error() const { return last_td_error_; }
  int n_cells() const { return n_cells_; }
  int n_actions() const { return n_actions_; }
  double init_value() const { return init_value_; }
  std::vector<double>& table() { return q_; }
  const std::vector<double>& table() const { return q_; }

 private:
  int n_cells_;
  int n_actions_;
  double init_value_;
  double lr_;
  double gamma_;
  double last_td_error_ = 0.0;
  std::vector<double> q_;
};

}  // namespace wayex
