#include "wayex/agent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wayex/errors.hpp"
#include "wayex/kernels.hpp"

namespace wayex {

namespace {

std::vector<std::size_t> net_sizes(std::size_t in,
                                   const std::vector<std::size_t>& hidden,
                                   std::size_t out) {
  std::vector<std::size_t> sizes;
  sizes.reserve(hidden.size() + 2);
  sizes.push_back(in);
  sizes.insert(sizes.end(), hidden.begin(), hidden.end());
  sizes.push_back(out);
  return sizes;
}

}  // namespace

ActorCritic::ActorCritic(std::size_t state_dim, std::size_t action_dim,
                         ActorCriticConfig cfg, Rng& rng)
    : cfg_(std::move(cfg)),
      state_dim_(state_dim),
      action_dim_(action_dim),
      actor_(net_sizes(state_dim, cfg_.hidden, action_dim), true, rng),
      critic_(net_sizes(state_dim + action_dim, cfg_.hidden, 1), false, rng),
      actor_target_(actor_),
      critic_target_(critic_),
      actor_opt_(actor_.param_count(), cfg_.actor_lr),
      critic_opt_(critic_.param_count(), cfg_.critic_lr),
      actor_ws_(actor_.make_workspace()),
      critic_ws_(critic_.make_workspace()),
      actor_target_ws_(actor_target_.make_workspace()),
      critic_target_ws_(critic_target_.make_workspace()),
      actor_grad_(actor_.param_count(), 0.0),
      critic_grad_(critic_.param_count(), 0.0),
      input_scratch_(state_dim + action_dim, 0.0),
      input_grad_scratch_(state_dim + action_dim, 0.0) {}

std::vector<double> ActorCritic::flatten(const StateVector& state) const {
  std::vector<double> x;
  x.reserve(state.params.size() + state.goal.size());
  x.insert(x.end(), state.params.begin(), state.params.end());
  x.insert(x.end(), state.goal.begin(), state.goal.end());
  if (x.size() != state_dim_)
    throw std::invalid_argument("state dimensionality mismatch");
  return x;
}

ActionVector ActorCritic::act(const StateVector& state, bool explore,
                              Rng& rng) {
  const auto x = flatten(state);
  const auto out = actor_.forward(x, actor_ws_);
  ActionVector action;
  action.components.assign(out.begin(), out.end());
  if (explore) {
    for (double& c : action.components)
      c += rng.normal(0.0, cfg_.action_noise);
  }
  clamp_action(action);
  return action;
}

double ActorCritic::target_value(const StateVector& state) {
  const auto x = flatten(state);
  const auto a = actor_target_.forward(x, actor_target_ws_);
  std::copy(x.begin(), x.end(), input_scratch_.begin());
  std::copy(a.begin(), a.end(), input_scratch_.begin() + state_dim_);
  return critic_target_.forward(input_scratch_, critic_target_ws_)[0];
}

double ActorCritic::live_value(const StateVector& state,
                               const ActionVector& action) {
  const auto x = flatten(state);
  std::copy(x.begin(), x.end(), input_scratch_.begin());
  std::copy(action.components.begin(), action.components.end(),
            input_scratch_.begin() + state_dim_);
  return critic_.forward(input_scratch_, critic_ws_)[0];
}

ActorCritic::UpdateDiag ActorCritic::update(
    const std::vector<const TransitionRecord*>& batch) {
  if (batch.empty())
    throw std::invalid_argument("update needs a non-empty batch");
  const double inv_b = 1.0 / static_cast<double>(batch.size());
  UpdateDiag diag;

  // Critic regression toward r + gamma * (1-done) * Q'(s', actor'(s')).
  std::fill(critic_grad_.begin(), critic_grad_.end(), 0.0);
  for (const TransitionRecord* t : batch) {
    double y = t->reward;
    if (!t->done) y += cfg_.gamma * target_value(t->next_state);
    const double q = live_value(t->state, t->action);
    const double err = q - y;
    diag.critic_loss += err * err * inv_b;
    const double grad_out = 2.0 * err * inv_b;
    critic_.backward(input_scratch_, critic_ws_, {&grad_out, 1}, &critic_grad_,
                     nullptr);
  }
  critic_opt_.step(critic_.params(), critic_grad_);

  // Actor ascends the critic: minimize -Q(s, actor(s)).
  std::fill(actor_grad_.begin(), actor_grad_.end(), 0.0);
  for (const TransitionRecord* t : batch) {
    const auto x = flatten(t->state);
    const auto a = actor_.forward(x, actor_ws_);
    std::copy(x.begin(), x.end(), input_scratch_.begin());
    std::copy(a.begin(), a.end(), input_scratch_.begin() + state_dim_);
    const double q = critic_.forward(input_scratch_, critic_ws_)[0];
    diag.actor_objective += q * inv_b;
    const double grad_out = 1.0;
    std::fill(input_grad_scratch_.begin(), input_grad_scratch_.end(), 0.0);
    critic_.backward(input_scratch_, critic_ws_, {&grad_out, 1}, nullptr,
                     input_grad_scratch_.data());
    // dL/da = -(1/B) dQ/da
    std::vector<double> grad_a(action_dim_);
    for (std::size_t i = 0; i < action_dim_; ++i)
      grad_a[i] = -inv_b * input_grad_scratch_[state_dim_ + i];
    actor_.backward(x, actor_ws_, grad_a, &actor_grad_, nullptr);
  }
  actor_opt_.step(actor_.params(), actor_grad_);

  soft_update_targets();

  if (!std::isfinite(diag.critic_loss) || !std::isfinite(diag.actor_objective))
    throw TrainError("non-finite loss in actor-critic update (critic_loss=" +
                     std::to_string(diag.critic_loss) + ", actor_objective=" +
                     std::to_string(diag.actor_objective) + ")");
  return diag;
}

void ActorCritic::soft_update_targets() {
  const double tau = cfg_.tau;
  auto blend = [tau](const std::vector<double>& live, std::vector<double>& tgt) {
    for (std::size_t i = 0; i < live.size(); ++i)
      tgt[i] = tau * live[i] + (1.0 - tau) * tgt[i];
  };
  blend(actor_.params(), actor_target_.params());
  blend(critic_.params(), critic_target_.params());
}

TabularQ::TabularQ(int n_cells, int n_actions, double init_value, double lr,
                   double gamma)
    : n_cells_(n_cells),
      n_actions_(n_actions),
      init_value_(init_value),
      lr_(lr),
      gamma_(gamma),
      q_(static_cast<std::size_t>(n_cells) * n_actions, init_value) {}

int TabularQ::greedy_action(int cell) const {
  const std::size_t base = static_cast<std::size_t>(cell) * n_actions_;
  int best = 0;
  for (int a = 1; a < n_actions_; ++a) {
    if (q_[base + a] > q_[base + best]) best = a;
  }
  return best;
}

double TabularQ::max_q(int cell) const {
  const std::size_t base = static_cast<std::size_t>(cell) * n_actions_;
  double best = q_[base];
  for (int a = 1; a < n_actions_; ++a) best = std::max(best, q_[base + a]);
  return best;
}

void TabularQ::update(int cell, int action, double reward, int next_cell,
                      bool done) {
  const double target = done ? reward : reward + gamma_ * max_q(next_cell);
  double& q = q_[static_cast<std::size_t>(cell) * n_actions_ + action];
  last_td_error_ = target - q;
  q += lr_ * last_td_error_;
}

}  // namespace wayex
