#include "wayex/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wayex/kernels.hpp"

namespace wayex {

Mlp::Mlp(std::vector<std::size_t> sizes, bool tanh_output, Rng& rng)
    : sizes_(std::move(sizes)), tanh_output_(tanh_output) {
  if (sizes_.size() < 2)
    throw std::invalid_argument("Mlp needs at least input and output sizes");
  std::size_t total = 0;
  offsets_.reserve(layer_count());
  for (std::size_t l = 0; l < layer_count(); ++l) {
    offsets_.push_back(total);
    total += sizes_[l + 1] * sizes_[l] + sizes_[l + 1];
  }
  params_.resize(total);
  for (std::size_t l = 0; l < layer_count(); ++l) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(sizes_[l]));
    const std::size_t count = sizes_[l + 1] * sizes_[l] + sizes_[l + 1];
    for (std::size_t i = 0; i < count; ++i)
      params_[offsets_[l] + i] = rng.uniform(-bound, bound);
  }
}

Mlp::Workspace Mlp::make_workspace() const {
  Workspace ws;
  ws.act.resize(layer_count());
  ws.delta.resize(layer_count());
  for (std::size_t l = 0; l < layer_count(); ++l) {
    ws.act[l].resize(sizes_[l + 1]);
    ws.delta[l].resize(sizes_[l + 1]);
  }
  return ws;
}

std::span<const double> Mlp::forward(std::span<const double> x,
                                     Workspace& ws) const {
  if (x.size() != input_dim())
    throw std::invalid_argument("Mlp::forward: input size mismatch");
  const auto& ops = kern::active();
  const double* in = x.data();
  for (std::size_t l = 0; l < layer_count(); ++l) {
    const std::size_t rows = sizes_[l + 1];
    const std::size_t cols = sizes_[l];
    ops.gemv(params_.data() + weight_offset(l), in,
             params_.data() + bias_offset(l), ws.act[l].data(), rows, cols);
    const bool squash = (l + 1 < layer_count()) || tanh_output_;
    if (squash) {
      for (double& v : ws.act[l]) v = std::tanh(v);
    }
    in = ws.act[l].data();
  }
  return {ws.act.back().data(), output_dim()};
}

void Mlp::backward(std::span<const double> x, Workspace& ws,
                   std::span<const double> grad_out, std::vector<double>* grad,
                   double* grad_in) const {
  if (grad_out.size() != output_dim())
    throw std::invalid_argument("Mlp::backward: grad_out size mismatch");
  const auto& ops = kern::active();
  const std::size_t last = layer_count() - 1;

  // delta through the output activation
  auto& d_last = ws.delta[last];
  for (std::size_t i = 0; i < d_last.size(); ++i) {
    const double a = ws.act[last][i];
    d_last[i] = tanh_output_ ? grad_out[i] * (1.0 - a * a) : grad_out[i];
  }

  for (std::size_t l = last + 1; l-- > 0;) {
    const std::size_t rows = sizes_[l + 1];
    const std::size_t cols = sizes_[l];
    const double* input = (l == 0) ? x.data() : ws.act[l - 1].data();
    if (grad) {
      ops.ger_acc(grad->data() + weight_offset(l), ws.delta[l].data(), input,
                  1.0, rows, cols);
      ops.axpy(1.0, ws.delta[l].data(), grad->data() + bias_offset(l), rows);
    }
    if (l > 0) {
      auto& d_prev = ws.delta[l - 1];
      std::fill(d_prev.begin(), d_prev.end(), 0.0);
      ops.gemv_t_acc(params_.data() + weight_offset(l), ws.delta[l].data(),
                     d_prev.data(), rows, cols);
      for (std::size_t i = 0; i < d_prev.size(); ++i) {
        const double a = ws.act[l - 1][i];
        d_prev[i] *= (1.0 - a * a);  // hidden layers are always tanh
      }
    } else if (grad_in) {
      ops.gemv_t_acc(params_.data() + weight_offset(0), ws.delta[0].data(),
                     grad_in, rows, cols);
    }
  }
}

void Adam::step(std::vector<double>& w, const std::vector<double>& g) {
  ++t_;
  const double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
  const double bias1 = 1.0 / (1.0 - std::pow(beta1, static_cast<double>(t_)));
  const double bias2 = 1.0 / (1.0 - std::pow(beta2, static_cast<double>(t_)));
  kern::active().adam_step(w.data(), g.data(), m_.data(), v_.data(), lr_,
                           beta1, beta2, eps, bias1, bias2, w.size());
}

}  // namespace wayex
