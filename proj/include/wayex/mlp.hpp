#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wayex/rng.hpp"

// Small fully-connected network with tanh hidden layers, a linear output,
// and hand-written backpropagation. Parameters live in one flat vector
// (per layer: row-major weights, then biases) so the optimizer and the
// checkpoint format can treat them uniformly.

namespace wayex {

class Mlp {
 public:
  // Activation caches for one forward/backward pass.
  struct Workspace {
    std::vector<std::vector<double>> act;    // post-activation per layer
    std::vector<std::vector<double>> delta;  // backprop scratch
  };

  // sizes = {input, hidden..., output}. Weights and biases start uniform in
  // +-1/sqrt(fan_in). tanh_output additionally squashes the last layer.
  Mlp(std::vector<std::size_t> sizes, bool tanh_output, Rng& rng);

  Workspace make_workspace() const;

  // Returns the output activation (view into ws).
  std::span<const double> forward(std::span<const double> x,
                                  Workspace& ws) const;

  // Backpropagates dL/dy from the pass cached in ws. When grad is non-null,
  // parameter gradients are accumulated into it (same layout as params()).
  // When grad_in is non-null, dL/dx is accumulated into it.
  void backward(std::span<const double> x, Workspace& ws,
                std::span<const double> grad_out, std::vector<double>* grad,
                double* grad_in) const;

  std::size_t input_dim() const { return sizes_.front(); }
  std::size_t output_dim() const { return sizes_.back(); }
  std::size_t param_count() const { return params_.size(); }
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  bool tanh_output() const { return tanh_output_; }

  std::vector<double>& params() { return params_; }
  const std::vector<double>& params() const { return params_; }

 private:
  std::size_t layer_count() const { return sizes_.size() - 1; }
  std::size_t weight_offset(std::size_t layer) const {
    return offsets_[layer];
  }
  std::size_t bias_offset(std::size_t layer) const {
    return offsets_[layer] + sizes_[layer + 1] * sizes_[layer];
  }

  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> offsets_;  // flat offset of each layer's weights
  std::vector<double> params_;
  bool tanh_output_ = false;
};

// Adam over a flat parameter vector.
class Adam {
 public:
  Adam(std::size_t n, double lr)
      : lr_(lr), m_(n, 0.0), v_(n, 0.0) {}

  void step(std::vector<double>& w, const std::vector<double>& g);

  double lr() const { return lr_; }

 private:
  double lr_;
  long t_ = 0;
  std::vector<double> m_, v_;
};

}  // namespace wayex
