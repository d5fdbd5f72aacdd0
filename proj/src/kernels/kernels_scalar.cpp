#include "wayex/kernels.hpp"

#include <cmath>

namespace wayex::kern {
namespace {

void gemv_scalar(const double* w, const double* x, const double* b, double* y,
                 std::size_t rows, std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) {
    const double* row = w + i * cols;
    double acc = 0.0;
    for (std::size_t j = 0; j < cols; ++j) acc += row[j] * x[j];
    y[i] = b ? acc + b[i] : acc;
  }
}

void gemv_t_acc_scalar(const double* w, const double* yg, double* xg,
                       std::size_t rows, std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) {
    const double* row = w + i * cols;
    const double g = yg[i];
    for (std::size_t j = 0; j < cols; ++j) xg[j] += row[j] * g;
  }
}

void ger_acc_scalar(double* w, const double* yg, const double* x, double alpha,
                    std::size_t rows, std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) {
    double* row = w + i * cols;
    const double g = alpha * yg[i];
    for (std::size_t j = 0; j < cols; ++j) row[j] += g * x[j];
  }
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sq_l2_diff_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void adam_step_scalar(double* w, const double* g, double* m, double* v,
                      double lr, double beta1, double beta2, double eps,
                      double bias1, double bias2, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
    v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
    w[i] -= lr * (m[i] * bias1) / (std::sqrt(v[i] * bias2) + eps);
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{gemv_scalar,   gemv_t_acc_scalar, ger_acc_scalar,
                       dot_scalar,    sq_l2_diff_scalar, axpy_scalar,
                       adam_step_scalar, "scalar"};
  return ops;
}

}  // namespace wayex::kern
