#pragma once

#include <cstddef>
#include <string_view>

// Dense double-precision kernels behind the learner and the waypoint matcher.
// Every operation has a scalar reference implementation; an AVX2 variant is
// selected at runtime when the CPU supports it. The AVX2 variants are
// equivalence-tested against the scalar ones (FMA and reordered reductions
// change the last ulps, so tests compare with a small relative tolerance).

namespace wayex::kern {

// y = W * x + b. W is row-major, rows x cols. b may be nullptr (treated as 0).
using GemvFn = void (*)(const double* w, const double* x, const double* b,
                        double* y, std::size_t rows, std::size_t cols);

// xg += W^T * yg. W row-major, rows x cols; yg has rows entries, xg cols.
using GemvTAccFn = void (*)(const double* w, const double* yg, double* xg,
                            std::size_t rows, std::size_t cols);

// W += alpha * yg * x^T (rank-1 accumulate into row-major rows x cols).
using GerAccFn = void (*)(double* w, const double* yg, const double* x,
                          double alpha, std::size_t rows, std::size_t cols);

using DotFn = double (*)(const double* a, const double* b, std::size_t n);

// sum_i (a[i] - b[i])^2
using SqL2DiffFn = double (*)(const double* a, const double* b, std::size_t n);

// y += alpha * x
using AxpyFn = void (*)(double alpha, const double* x, double* y,
                        std::size_t n);

// One Adam step over n parameters:
//   m = beta1*m + (1-beta1)*g
//   v = beta2*v + (1-beta2)*g*g
//   w -= lr * (m*bias1) / (sqrt(v*bias2) + eps)
// bias1/bias2 are the 1/(1-beta^t) corrections, precomputed by the caller.
using AdamStepFn = void (*)(double* w, const double* g, double* m, double* v,
                            double lr, double beta1, double beta2, double eps,
                            double bias1, double bias2, std::size_t n);

struct Ops {
  GemvFn gemv;
  GemvTAccFn gemv_t_acc;
  GerAccFn ger_acc;
  DotFn dot;
  SqL2DiffFn sq_l2_diff;
  AxpyFn axpy;
  AdamStepFn adam_step;
  const char* name;
};

const Ops& scalar_ops();

// nullptr when the binary or the CPU lacks AVX2+FMA.
const Ops* avx2_ops();

// Backend in use. Resolved once: the WAYEX_KERNELS environment variable
// ("scalar", "avx2", "auto") wins, otherwise best available.
const Ops& active();

// Force a backend by name ("scalar", "avx2", "auto"). Throws on an unknown
// name or an unavailable backend. Not thread-safe; call before training.
void select_backend(std::string_view name);

}  // namespace wayex::kern
