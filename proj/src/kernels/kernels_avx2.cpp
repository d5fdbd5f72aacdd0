#include "wayex/kernels.hpp"

// This translation unit is compiled with -mavx2 -mfma on x86-64. The dispatch
// layer only hands these pointers out after a runtime CPU check.

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cmath>

namespace wayex::kern {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

void gemv_avx2(const double* w, const double* x, const double* b, double* y,
               std::size_t rows, std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) {
    const double* row = w + i * cols;
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= cols; j += 4) {
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(row + j), _mm256_loadu_pd(x + j),
                            acc);
    }
    double tail = 0.0;
    for (; j < cols; ++j) tail += row[j] * x[j];
    const double sum = hsum(acc) + tail;
    y[i] = b ? sum + b[i] : sum;
  }
}

void gemv_t_acc_avx2(const double* w, const double* yg, double* xg,
                     std::size_t rows, std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) {
    const double* row = w + i * cols;
    const __m256d g = _mm256_set1_pd(yg[i]);
    std::size_t j = 0;
    for (; j + 4 <= cols; j += 4) {
      __m256d acc = _mm256_loadu_pd(xg + j);
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(row + j), g, acc);
      _mm256_storeu_pd(xg + j, acc);
    }
    for (; j < cols; ++j) xg[j] += row[j] * yg[i];
  }
}

void ger_acc_avx2(double* w, const double* yg, const double* x, double alpha,
                  std::size_t rows, std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) {
    double* row = w + i * cols;
    const double s = alpha * yg[i];
    const __m256d g = _mm256_set1_pd(s);
    std::size_t j = 0;
    for (; j + 4 <= cols; j += 4) {
      __m256d acc = _mm256_loadu_pd(row + j);
      acc = _mm256_fmadd_pd(g, _mm256_loadu_pd(x + j), acc);
      _mm256_storeu_pd(row + j, acc);
    }
    for (; j < cols; ++j) row[j] += s * x[j];
  }
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += a[i] * b[i];
  return hsum(acc) + tail;
}

double sq_l2_diff_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double tail = 0.0;
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    tail += d * d;
  }
  return hsum(acc) + tail;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_loadu_pd(y + i);
    acc = _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), acc);
    _mm256_storeu_pd(y + i, acc);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void adam_step_avx2(double* w, const double* g, double* m, double* v,
                    double lr, double beta1, double beta2, double eps,
                    double bias1, double bias2, std::size_t n) {
  const __m256d b1 = _mm256_set1_pd(beta1);
  const __m256d c1 = _mm256_set1_pd(1.0 - beta1);
  const __m256d b2 = _mm256_set1_pd(beta2);
  const __m256d c2 = _mm256_set1_pd(1.0 - beta2);
  const __m256d vlr = _mm256_set1_pd(lr);
  const __m256d veps = _mm256_set1_pd(eps);
  const __m256d vb1 = _mm256_set1_pd(bias1);
  const __m256d vb2 = _mm256_set1_pd(bias2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d gi = _mm256_loadu_pd(g + i);
    __m256d mi = _mm256_loadu_pd(m + i);
    __m256d vi = _mm256_loadu_pd(v + i);
    mi = _mm256_fmadd_pd(c1, gi, _mm256_mul_pd(b1, mi));
    vi = _mm256_fmadd_pd(c2, _mm256_mul_pd(gi, gi), _mm256_mul_pd(b2, vi));
    _mm256_storeu_pd(m + i, mi);
    _mm256_storeu_pd(v + i, vi);
    const __m256d mhat = _mm256_mul_pd(mi, vb1);
    const __m256d denom =
        _mm256_add_pd(_mm256_sqrt_pd(_mm256_mul_pd(vi, vb2)), veps);
    __m256d wi = _mm256_loadu_pd(w + i);
    wi = _mm256_sub_pd(wi, _mm256_div_pd(_mm256_mul_pd(vlr, mhat), denom));
    _mm256_storeu_pd(w + i, wi);
  }
  for (; i < n; ++i) {
    m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
    v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
    w[i] -= lr * (m[i] * bias1) / (std::sqrt(v[i] * bias2) + eps);
  }
}

}  // namespace

const Ops* avx2_ops_impl() {
  static const Ops ops{gemv_avx2,   gemv_t_acc_avx2, ger_acc_avx2,
                       dot_avx2,    sq_l2_diff_avx2, axpy_avx2,
                       adam_step_avx2, "avx2"};
  return &ops;
}

}  // namespace wayex::kern

#else

namespace wayex::kern {
const Ops* avx2_ops_impl() { return nullptr; }
}  // namespace wayex::kern

#endif
