// Copyright 2026 the mixopt authors
// SPDX-License-Identifier: Apache-2.0

#include "mixopt/kernels.hpp"

#if defined(MIXOPT_HAVE_NEON)

#include <arm_neon.h>

namespace mixopt::kernels::neon {

double dot(std::size_t n, const double* x, const double* y) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
  }
  for (; i + 2 <= n; i += 2) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double nrm2_sq(std::size_t n, const double* x) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t v = vld1q_f64(x + i);
    acc = vfmaq_f64(acc, v, v);
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

void axpy(std::size_t n, double a, const double* x, double* y) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t vy = vld1q_f64(y + i);
    vy = vfmaq_f64(vy, va, vld1q_f64(x + i));
    vst1q_f64(y + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void axpby(std::size_t n, double a, const double* x, double b, double* y) {
  const float64x2_t va = vdupq_n_f64(a);
  const float64x2_t vb = vdupq_n_f64(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t vy = vmulq_f64(vb, vld1q_f64(y + i));
    vy = vfmaq_f64(vy, va, vld1q_f64(x + i));
    vst1q_f64(y + i, vy);
  }
  for (; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

void scal(std::size_t n, double a, double* x) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) x[i] *= a;
}

void gemv(std::size_t r, std::size_t c, const double* a, const double* x,
          double* y) {
  for (std::size_t i = 0; i < r; ++i) y[i] = dot(c, a + i * c, x);
}

void gemv_t_acc(std::size_t r, std::size_t c, const double* a, const double* x,
                double* y) {
  for (std::size_t i = 0; i < r; ++i) axpy(c, x[i], a + i * c, y);
}

}  // namespace mixopt::kernels::neon

#endif  // MIXOPT_HAVE_NEON
