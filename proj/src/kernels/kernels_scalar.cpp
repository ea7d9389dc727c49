// Copyright 2026 the mixopt authors
// SPDX-License-Identifier: Apache-2.0

#include "mixopt/kernels.hpp"

namespace mixopt::kernels::scalar {

double dot(std::size_t n, const double* x, const double* y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double nrm2_sq(std::size_t n, const double* x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

void axpy(std::size_t n, double a, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void axpby(std::size_t n, double a, const double* x, double b, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

void scal(std::size_t n, double a, double* x) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void gemv(std::size_t r, std::size_t c, const double* a, const double* x,
          double* y) {
  for (std::size_t i = 0; i < r; ++i) y[i] = dot(c, a + i * c, x);
}

void gemv_t_acc(std::size_t r, std::size_t c, const double* a, const double* x,
                double* y) {
  for (std::size_t i = 0; i < r; ++i) axpy(c, x[i], a + i * c, y);
}

}  // namespace mixopt::kernels::scalar
