// Copyright 2026 the mixopt authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string_view>

// Dense double-precision kernels behind all vector/matrix arithmetic.
// A scalar reference implementation always exists; on x86-64 an AVX2+FMA
// variant and on AArch64 a NEON variant are compiled in and selected once
// at startup. The environment variable MIXOPT_KERNELS=scalar|avx2|neon
// overrides the automatic pick (falling back to scalar if unavailable).

namespace mixopt::kernels {

enum class Isa { Scalar, Avx2, Neon };

Isa active_isa();
std::string_view isa_name(Isa isa);

double dot(std::size_t n, const double* x, const double* y);
double nrm2_sq(std::size_t n, const double* x);
// y += a*x
void axpy(std::size_t n, double a, const double* x, double* y);
// y = a*x + b*y
void axpby(std::size_t n, double a, const double* x, double b, double* y);
void scal(std::size_t n, double a, double* x);
// Row-major mat-vec: y = A*x, A is r x c. y must not alias x or A.
void gemv(std::size_t r, std::size_t c, const double* a, const double* x,
          double* y);
// y += A^T*x, A is r x c, x has r entries, y has c entries.
void gemv_t_acc(std::size_t r, std::size_t c, const double* a, const double* x,
                double* y);

// Reference implementations; every SIMD variant is equivalence-tested
// against these.
namespace scalar {
double dot(std::size_t n, const double* x, const double* y);
double nrm2_sq(std::size_t n, const double* x);
void axpy(std::size_t n, double a, const double* x, double* y);
void axpby(std::size_t n, double a, const double* x, double b, double* y);
void scal(std::size_t n, double a, double* x);
void gemv(std::size_t r, std::size_t c, const double* a, const double* x,
          double* y);
void gemv_t_acc(std::size_t r, std::size_t c, const double* a, const double* x,
                double* y);
}  // namespace scalar

#if defined(MIXOPT_HAVE_AVX2)
namespace avx2 {
double dot(std::size_t n, const double* x, const double* y);
double nrm2_sq(std::size_t n, const double* x);
void axpy(std::size_t n, double a, const double* x, double* y);
void axpby(std::size_t n, double a, const double* x, double b, double* y);
void scal(std::size_t n, double a, double* x);
void gemv(std::size_t r, std::size_t c, const double* a, const double* x,
          double* y);
void gemv_t_acc(std::size_t r, std::size_t c, const double* a, const double* x,
                double* y);
}  // namespace avx2
#endif

#if defined(MIXOPT_HAVE_NEON)
namespace neon {
double dot(std::size_t n, const double* x, const double* y);
double nrm2_sq(std::size_t n, const double* x);
void axpy(std::size_t n, double a, const double* x, double* y);
void axpby(std::size_t n, double a, const double* x, double b, double* y);
void scal(std::size_t n, double a, double* x);
void gemv(std::size_t r, std::size_t c, const double* a, const double* x,
          double* y);
void gemv_t_acc(std::size_t r, std::size_t c, const double* a, const double* x,
                double* y);
}  // namespace neon
#endif

}  // namespace mixopt::kernels
