// Copyright 2026 the mixopt authors
// SPDX-License-Identifier: Apache-2.0

#include "mixopt/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace mixopt::kernels {

namespace {

struct Table {
  Isa isa;
  double (*dot)(std::size_t, const double*, const double*);
  double (*nrm2_sq)(std::size_t, const double*);
  void (*axpy)(std::size_t, double, const double*, double*);
  void (*axpby)(std::size_t, double, const double*, double, double*);
  void (*scal)(std::size_t, double, double*);
  void (*gemv)(std::size_t, std::size_t, const double*, const double*,
               double*);
  void (*gemv_t_acc)(std::size_t, std::size_t, const double*, const double*,
                     double*);
};

constexpr Table kScalarTable = {Isa::Scalar,     scalar::dot,
                                scalar::nrm2_sq, scalar::axpy,
                                scalar::axpby,   scalar::scal,
                                scalar::gemv,    scalar::gemv_t_acc};

#if defined(MIXOPT_HAVE_AVX2)
constexpr Table kAvx2Table = {Isa::Avx2,     avx2::dot,  avx2::nrm2_sq,
                              avx2::axpy,    avx2::axpby, avx2::scal,
                              avx2::gemv,    avx2::gemv_t_acc};
#endif
#if defined(MIXOPT_HAVE_NEON)
constexpr Table kNeonTable = {Isa::Neon,     neon::dot,  neon::nrm2_sq,
                              neon::axpy,    neon::axpby, neon::scal,
                              neon::gemv,    neon::gemv_t_acc};
#endif

Table select_table() {
  const char* env = std::getenv("MIXOPT_KERNELS");
  const bool force_scalar = env != nullptr && std::strcmp(env, "scalar") == 0;
  if (force_scalar) return kScalarTable;
#if defined(MIXOPT_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return kAvx2Table;
  }
#endif
#if defined(MIXOPT_HAVE_NEON)
  return kNeonTable;
#endif
  return kScalarTable;
}

const Table& table() {
  static const Table t = select_table();
  return t;
}

}  // namespace

Isa active_isa() { return table().isa; }

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
    default:
      return "scalar";
  }
}

double dot(std::size_t n, const double* x, const double* y) {
  return table().dot(n, x, y);
}

double nrm2_sq(std::size_t n, const double* x) { return table().nrm2_sq(n, x); }

void axpy(std::size_t n, double a, const double* x, double* y) {
  table().axpy(n, a, x, y);
}

void axpby(std::size_t n, double a, const double* x, double b, double* y) {
  table().axpby(n, a, x, b, y);
}

void scal(std::size_t n, double a, double* x) { table().scal(n, a, x); }

void gemv(std::size_t r, std::size_t c, const double* a, const double* x,
          double* y) {
  table().gemv(r, c, a, x, y);
}

void gemv_t_acc(std::size_t r, std::size_t c, const double* a, const double* x,
                double* y) {
  table().gemv_t_acc(r, c, a, x, y);
}

}  // namespace mixopt::kernels
