// Copyright 2026 the mixopt authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mixopt/linalg.hpp"
#include "mixopt/model_core.hpp"
#include "mixopt/simple_sets.hpp"

namespace mixopt::zoo {

// Generation parameters. Everything about an instance is reproducible from
// these; matrices are never serialized.
struct ZooParams {
  std::uint64_t seed = 1;
  std::size_t m = 64;
  std::size_t n = 16;
  double mu_x = 1.0;
  double mu_y = 1.0;
  double coupling = 0.5;  // spectral norm of the coupling block C
  double sigma = 1.0;     // quartic weight; 0 gives a purely quadratic model
  double outer_radius = 2.0;
  bool inner_ball = false;
  double inner_radius = 0.05;
  double inner_center_offset = 0.5;  // fraction of inner_radius
  double linear_scale = 1.0;
  std::size_t quartic_dirs = 4;

  std::string to_string() const;
  static ZooParams parse(const std::string& text);
};

// Synthetic min-min instance
//   F(x,y) = 1/2 x'Ax + b'x + 1/2 y'By + c'y + x'Cy
//            + (sigma/12) sum_j (d_j'y)^4
// with certified smoothness/strong-convexity constants.
class QuadQuarticMinMin {
 public:
  ZooParams params;
  Matrix A, B, C;  // C is m x n
  Vector b, c;
  std::vector<Vector> quartic;  // directions d_j, sum ||d_j||^4 = 1
  double sigma = 0.0;

  SimpleSet outer_set = SimpleSet::whole_space(1);
  SimpleSet inner_set = SimpleSet::whole_space(1);
  SmoothnessSpec smooth;
  double cert_radius = 0.0;     // constants certified on ||x||,||y|| <= this
  double inner_gap_bound = 0.0; // analytic upper bound on the D of the theory

  std::size_t dim_x() const { return A.rows(); }
  std::size_t dim_y() const { return B.rows(); }

  double value(const Vector& x, const Vector& y) const;
  Vector grad_x(const Vector& x, const Vector& y) const;
  Vector grad_y(const Vector& x, const Vector& y) const;
  Matrix hess_yy(const Vector& y) const;
  // D^3_yyy F(x,y)[h,h]; x-independent.
  Vector third_yyy_dir(const Vector& y, const Vector& h) const;
  Matrix joint_hessian(const Vector& y) const;
  Vector joint_gradient(const Vector& x, const Vector& y) const;
};

using InstancePtr = std::shared_ptr<const QuadQuarticMinMin>;

InstancePtr make_instance(const ZooParams& params);

// Value/gradient/Hessian oracle of y -> F(x, y) at fixed x, carrying the
// analytic third-derivative closure.
std::unique_ptr<SecondOrderOracle> make_inner_oracle(InstancePtr prob,
                                                     Vector x);

struct ReferenceSolution {
  Vector x;
  Vector y;
  double value = 0.0;
  double kkt_residual = 0.0;
};

// Joint projected-Newton solve of min_{x in Qx} min_{y in Qy} F to the given
// KKT residual. This is the brute-force oracle behind every derived test
// value.
ReferenceSolution reference_solve(const QuadQuarticMinMin& prob, double tol);

// Inner solve only: min_{y in Qy} F(x, y) at fixed x.
ReferenceSolution reference_inner_solve(const QuadQuarticMinMin& prob,
                                        const Vector& x, double tol);

// Central finite differences against the analytic derivatives.
// order 1: both partial gradients; order 2: the y-Hessian; order 3: the
// directional third derivative. Returns the max relative deviation.
double derivative_check(const QuadQuarticMinMin& prob, const Vector& x,
                        const Vector& y, int order);

}  // namespace mixopt::zoo
