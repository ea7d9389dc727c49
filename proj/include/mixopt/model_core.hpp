// Copyright 2026 the mixopt authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "mixopt/linalg.hpp"

namespace mixopt {

// Smoothness / strong-convexity metadata of a two-block objective.
struct SmoothnessSpec {
  double mu_x = 0.0;   // strong convexity in x (>= 0)
  double mu_y = 0.0;   // strong convexity in y (> 0)
  double L_y = 0.0;    // Lipschitz constant of the y-gradient
  double L_p_y = 0.0;  // Lipschitz constant of the p-th y-derivative
  double L_xy = 0.0;   // joint gradient Lipschitz constant
  int p = 3;           // tensor order, 2 or 3

  void validate() const;
};

// Differentiable scalar function handle (used for reference functions rho).
struct ScalarFn {
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> grad;
};

// Value+gradient oracle with an atomic call counter. One evaluation returns
// the pair (f(z), grad f(z)) and bumps the counter by exactly one.
class FirstOrderOracle {
 public:
  // Fills grad (resized by the callee) and returns the value.
  using Fn = std::function<double(const Vector&, Vector&)>;

  explicit FirstOrderOracle(Fn fn) : fn_(std::move(fn)) {}
  FirstOrderOracle(const FirstOrderOracle&) = delete;
  FirstOrderOracle& operator=(const FirstOrderOracle&) = delete;
  virtual ~FirstOrderOracle() = default;

  double value_grad(const Vector& z, Vector& grad) const {
    grad_calls_.fetch_add(1, std::memory_order_relaxed);
    return fn_(z, grad);
  }
  std::uint64_t gradient_calls() const {
    return grad_calls_.load(std::memory_order_relaxed);
  }

 private:
  Fn fn_;
  mutable std::atomic<std::uint64_t> grad_calls_{0};
};

// Adds Hessian evaluation with its own counter. The optional third-order
// closure returns the directional form D^3 f(y)[h,h] for problems that know
// it analytically; it exists for tests and certificates, never for solving.
class SecondOrderOracle : public FirstOrderOracle {
 public:
  using HessFn = std::function<Matrix(const Vector&)>;
  using ThirdDirFn = std::function<Vector(const Vector&, const Vector&)>;

  SecondOrderOracle(Fn fn, HessFn hess, ThirdDirFn third = nullptr)
      : FirstOrderOracle(std::move(fn)),
        hess_(std::move(hess)),
        third_(std::move(third)) {}

  Matrix hessian(const Vector& z) const;
  std::uint64_t hessian_calls() const {
    return hess_calls_.load(std::memory_order_relaxed);
  }

  bool has_third_directional() const { return static_cast<bool>(third_); }
  Vector third_directional(const Vector& y, const Vector& h) const {
    return third_(y, h);
  }

 private:
  HessFn hess_;
  ThirdDirFn third_;
  mutable std::atomic<std::uint64_t> hess_calls_{0};
};

// Output of a (delta, L) oracle at one query point.
struct InexactOracleOutput {
  double f_delta = 0.0;
  Vector g_delta;
  double delta = 0.0;  // >= 0
  double L = 0.0;      // > 0

  void validate() const;
};

// Regularized third-order Taylor model anchored at y_hat. Caches the anchor
// value, gradient and Hessian once; the Hessian is never re-requested.
class TensorStepModel {
 public:
  TensorStepModel(const SecondOrderOracle& oracle, Vector anchor, int order,
                  double regularization);

  const Vector& anchor() const { return anchor_; }
  int order() const { return order_; }
  double regularization() const { return regularization_; }
  double anchor_value() const { return anchor_value_; }
  const Vector& anchor_gradient() const { return anchor_grad_; }
  const Matrix& anchor_hessian() const { return anchor_hess_; }

 private:
  Vector anchor_;
  int order_;
  double regularization_;
  double anchor_value_;
  Vector anchor_grad_;
  Matrix anchor_hess_;
};

// beta_rho(x, y) = rho(y) - rho(x) - <grad rho(x), y - x>.
double bregman_divergence(const ScalarFn& rho, const Vector& x,
                          const Vector& y);

// d_p(x) = (1/p) ||x||^p and its gradient ||x||^{p-2} x.
struct ProxPower {
  double value;
  Vector gradient;
};
ProxPower prox_power(int p, const Vector& x);

// Central finite-difference surrogate for D^3 f(anchor)[y-anchor]^2:
//   (1/tau^2) (grad f(a + tau h) + grad f(a - tau h) - 2 grad f(a)).
// The 3-call form evaluates the anchor gradient itself; the cached form
// takes it and spends 2 calls. h = 0 short-circuits to zero at no cost.
Vector third_directional_fd(const FirstOrderOracle& oracle,
                            const Vector& anchor, const Vector& y, double tau);
Vector third_directional_fd(const FirstOrderOracle& oracle,
                            const Vector& anchor, const Vector& anchor_grad,
                            const Vector& y, double tau);

// Inexact gradient of the regularized Taylor model (order 3, H = 6 L3):
//   grad f(a) + Hess f(a)[y-a] + (1/2) g_tau(y) + L3 ||y-a||^2 (y-a).
Vector model_gradient(const TensorStepModel& model,
                      const FirstOrderOracle& oracle, const Vector& y,
                      double tau);

// Verifies the (delta, L) sandwich at every probe:
//   0 <= f(x') - f_delta - <g_delta, x' - x> <= (L/2)||x'-x||^2 + delta.
// `tol` absorbs the round-off of the exact-side evaluation.
bool check_delta_L_oracle(const FirstOrderOracle& exact,
                          const InexactOracleOutput& candidate, const Vector& x,
                          const std::vector<Vector>& probes, double tol = 1e-9);

}  // namespace mixopt
