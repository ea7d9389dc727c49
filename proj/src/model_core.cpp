// Copyright 2026 the mixopt authors
// SPDX-License-Identifier: Apache-2.0

#include "mixopt/model_core.hpp"

#include <cmath>
#include <string>

#include "mixopt/errors.hpp"

namespace mixopt {

void SmoothnessSpec::validate() const {
  if (mu_x < 0 || mu_y < 0 || L_y < 0 || L_p_y < 0 || L_xy < 0) {
    throw ContractViolation("SmoothnessSpec: constants must be nonnegative");
  }
  if (mu_y > L_y) {
    throw ContractViolation("SmoothnessSpec: mu_y must not exceed L_y");
  }
  if (p != 2 && p != 3) {
    throw ContractViolation("SmoothnessSpec: p must be 2 or 3");
  }
}

void InexactOracleOutput::validate() const {
  if (delta < 0) throw ContractViolation("InexactOracleOutput: delta < 0");
  if (!(L > 0)) throw ContractViolation("InexactOracleOutput: L must be > 0");
}

Matrix SecondOrderOracle::hessian(const Vector& z) const {
  hess_calls_.fetch_add(1, std::memory_order_relaxed);
  Matrix h = hess_(z);
  if (h.asymmetry() > 1e-12) {
    throw NumericalError("SecondOrderOracle: Hessian asymmetry " +
                         std::to_string(h.asymmetry()));
  }
  return h;
}

TensorStepModel::TensorStepModel(const SecondOrderOracle& oracle, Vector anchor,
                                 int order, double regularization)
    : anchor_(std::move(anchor)),
      order_(order),
      regularization_(regularization) {
  if (order_ != 3) throw ContractViolation("TensorStepModel: order must be 3");
  if (!(regularization_ > 0)) {
    throw ContractViolation("TensorStepModel: regularization must be > 0");
  }
  anchor_value_ = oracle.value_grad(anchor_, anchor_grad_);
  anchor_hess_ = oracle.hessian(anchor_);
}

double bregman_divergence(const ScalarFn& rho, const Vector& x,
                          const Vector& y) {
  check_same_dim(x, y, "bregman_divergence");
  const Vector gx = rho.grad(x);
  check_same_dim(gx, x, "bregman_divergence (gradient)");
  return rho.value(y) - rho.value(x) - dot(gx, y - x);
}

ProxPower prox_power(int p, const Vector& x) {
  if (p < 2) throw ContractViolation("prox_power: p must be >= 2");
  const double r = norm(x);
  ProxPower out;
  out.value = std::pow(r, p) / static_cast<double>(p);
  const double scale = (p == 2) ? 1.0 : std::pow(r, p - 2);
  out.gradient = scale * x;
  return out;
}

Vector third_directional_fd(const FirstOrderOracle& oracle,
                            const Vector& anchor, const Vector& y, double tau) {
  if (!(tau > 0)) throw ContractViolation("third_directional_fd: tau must be > 0");
  Vector g0;
  oracle.value_grad(anchor, g0);
  return third_directional_fd(oracle, anchor, g0, y, tau);
}

Vector third_directional_fd(const FirstOrderOracle& oracle,
                            const Vector& anchor, const Vector& anchor_grad,
                            const Vector& y, double tau) {
  if (!(tau > 0)) throw ContractViolation("third_directional_fd: tau must be > 0");
  check_same_dim(anchor, y, "third_directional_fd");
  const Vector h = y - anchor;
  if (norm_sq(h) == 0.0) return Vector(anchor.size());

  Vector gp, gm;
  oracle.value_grad(anchor + tau * Vector(h), gp);
  oracle.value_grad(anchor - tau * Vector(h), gm);
  Vector out = gp + gm;
  axpy(-2.0, anchor_grad, out);
  out *= 1.0 / (tau * tau);
  return out;
}

Vector model_gradient(const TensorStepModel& model,
                      const FirstOrderOracle& oracle, const Vector& y,
                      double tau) {
  const Vector h = y - model.anchor();
  const double l3 = model.regularization() / 6.0;
  Vector g = model.anchor_gradient() + model.anchor_hessian().apply(h);
  const Vector surrogate =
      third_directional_fd(oracle, model.anchor(), model.anchor_gradient(), y,
                           tau);
  axpy(0.5, surrogate, g);
  axpy(l3 * norm_sq(h), h, g);
  return g;
}

bool check_delta_L_oracle(const FirstOrderOracle& exact,
                          const InexactOracleOutput& candidate, const Vector& x,
                          const std::vector<Vector>& probes, double tol) {
  candidate.validate();
  Vector grad_unused;
  for (const Vector& probe : probes) {
    const double f_probe = exact.value_grad(probe, grad_unused);
    const double lin = f_probe - candidate.f_delta -
                       dot(candidate.g_delta, probe - x);
    const double slack =
        tol * std::max({1.0, std::abs(f_probe), std::abs(candidate.f_delta)});
    if (lin < -slack) return false;
    const double quad =
        0.5 * candidate.L * norm_sq(probe - x) + candidate.delta;
    if (lin > quad + slack) return false;
  }
  return true;
}

}  // namespace mixopt
