// Copyright 2026 the mixopt authors
// SPDX-License-Identifier: Apache-2.0

#include "mixopt/simple_sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mixopt/errors.hpp"

namespace mixopt {

SimpleSet SimpleSet::whole_space(std::size_t dim) {
  if (dim == 0) throw ContractViolation("SimpleSet: dim must be positive");
  return SimpleSet(Kind::WholeSpace, dim);
}

SimpleSet SimpleSet::euclidean_ball(Vector center, double radius) {
  if (center.empty()) throw ContractViolation("SimpleSet: empty center");
  if (!(radius > 0)) throw ContractViolation("SimpleSet: radius must be > 0");
  SimpleSet s(Kind::EuclideanBall, center.size());
  s.a_ = std::move(center);
  s.radius_ = radius;
  return s;
}

SimpleSet SimpleSet::box(Vector lower, Vector upper) {
  check_same_dim(lower, upper, "SimpleSet::box");
  if (lower.empty()) throw ContractViolation("SimpleSet: empty box");
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(lower[i] <= upper[i])) {
      throw ContractViolation("SimpleSet: box lower bound exceeds upper");
    }
  }
  SimpleSet s(Kind::Box, lower.size());
  s.a_ = std::move(lower);
  s.b_ = std::move(upper);
  return s;
}

double SimpleSet::diameter() const {
  switch (kind_) {
    case Kind::WholeSpace:
      return std::numeric_limits<double>::infinity();
    case Kind::EuclideanBall:
      return 2.0 * radius_;
    case Kind::Box:
      return norm(b_ - a_);
  }
  return 0.0;
}

bool SimpleSet::contains(const Vector& x, double tol) const {
  if (x.size() != dim_) {
    throw ContractViolation("SimpleSet::contains: dimension mismatch");
  }
  switch (kind_) {
    case Kind::WholeSpace:
      return true;
    case Kind::EuclideanBall:
      return norm(x - a_) <= radius_ + tol;
    case Kind::Box:
      for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] < a_[i] - tol || x[i] > b_[i] + tol) return false;
      }
      return true;
  }
  return false;
}

Vector SimpleSet::project(const Vector& x) const {
  if (x.size() != dim_) {
    throw ContractViolation("SimpleSet::project: dimension mismatch");
  }
  switch (kind_) {
    case Kind::WholeSpace:
      return x;
    case Kind::EuclideanBall: {
      const Vector d = x - a_;
      const double r = norm(d);
      if (r <= radius_) return x;
      return a_ + (radius_ / r) * d;
    }
    case Kind::Box: {
      Vector y(dim_);
      for (std::size_t i = 0; i < dim_; ++i) {
        y[i] = std::clamp(x[i], a_[i], b_[i]);
      }
      return y;
    }
  }
  return x;
}

Vector prox_linear_argmin(const SimpleSet& set, const Vector& g,
                          const Vector& anchor, double gamma) {
  if (!(gamma > 0)) {
    throw ContractViolation("prox_linear_argmin: gamma must be > 0");
  }
  check_same_dim(g, anchor, "prox_linear_argmin");
  return set.project(anchor - (1.0 / gamma) * Vector(g));
}

Vector power_prox_argmin(const SimpleSet& set, const Vector& s,
                         const Vector& base, int p) {
  if (p < 2) throw ContractViolation("power_prox_argmin: p must be >= 2");
  check_same_dim(s, base, "power_prox_argmin");
  if (!all_finite(s)) {
    throw ContractViolation("power_prox_argmin: non-finite linear term");
  }

  const double s_norm = norm(s);
  if (s_norm == 0.0) return set.project(base);

  if (set.kind() == SimpleSet::Kind::WholeSpace) {
    // ||w||^{p-1} w = -s  =>  w = -s ||s||^{(1-p)/p}
    return base - std::pow(s_norm, (1.0 - p) / static_cast<double>(p)) *
                      Vector(s);
  }

  // Self-consistency in t = ||y(t) - base|| with
  // y(t) = project(base - s / t^{p-1}); the gap is strictly decreasing in t.
  const auto candidate = [&](double t) {
    return set.project(base - std::pow(t, 1 - p) * Vector(s));
  };
  const auto gap = [&](double t) { return norm(candidate(t) - base) - t; };

  double hi = std::max(std::pow(s_norm, 1.0 / p), 1e-8);
  int expansions = 0;
  while (gap(hi) > 0.0) {
    hi *= 2.0;
    if (++expansions > 200) {
      throw NumericalError("power_prox_argmin: failed to bracket from above");
    }
  }
  double lo = hi / 2.0;
  while (gap(lo) < 0.0) {
    lo /= 2.0;
    if (lo < 1e-250) return set.project(base);  // stationary at the base
  }

  for (int it = 0; it < 200 && (hi - lo) > 1e-15 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) >= 0.0 ? lo : hi) = mid;
  }
  const double t = 0.5 * (lo + hi);
  const Vector y = candidate(t);
  if (std::abs(norm(y - base) - t) > 1e-10 * std::max(1.0, t)) {
    throw NumericalError("power_prox_argmin: root find did not converge");
  }
  return y;
}

}  // namespace mixopt
