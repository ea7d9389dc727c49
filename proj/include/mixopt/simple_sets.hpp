// Copyright 2026 the mixopt authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "mixopt/linalg.hpp"

namespace mixopt {

// Convex feasible set with closed-form projection: the whole space, a
// Euclidean ball, or an axis-aligned box.
class SimpleSet {
 public:
  enum class Kind { WholeSpace, EuclideanBall, Box };

  static SimpleSet whole_space(std::size_t dim);
  static SimpleSet euclidean_ball(Vector center, double radius);
  static SimpleSet box(Vector lower, Vector upper);

  Kind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  bool is_compact() const { return kind_ != Kind::WholeSpace; }
  double diameter() const;  // +inf for the whole space

  // Ball accessors; only valid for Kind::EuclideanBall.
  const Vector& center() const { return a_; }
  double radius() const { return radius_; }
  // Box accessors; only valid for Kind::Box.
  const Vector& lower() const { return a_; }
  const Vector& upper() const { return b_; }

  bool contains(const Vector& x, double tol = 1e-12) const;
  Vector project(const Vector& x) const;

 private:
  SimpleSet(Kind kind, std::size_t dim) : kind_(kind), dim_(dim) {}
  Kind kind_;
  std::size_t dim_;
  Vector a_;  // ball center / box lower
  Vector b_;  // box upper
  double radius_ = 0.0;
};

// argmin over the set of <g, x - anchor> + (gamma/2) ||x - anchor||^2,
// i.e. project(anchor - g/gamma).
Vector prox_linear_argmin(const SimpleSet& set, const Vector& g,
                          const Vector& anchor, double gamma);

// argmin over the set of <s, y> + d_{p+1}(y - base). Whole space is the
// closed form y = base - s ||s||^{(1-p)/p}; compact sets reduce to a scalar
// root find on t = ||y - base||, since for fixed t the minimizer is
// project(base - s / t^{p-1}).
Vector power_prox_argmin(const SimpleSet& set, const Vector& s,
                         const Vector& base, int p);

}  // namespace mixopt
