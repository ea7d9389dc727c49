// Copyright 2026 the mixopt authors
// SPDX-License-Identifier: Apache-2.0

#include "mixopt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mixopt/errors.hpp"
#include "mixopt/kernels.hpp"

namespace mixopt {

void check_same_dim(const Vector& a, const Vector& b, const char* where) {
  if (a.size() != b.size()) {
    throw ContractViolation(std::string(where) + ": dimension mismatch (" +
                            std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()) + ")");
  }
}

Vector& Vector::operator+=(const Vector& o) {
  check_same_dim(*this, o, "Vector::operator+=");
  kernels::axpy(v_.size(), 1.0, o.data(), v_.data());
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  check_same_dim(*this, o, "Vector::operator-=");
  kernels::axpy(v_.size(), -1.0, o.data(), v_.data());
  return *this;
}

Vector& Vector::operator*=(double a) {
  kernels::scal(v_.size(), a, v_.data());
  return *this;
}

void Vector::fill(double value) { std::fill(v_.begin(), v_.end(), value); }

Vector operator+(Vector a, const Vector& b) {
  a += b;
  return a;
}

Vector operator-(Vector a, const Vector& b) {
  a -= b;
  return a;
}

Vector operator*(double a, Vector x) {
  x *= a;
  return x;
}

Vector operator-(Vector x) {
  x *= -1.0;
  return x;
}

double dot(const Vector& a, const Vector& b) {
  check_same_dim(a, b, "dot");
  return kernels::dot(a.size(), a.data(), b.data());
}

double norm_sq(const Vector& x) { return kernels::nrm2_sq(x.size(), x.data()); }

double norm(const Vector& x) { return std::sqrt(norm_sq(x)); }

void axpy(double a, const Vector& x, Vector& y) {
  check_same_dim(x, y, "axpy");
  kernels::axpy(x.size(), a, x.data(), y.data());
}

Vector lin_comb(double a, const Vector& x, double b, const Vector& y) {
  check_same_dim(x, y, "lin_comb");
  Vector out = y;
  kernels::axpby(x.size(), a, x.data(), b, out.data());
  return out;
}

bool all_finite(const Vector& x) {
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) {
    throw ContractViolation("Matrix::apply: dimension mismatch");
  }
  Vector y(rows_);
  kernels::gemv(rows_, cols_, v_.data(), x.data(), y.data());
  return y;
}

Vector Matrix::apply_transpose(const Vector& x) const {
  if (x.size() != rows_) {
    throw ContractViolation("Matrix::apply_transpose: dimension mismatch");
  }
  Vector y(cols_);
  kernels::gemv_t_acc(rows_, cols_, v_.data(), x.data(), y.data());
  return y;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw ContractViolation("Matrix::operator+=: shape mismatch");
  }
  kernels::axpy(v_.size(), 1.0, o.v_.data(), v_.data());
  return *this;
}

Matrix& Matrix::operator*=(double a) {
  kernels::scal(v_.size(), a, v_.data());
  return *this;
}

void Matrix::add_diagonal(double a) {
  const std::size_t n = std::min(rows_, cols_);
  for (std::size_t i = 0; i < n; ++i) (*this)(i, i) += a;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : v_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::asymmetry() const {
  const double scale = std::max(1.0, max_abs());
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    }
  }
  return worst / scale;
}

SymmetricEigen symmetric_eigen(Matrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) {
    throw ContractViolation("symmetric_eigen: matrix must be square");
  }
  Matrix v = Matrix::identity(n);

  auto off_norm_sq = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    }
    return s;
  };

  const double scale = std::max(1.0, a.max_abs());
  const double tol = 1e-30 * scale * scale * static_cast<double>(n * n);
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps && off_norm_sq() > tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        double t;  // tan of the rotation angle, the root smaller in magnitude
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  SymmetricEigen out;
  out.eigenvalues = Vector(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) {
      out.eigenvectors(i, j) = v(i, order[j]);
    }
  }
  return out;
}

Cholesky::Cholesky(Matrix a) : l_(std::move(a)) {
  const std::size_t n = l_.rows();
  if (n != l_.cols()) {
    throw ContractViolation("Cholesky: matrix must be square");
  }
  for (std::size_t j = 0; j < n; ++j) {
    double d = l_(j, j) - kernels::nrm2_sq(j, l_.row(j));
    if (!(d > 0.0)) {
      throw NumericalError("Cholesky: matrix is not positive definite (pivot " +
                           std::to_string(d) + " at " + std::to_string(j) +
                           ")");
    }
    d = std::sqrt(d);
    l_(j, j) = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      l_(i, j) = (l_(i, j) - kernels::dot(j, l_.row(i), l_.row(j))) / d;
    }
  }
  // zero the strict upper triangle so row() of the factor is clean
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) l_(i, j) = 0.0;
  }
}

Vector Cholesky::solve(const Vector& b) const {
  const std::size_t n = l_.rows();
  if (b.size() != n) throw ContractViolation("Cholesky::solve: bad dimension");
  Vector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = (b[i] - kernels::dot(i, l_.row(i), y.data())) / l_(i, i);
  }
  Vector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = y[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= l_(k, ii) * x[k];
    x[ii] = s / l_(ii, ii);
  }
  return x;
}

}  // namespace mixopt
