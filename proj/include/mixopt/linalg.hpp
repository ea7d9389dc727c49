// Copyright 2026 the mixopt authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace mixopt {

// Dense column vector. All arithmetic goes through the dispatched kernels.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n, double fill = 0.0) : v_(n, fill) {}
  Vector(std::initializer_list<double> xs) : v_(xs) {}

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  double& operator[](std::size_t i) { return v_[i]; }
  double operator[](std::size_t i) const { return v_[i]; }
  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }
  auto begin() { return v_.begin(); }
  auto end() { return v_.end(); }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(double a);
  void fill(double value);

 private:
  std::vector<double> v_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(double a, Vector x);
Vector operator-(Vector x);

double dot(const Vector& a, const Vector& b);
double norm_sq(const Vector& x);
double norm(const Vector& x);
// y += a*x
void axpy(double a, const Vector& x, Vector& y);
// a*x + b*y
Vector lin_comb(double a, const Vector& x, double b, const Vector& y);
bool all_finite(const Vector& x);
// Throws ContractViolation unless sizes match.
void check_same_dim(const Vector& a, const Vector& b, const char* where);

// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), v_(rows * cols, fill) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return v_[i * cols_ + j];
  }
  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }
  const double* row(std::size_t i) const { return v_.data() + i * cols_; }

  Vector apply(const Vector& x) const;            // A x
  Vector apply_transpose(const Vector& x) const;  // A^T x
  Matrix transpose() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator*=(double a);
  void add_diagonal(double a);
  double max_abs() const;
  // Max relative asymmetry |a_ij - a_ji| / scale.
  double asymmetry() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> v_;
};

// Eigendecomposition of a symmetric matrix, A = V diag(w) V^T with
// orthonormal columns in V and eigenvalues ascending.
struct SymmetricEigen {
  Vector eigenvalues;
  Matrix eigenvectors;
};

// Cyclic Jacobi. Intended for the desk-scale dimensions used here.
SymmetricEigen symmetric_eigen(Matrix a);

// Cholesky factorization of an SPD matrix; throws NumericalError if a pivot
// collapses.
class Cholesky {
 public:
  explicit Cholesky(Matrix a);
  Vector solve(const Vector& b) const;
  std::size_t dim() const { return l_.rows(); }

 private:
  Matrix l_;
};

}  // namespace mixopt
