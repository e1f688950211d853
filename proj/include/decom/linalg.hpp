// Copyright 2026 The decom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace decom {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace tol {
/// Algebraic identities (Hermiticity, trace, completeness, round trips).
inline constexpr double kAlgebraic = 1e-12;
/// Eigenvalue positivity floor and trace-preservation checks on chi.
inline constexpr double kPositivity = 1e-10;
/// Slack accepted on simulated states before they are rejected as non-PSD.
inline constexpr double kDegenerate = 1e-8;
}  // namespace tol

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not match (channel vs state dimension, wire count, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside its documented valid range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A value violates a structural invariant (non-Hermitian, non-TP, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure could not reach its target accuracy.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const Matrix& m, double eps = tol::kAlgebraic) {
  return m.rows() == m.cols() && max_abs_diff(m, m.adjoint()) <= eps;
}

/// Eigenvalues (ascending) of the Hermitian part of m.
inline RealVector hermitian_eigenvalues(const Matrix& m) {
  Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

/// Kronecker product a (x) b with a as the leading tensor factor.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace decom
