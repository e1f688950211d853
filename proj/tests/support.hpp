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

// Random channels and dense reference implementations shared by the tests.
// Nothing in here calls into the library beyond its value types, so the
// helpers double as independent oracles.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <vector>

#include "decom/channel.hpp"

namespace decom::testing {

inline Matrix pauli(char c) {
  const Complex i(0.0, 1.0);
  Matrix m = Matrix::Zero(2, 2);
  switch (c) {
    case 'I':
      m(0, 0) = m(1, 1) = 1.0;
      break;
    case 'X':
      m(0, 1) = m(1, 0) = 1.0;
      break;
    case 'Y':
      m(0, 1) = -i;
      m(1, 0) = i;
      break;
    case 'Z':
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

inline Matrix hadamard() {
  Matrix h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  return h / std::sqrt(2.0);
}

/// Dense operator on m qubits: `ops` maps wire -> 2x2 factor, wire 0 leading.
inline Matrix op_on(int m, const std::map<int, Matrix>& ops) {
  Matrix out = Matrix::Identity(1, 1);
  for (int w = 0; w < m; ++w) {
    const auto it = ops.find(w);
    const Matrix f = it == ops.end() ? Matrix::Identity(2, 2) : it->second;
    Matrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = out(i, j) * f;
    }
    out = next;
  }
  return out;
}

/// |1><1| on the control conjugated into P on the targets.
inline Matrix controlled_dense(int m, int control, const std::map<int, Matrix>& targets) {
  Matrix p0 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  Matrix p1 = Matrix::Zero(2, 2);
  p1(1, 1) = 1.0;
  std::map<int, Matrix> on = targets;
  on[control] = p1;
  return op_on(m, {{control, p0}}) + op_on(m, on);
}

inline Matrix toffoli_dense(int m, int c1, int c2, int t) {
  Matrix p1 = Matrix::Zero(2, 2);
  p1(1, 1) = 1.0;
  const Matrix both = op_on(m, {{c1, p1}, {c2, p1}});
  return Matrix::Identity(both.rows(), both.cols()) - both + op_on(m, {{c1, p1}, {c2, p1}, {t, pauli('X')}});
}

/// Reduced density matrix on (keep[0], keep[1], ...) by explicit summation.
inline Matrix partial_trace_dense(const Matrix& rho, int m, const std::vector<int>& keep) {
  const Eigen::Index kd = Eigen::Index{1} << keep.size();
  Matrix out = Matrix::Zero(kd, kd);
  const Eigen::Index dim = rho.rows();
  auto bit = [m](Eigen::Index idx, int wire) { return (idx >> (m - 1 - wire)) & 1; };
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      bool same = true;
      for (int w = 0; w < m && same; ++w) {
        if (std::find(keep.begin(), keep.end(), w) != keep.end()) continue;
        same = bit(i, w) == bit(j, w);
      }
      if (!same) continue;
      Eigen::Index a = 0;
      Eigen::Index b = 0;
      for (int w : keep) {
        a = 2 * a + bit(i, w);
        b = 2 * b + bit(j, w);
      }
      out(a, b) += rho(i, j);
    }
  }
  return out;
}

inline Matrix omega_projector() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v * v.adjoint();
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Matrix ginibre(Eigen::Index rows, Eigen::Index cols) {
    Matrix g(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = Complex(normal(), normal());
    }
    return g;
  }

  Matrix unitary(Eigen::Index d) {
    Eigen::HouseholderQR<Matrix> qr(ginibre(d, d));
    return qr.householderQ() * Matrix::Identity(d, d);
  }

  Matrix density(Eigen::Index d) {
    const Matrix g = ginibre(d, d);
    Matrix rho = g * g.adjoint();
    return rho / rho.trace();
  }

  Vector bloch() {
    Vector v(3);
    double n = 0.0;
    do {
      v = Vector::Zero(3);
      for (int k = 0; k < 3; ++k) v(k) = uniform(-1.0, 1.0);
      n = v.norm();
    } while (n > 1.0 || n < 1e-3);
    return v;
  }

  /// Kraus set from the orthonormal columns of a random isometry C^2 -> C^{2K}.
  KrausChannel channel(int terms) {
    Eigen::HouseholderQR<Matrix> qr(ginibre(2 * terms, 2));
    const Matrix iso = qr.householderQ() * Matrix::Identity(2 * terms, 2);
    std::vector<Matrix> ops;
    for (int k = 0; k < terms; ++k) ops.push_back(iso.block(2 * k, 0, 2, 2));
    return KrausChannel(ops);
  }

  /// Convex mixture of random unitaries; unital by construction.
  KrausChannel unital_channel(int terms) {
    std::vector<double> w(static_cast<std::size_t>(terms));
    double total = 0.0;
    for (double& x : w) total += (x = uniform(0.05, 1.0));
    std::vector<Matrix> ops;
    for (double x : w) ops.push_back(std::sqrt(x / total) * unitary(2));
    return KrausChannel(ops);
  }

 private:
  std::mt19937_64 gen_;
};

/// Max-|eigenvalue| of a 2x2 Hermitian matrix from its characteristic
/// polynomial.
inline double norm_2x2(const Matrix& a) {
  const double tr = (a(0, 0) + a(1, 1)).real();
  const double det = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)).real();
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
  return std::max(std::abs(tr / 2.0 + disc), std::abs(tr / 2.0 - disc));
}

/// Affine Bloch map of a Kraus channel: E((I + P.s)/2) = (I + (T P + c).s)/2.
struct AffineOracle {
  Eigen::Matrix3d t;
  Eigen::Vector3d c;
};

inline AffineOracle affine_oracle(const KrausChannel& ch) {
  auto act = [&](const Matrix& rho) {
    Matrix out = Matrix::Zero(2, 2);
    for (const auto& e : ch.operators()) out += e * rho * e.adjoint();
    return out;
  };
  const char axes[3] = {'X', 'Y', 'Z'};
  AffineOracle o;
  const Matrix center = act(0.5 * pauli('I'));
  for (int k = 0; k < 3; ++k) o.c(k) = (pauli(axes[k]) * center).trace().real();
  for (int j = 0; j < 3; ++j) {
    const Matrix image = act(0.5 * (pauli('I') + pauli(axes[j])));
    for (int k = 0; k < 3; ++k) o.t(k, j) = (pauli(axes[k]) * image).trace().real() - o.c(k);
  }
  return o;
}

/// Exact D for a unital map: the largest singular value of (T - I) / 2.
inline double unital_measure_oracle(const KrausChannel& ch) {
  const AffineOracle o = affine_oracle(ch);
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(o.t - Eigen::Matrix3d::Identity());
  return svd.singularValues()(0) / 2.0;
}

}  // namespace decom::testing
