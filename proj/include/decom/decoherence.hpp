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

// Measure of decoherence D = sup_rho || E(rho) - rho || for qubit channels,
// with ||A|| the largest |eigenvalue|. Four routes are provided:
//
//   measure_diagonal      closed form for diagonal chi
//   measure_quadratic     sqrt of the largest eigenvalue of the quadratic
//                         form in (Px, Py, Pz), valid when chi_4 = chi_6 =
//                         chi_8 = 0
//   measure_general       numeric maximization of || E(rho) - rho || over
//                         the Bloch sphere, any channel
//   measure_by_definition brute force over Bloch-sphere states (oracle)
//
// Only pure inputs are searched: rho -> ||E(rho) - rho|| is convex (a norm of
// an affine function of rho), so its supremum over the Bloch ball is attained
// on the boundary sphere.

#include <array>
#include <vector>

#include "decom/channel.hpp"

namespace decom {

struct BlochPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  double norm() const;
  DensityMatrix density() const { return DensityMatrix::from_bloch(x, y, z); }
};

/// Symmetric 3x3 real matrix M: D^2(P) = P^T M P for unital-like chi.
struct QuadraticForm3 {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();

  double evaluate(const BlochPoint& p) const;
  /// Ascending eigenvalues a_1 <= a_2 <= a_3.
  Eigen::Vector3d eigenvalues() const;
};

/// Deterministic Fibonacci lattice of n points on the unit sphere.
std::vector<BlochPoint> fibonacci_sphere(int n);

double measure_diagonal(const ChiMatrix& chi, double diag_tol = tol::kAlgebraic);

QuadraticForm3 build_quadratic_form(const ChiMatrix& chi);
/// Quadratic part of the general objective, without the chi_4/6/8 = 0 check.
QuadraticForm3 quadratic_part(const ChiMatrix& chi);
double measure_quadratic(const ChiMatrix& chi);

/// Maximizing Bloch points of the quadratic form: every coordinate axis of
/// the eigenbasis whose eigenvalue ties the maximum (within eps).
std::vector<BlochPoint> quadratic_maximizers(const QuadraticForm3& form, double eps = 1e-12);

/// E(rho) - rho in Bloch coordinates: rho = (I + P.sigma)/2 is mapped to
/// (A P + t).sigma / 2, so || E(rho) - rho || = |A P + t| / 2.
struct BlochAffine {
  Eigen::Matrix3d a = Eigen::Matrix3d::Zero();
  Eigen::Vector3d t = Eigen::Vector3d::Zero();
};
BlochAffine bloch_affine(const ChiMatrix& chi);

/// || E(rho) - rho || for the pure state at `p`. With chi_4 = chi_6 = chi_8
/// = 0 this is sqrt(P^T M P) with M from quadratic_part.
double general_objective(const ChiMatrix& chi, const BlochPoint& p);

struct GeneralMeasure {
  double value = 0.0;
  BlochPoint argmax;
  double grid_max = 0.0;
};

GeneralMeasure maximize_general(const ChiMatrix& chi, int grid_density = 2000, int refine_iters = 20);
double measure_general(const ChiMatrix& chi, int grid_density = 2000, int refine_iters = 20);

/// max over a Fibonacci grid of || E(rho) - rho || with rho pure.
double measure_by_definition(const KrausChannel& ch, int grid_density = 10000);

}  // namespace decom
