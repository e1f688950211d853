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

#include "decom/decoherence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace decom {

namespace {

Eigen::Vector3d to_vec(const BlochPoint& p) { return {p.x, p.y, p.z}; }

BlochPoint to_point(const Eigen::Vector3d& v) {
  const Eigen::Vector3d n = v.normalized();
  return {n.x(), n.y(), n.z()};
}

// Largest |eigenvalue| of a 2x2 Hermitian matrix.
double operator_norm_2x2(const Matrix& a) {
  const double p = a(0, 0).real();
  const double q = a(1, 1).real();
  const double mean = 0.5 * (p + q);
  const double rad = std::hypot(0.5 * (p - q), std::abs(a(0, 1)));
  return std::max(std::abs(mean + rad), std::abs(mean - rad));
}

// Maximizes g on [-h, h] by golden-section search; returns the best abscissa
// among the search result and 0.
template <typename F>
double golden_max(F&& g, double h, double& best_value) {
  constexpr double kInvPhi = 0.6180339887498949;
  double lo = -h;
  double hi = h;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double g1 = g(x1);
  double g2 = g(x2);
  for (int it = 0; it < 64; ++it) {
    if (g1 < g2) {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + kInvPhi * (hi - lo);
      g2 = g(x2);
    } else {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - kInvPhi * (hi - lo);
      g1 = g(x1);
    }
  }
  const double x = g1 >= g2 ? x1 : x2;
  const double gx = std::max(g1, g2);
  const double g0 = g(0.0);
  if (gx > g0) {
    best_value = gx;
    return x;
  }
  best_value = g0;
  return 0.0;
}

}  // namespace

double BlochPoint::norm() const { return std::sqrt(x * x + y * y + z * z); }

double QuadraticForm3::evaluate(const BlochPoint& p) const {
  const Eigen::Vector3d v = to_vec(p);
  return v.dot(m * v);
}

Eigen::Vector3d QuadraticForm3::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

std::vector<BlochPoint> fibonacci_sphere(int n) {
  if (n < 1) throw RangeError("fibonacci_sphere: need at least one point");
  std::vector<BlochPoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * i;
    pts.push_back({r * std::cos(phi), r * std::sin(phi), z});
  }
  return pts;
}

double measure_diagonal(const ChiMatrix& chi, double diag_tol) {
  if (!chi.is_diagonal(diag_tol)) {
    throw InvariantError("measure_diagonal: chi is not diagonal in the Pauli basis");
  }
  const double c1 = chi(1, 1).real();
  const double c2 = chi(2, 2).real();
  const double c3 = chi(3, 3).real();
  return c1 + c2 + c3 - std::min({c1, c2, c3});
}

QuadraticForm3 quadratic_part(const ChiMatrix& chi) {
  const ChiParams c = chi.params();
  QuadraticForm3 f;
  auto& m = f.m;
  m(0, 0) = c[10] * c[10] + c[11] * c[11] + c[2] * c[2] + c[3] * c[3] + c[7] * c[7] + c[9] * c[9] +
            2 * c[2] * c[3] - 2 * c[11] * c[7] + 2 * c[10] * c[9];
  m(1, 1) = c[10] * c[10] + c[12] * c[12] + c[1] * c[1] + c[3] * c[3] + c[5] * c[5] + c[9] * c[9] +
            2 * c[1] * c[3] - 2 * c[10] * c[9] + 2 * c[12] * c[5];
  m(2, 2) = c[11] * c[11] + c[12] * c[12] + c[1] * c[1] + c[2] * c[2] + c[5] * c[5] + c[7] * c[7] +
            2 * c[1] * c[2] - 2 * c[12] * c[5] + 2 * c[11] * c[7];
  // Cross terms carry the opposite sign to the commonly printed expansion;
  // with this sign P^T M P equals || E(rho) - rho ||^2 for unital channels.
  m(0, 1) = -(2 * c[10] * c[3] + c[10] * c[2] + c[12] * c[7] + c[5] * c[7] + c[10] * c[1] +
              c[9] * c[1] - c[11] * c[12] - c[11] * c[5] - c[2] * c[9]);
  m(1, 2) = -(2 * c[12] * c[1] + c[12] * c[2] + c[12] * c[3] + c[2] * c[5] + c[11] * c[9] +
              c[7] * c[9] - c[10] * c[11] - c[10] * c[7] - c[3] * c[5]);
  m(0, 2) = -(2 * c[11] * c[2] + c[11] * c[3] + c[10] * c[5] + c[1] * c[11] + c[3] * c[7] +
              c[5] * c[9] - c[10] * c[12] - c[12] * c[9] - c[1] * c[7]);
  m(1, 0) = m(0, 1);
  m(2, 1) = m(1, 2);
  m(2, 0) = m(0, 2);
  return f;
}

QuadraticForm3 build_quadratic_form(const ChiMatrix& chi) {
  if (chi.linear_magnitude() > tol::kAlgebraic) {
    throw InvariantError("build_quadratic_form: chi_4, chi_6, chi_8 must vanish (linear terms present)");
  }
  return quadratic_part(chi);
}

double measure_quadratic(const ChiMatrix& chi) {
  const double top = build_quadratic_form(chi).eigenvalues()(2);
  return std::sqrt(std::max(0.0, top));
}

std::vector<BlochPoint> quadratic_maximizers(const QuadraticForm3& form, double eps) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(form.m);
  const double top = solver.eigenvalues()(2);
  std::vector<BlochPoint> axes;
  for (int i = 2; i >= 0; --i) {
    if (top - solver.eigenvalues()(i) <= eps) axes.push_back(to_point(solver.eigenvectors().col(i)));
  }
  return axes;
}

BlochAffine bloch_affine(const ChiMatrix& chi) {
  BlochAffine out;
  const Matrix drift = apply_chi(chi, PauliBasis::element(Pauli::I)) - PauliBasis::element(Pauli::I);
  for (int k = 0; k < 3; ++k) {
    const Matrix& sk = PauliBasis::element(k + 1);
    out.t(k) = 0.5 * (sk * drift).trace().real();
    for (int j = 0; j < 3; ++j) {
      const Matrix& sj = PauliBasis::element(j + 1);
      out.a(k, j) = 0.5 * (sk * (apply_chi(chi, sj) - sj)).trace().real();
    }
  }
  return out;
}

double general_objective(const ChiMatrix& chi, const BlochPoint& p) {
  const BlochAffine map = bloch_affine(chi);
  return 0.5 * (map.a * to_vec(p) + map.t).norm();
}

GeneralMeasure maximize_general(const ChiMatrix& chi, int grid_density, int refine_iters) {
  if (grid_density < 8) throw RangeError("measure_general: grid_density must be >= 8");
  if (refine_iters < 0) throw RangeError("measure_general: refine_iters must be >= 0");

  const BlochAffine map = bloch_affine(chi);
  auto objective = [&](const Eigen::Vector3d& v) { return 0.5 * (map.a * v + map.t).norm(); };

  const auto grid = fibonacci_sphere(grid_density);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = objective(to_vec(grid[i]));

  std::vector<std::size_t> order(grid.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t starts = std::min<std::size_t>(6, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(starts), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      return values[a] != values[b] ? values[a] > values[b] : a < b;
                    });

  GeneralMeasure result;
  result.grid_max = values[order[0]];
  result.value = result.grid_max;
  result.argmax = grid[order[0]];

  const double spacing = std::sqrt(4.0 * std::numbers::pi / grid_density);
  for (std::size_t s = 0; s < starts; ++s) {
    Eigen::Vector3d p = to_vec(grid[order[s]]);
    double current = values[order[s]];
    double h = 2.0 * spacing;
    for (int it = 0; it < refine_iters; ++it) {
      const Eigen::Vector3d seed = std::abs(p.x()) < 0.6 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
      const Eigen::Vector3d u = (seed - seed.dot(p) * p).normalized();
      const Eigen::Vector3d w = p.cross(u);
      const std::array<Eigen::Vector3d, 4> dirs = {u, w, (u + w).normalized(), (u - w).normalized()};
      double moved = 0.0;
      for (const auto& d : dirs) {
        auto along = [&](double theta) { return objective((std::cos(theta) * p + std::sin(theta) * d).normalized()); };
        double best = current;
        const double theta = golden_max(along, h, best);
        if (best > current) {
          p = (std::cos(theta) * p + std::sin(theta) * d).normalized();
          current = best;
          moved = std::max(moved, std::abs(theta));
        }
      }
      if (moved < 0.5 * h) h = std::max(0.5 * h, 1e-10);
    }
    if (current > result.value) {
      result.value = current;
      result.argmax = to_point(p);
    }
  }
  return result;
}

double measure_general(const ChiMatrix& chi, int grid_density, int refine_iters) {
  return maximize_general(chi, grid_density, refine_iters).value;
}

double measure_by_definition(const KrausChannel& ch, int grid_density) {
  if (ch.dim() != 2) throw DimensionError("measure_by_definition: qubit channel required");
  if (grid_density < 1) throw RangeError("measure_by_definition: grid_density must be positive");
  double best = 0.0;
  for (const auto& p : fibonacci_sphere(grid_density)) {
    const Matrix rho = p.density().matrix();
    best = std::max(best, operator_norm_2x2(apply_channel(ch, rho) - rho));
  }
  return best;
}

}  // namespace decom
