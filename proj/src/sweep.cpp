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

#include "decom/sweep.hpp"

#include <cmath>
#include <cstdlib>
#include <set>
#include <string>

#include "decom/decoherence.hpp"
#include "decom/simulate.hpp"

namespace decom {

namespace {

using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using LongVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

long double horner(const std::vector<double>& alpha, long double p) {
  long double acc = 0.0L;
  for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) acc = acc * p + static_cast<long double>(*it);
  return acc * p;
}

}  // namespace

double PolyCoeffs::coefficient(int order) const {
  if (order < 1 || order > degree()) return 0.0;
  return alpha[static_cast<std::size_t>(order - 1)];
}

double PolyCoeffs::operator()(double p) const { return static_cast<double>(horner(alpha, p)); }

int thread_count() {
  if (const char* env = std::getenv("DECOM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

double measure_chi(const ChiMatrix& chi) {
  constexpr double kDiagonal = 1e-10;
  if (chi.is_diagonal(kDiagonal)) return measure_diagonal(chi, kDiagonal);
  if (chi.linear_magnitude() <= tol::kAlgebraic) return measure_quadratic(chi);
  return measure_general(chi);
}

double corrected_measure(const QecCode& code, NoiseKind kind, double p) {
  return measure_chi(choi_to_chi(simulate_choi(code, from_calibrated_p(kind, p))));
}

SweepResult sweep(const QecCode& code, NoiseKind kind, std::vector<double> p_values, int threads) {
  for (double p : p_values) {
    if (!calibrated_in_range(kind, p)) {
      throw RangeError("sweep: p=" + std::to_string(p) + " outside the calibrated range of " +
                       std::string(to_string(kind)));
    }
  }
  std::sort(p_values.begin(), p_values.end());

  SweepResult result;
  result.code = code.name;
  result.kind = kind;
  result.samples.resize(p_values.size());
  parallel_for(p_values.size(), threads > 0 ? threads : thread_count(), [&](std::size_t i) {
    const double p = p_values[i];
    const KrausChannel ch = from_calibrated_p(kind, p);
    Sample s;
    s.p = p;
    s.d0 = measure_chi(kraus_to_chi(ch));
    s.d = measure_chi(choi_to_chi(simulate_choi(code, ch)));
    result.samples[i] = s;
  });

  std::set<double> distinct;
  for (double p : p_values) {
    if (p > 0.0) distinct.insert(p);
  }
  if (static_cast<int>(distinct.size()) >= code.n) {
    std::vector<Sample> positive;
    for (const auto& s : result.samples) {
      if (s.p > 0.0) positive.push_back(s);
    }
    result.fitted = fit_poly(positive, code.n);
  }
  return result;
}

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 1) throw RangeError("linspace: steps must be >= 1");
  if (lo > hi) throw RangeError("linspace: lower end exceeds upper end");
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    out[static_cast<std::size_t>(i)] = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
  }
  return out;
}

std::vector<double> fit_points(int n) { return linspace(0.05, 0.3, n + 1); }

PolyCoeffs fit_poly(const std::vector<double>& p, const std::vector<double>& d, int degree) {
  if (degree < 1) throw RangeError("fit_poly: degree must be >= 1");
  if (p.size() != d.size()) throw DimensionError("fit_poly: p and D lengths differ");
  std::set<double> distinct;
  for (double v : p) {
    if (!(v > 0.0)) throw RangeError("fit_poly: sample p must be positive");
    distinct.insert(v);
  }
  if (static_cast<int>(distinct.size()) < degree) {
    throw RangeError("fit_poly: " + std::to_string(distinct.size()) + " distinct p values cannot fix " +
                     std::to_string(degree) + " coefficients");
  }

  const auto rows = static_cast<Eigen::Index>(p.size());
  LongMatrix v(rows, degree);
  LongVector rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    long double power = 1.0L;
    for (int j = 0; j < degree; ++j) {
      power *= static_cast<long double>(p[static_cast<std::size_t>(i)]);
      v(i, j) = power;
    }
    rhs(i) = d[static_cast<std::size_t>(i)];
  }
  LongVector scale(degree);
  for (int j = 0; j < degree; ++j) {
    scale(j) = v.col(j).cwiseAbs().maxCoeff();
    v.col(j) /= scale(j);
  }
  Eigen::ColPivHouseholderQR<LongMatrix> qr(v);
  if (qr.rank() < degree) throw RangeError("fit_poly: singular system");
  const LongVector sol = qr.solve(rhs);

  PolyCoeffs out;
  out.alpha.resize(static_cast<std::size_t>(degree));
  for (int j = 0; j < degree; ++j) out.alpha[static_cast<std::size_t>(j)] = static_cast<double>(sol(j) / scale(j));
  const auto r = qr.matrixR().diagonal().cwiseAbs();
  out.condition = static_cast<double>(r.maxCoeff() / r.minCoeff());
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double x = p[static_cast<std::size_t>(i)];
    out.residual = std::max(out.residual, std::abs(d[static_cast<std::size_t>(i)] - out(x)));
  }
  return out;
}

PolyCoeffs fit_poly(const std::vector<Sample>& samples, int degree) {
  std::vector<double> p;
  std::vector<double> d;
  for (const auto& s : samples) {
    p.push_back(s.p);
    d.push_back(s.d);
  }
  return fit_poly(p, d, degree);
}

BreakEven break_even(const PolyCoeffs& poly, double p_max) {
  constexpr double kLow = 1e-6;
  if (!(p_max > kLow)) throw RangeError("break_even: p_max must exceed 1e-6");
  bool identity = !poly.alpha.empty() && std::abs(poly.alpha[0] - 1.0) <= tol::kAlgebraic;
  for (int order = 2; order <= poly.degree() && identity; ++order) {
    identity = std::abs(poly.coefficient(order)) <= tol::kAlgebraic;
  }
  if (identity) return {BreakEven::Kind::All, kLow};

  auto gap = [&](double p) { return static_cast<double>(horner(poly.alpha, p) - static_cast<long double>(p)); };
  constexpr int kScan = 20000;
  double lo = kLow;
  double g_lo = gap(lo);
  if (g_lo == 0.0) return {BreakEven::Kind::Point, lo};
  for (int i = 1; i <= kScan; ++i) {
    const double hi = kLow + (p_max - kLow) * i / kScan;
    const double g_hi = gap(hi);
    if (g_hi == 0.0) return {BreakEven::Kind::Point, hi};
    if ((g_lo < 0.0) != (g_hi < 0.0)) {
      double a = lo;
      double b = hi;
      for (int it = 0; it < 200 && b - a > 1e-16; ++it) {
        const double mid = 0.5 * (a + b);
        const double g_mid = gap(mid);
        if (g_mid == 0.0) return {BreakEven::Kind::Point, mid};
        if ((g_mid < 0.0) == (g_lo < 0.0)) {
          a = mid;
        } else {
          b = mid;
        }
      }
      return {BreakEven::Kind::Point, 0.5 * (a + b)};
    }
    lo = hi;
    g_lo = g_hi;
  }
  return {BreakEven::Kind::None, 0.0};
}

ScaledProb scale_for_n_ops(double p, int n_ops, NoiseKind kind) {
  if (n_ops < 1) throw RangeError("scale_for_n_ops: N must be >= 1");
  if (!(p >= 0.0)) throw RangeError("scale_for_n_ops: p must be >= 0");
  const double cap = calibrated_max(kind);
  const double scaled = p * n_ops;
  if (scaled >= cap) return {cap, scaled > cap};
  return {scaled, false};
}

ScaledProb scale_for_n_ops(double p, int n_ops) {
  if (n_ops < 1) throw RangeError("scale_for_n_ops: N must be >= 1");
  if (!(p >= 0.0)) throw RangeError("scale_for_n_ops: p must be >= 0");
  const double scaled = p * n_ops;
  if (scaled > 1.0) return {1.0, true};
  return {scaled, false};
}

}  // namespace decom
