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

// p-sweeps of a code under one calibrated noise family, exact polynomial
// fits of D(p), break-even points and N-operation scaling.

#include <optional>
#include <string>
#include <vector>

#include "decom/codes.hpp"
#include "decom/noise.hpp"

namespace decom {

struct Sample {
  double p = 0.0;
  double d0 = 0.0;  ///< measure of the bare channel
  double d = 0.0;   ///< measure after the code
};

/// alpha[i] multiplies p^(i+1); there is no constant term.
struct PolyCoeffs {
  std::vector<double> alpha;
  double residual = 0.0;   ///< max |D_i - fit(p_i)| over the fitted samples
  double condition = 0.0;  ///< |R_00 / R_nn| of the column-scaled QR factor

  int degree() const { return static_cast<int>(alpha.size()); }
  /// Coefficient of p^order (0 for order 0 or beyond the degree).
  double coefficient(int order) const;
  double operator()(double p) const;
};

struct SweepResult {
  std::string code;
  NoiseKind kind = NoiseKind::BitFlip;
  std::vector<Sample> samples;  ///< sorted by p
  std::optional<PolyCoeffs> fitted;
};

/// Worker count: DECOM_THREADS if set and positive, else the hardware count.
int thread_count();

/// Runs job(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any job is rethrown after all workers stop.
template <typename Job>
void parallel_for(std::size_t count, int threads, Job&& job);

/// D of a chi matrix: closed form when chi is diagonal within 1e-10, the
/// quadratic form when chi_4 = chi_6 = chi_8 = 0, otherwise the numeric
/// maximization.
double measure_chi(const ChiMatrix& chi);

/// Corrected measure D(p) for one calibrated p.
double corrected_measure(const QecCode& code, NoiseKind kind, double p);

/// Samples D0 and D at every p (parallel, collected in p order). Fits a
/// degree-n polynomial when at least n distinct positive p are present.
SweepResult sweep(const QecCode& code, NoiseKind kind, std::vector<double> p_values, int threads = 0);

/// `steps` equally spaced values from lo to hi (just lo when steps == 1).
std::vector<double> linspace(double lo, double hi, int steps);
/// Sample points used for exact fits of an n-qubit code: n + 1 points
/// equally spaced in [0.05, 0.3].
std::vector<double> fit_points(int n);

/// Least squares in the monomials p, ..., p^degree (exact solve when the
/// sample count equals the degree). Needs `degree` distinct positive p.
PolyCoeffs fit_poly(const std::vector<Sample>& samples, int degree);
PolyCoeffs fit_poly(const std::vector<double>& p, const std::vector<double>& d, int degree);

struct BreakEven {
  enum class Kind { None, Point, All };
  Kind kind = Kind::None;
  double p = 0.0;
};

/// Smallest p in [1e-6, p_max] with D(p) = p. `All` when D(p) == p
/// identically, `None` when no crossing exists in the interval.
BreakEven break_even(const PolyCoeffs& poly, double p_max = 1.0);

struct ScaledProb {
  double p = 0.0;
  bool clamped = false;
};

/// N * p, clamped to the calibrated range of `kind`.
ScaledProb scale_for_n_ops(double p, int n_ops, NoiseKind kind);
/// N * p, clamped to 1.
ScaledProb scale_for_n_ops(double p, int n_ops);

}  // namespace decom

#include "decom/sweep_inl.hpp"
