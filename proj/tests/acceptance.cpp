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

// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit status
// when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "decom/decoherence.hpp"
#include "decom/dqd.hpp"
#include "decom/simulate.hpp"
#include "decom/sweep.hpp"

using namespace decom;

namespace {

struct Verdict {
  bool ok = false;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double max_coeff_error(const PolyCoeffs& fit, const std::vector<double>& want) {
  double worst = 0.0;
  const int top = std::max(fit.degree(), static_cast<int>(want.size()));
  for (int k = 1; k <= top; ++k) {
    const double w = k <= static_cast<int>(want.size()) ? want[static_cast<std::size_t>(k - 1)] : 0.0;
    worst = std::max(worst, std::abs(fit.coefficient(k) - w));
  }
  return worst;
}

PolyCoeffs fitted(const QecCode& code, NoiseKind kind) {
  const SweepResult r = sweep(code, kind, fit_points(code.n));
  if (!r.fitted) throw InvariantError("acceptance: sweep produced no fit");
  return *r.fitted;
}

Matrix random_unitary(std::mt19937_64& gen) {
  std::normal_distribution<double> g;
  Matrix m(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m(i, j) = Complex(g(gen), g(gen));
  }
  Eigen::HouseholderQR<Matrix> qr(m);
  return qr.householderQ() * Matrix::Identity(2, 2);
}

class Runner {
 public:
  void check(int id, const std::string& name, double budget_s, const std::function<Verdict()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_s > 0.0 && secs > budget_s) {
      v.ok = false;
      v.detail += "; over the " + sci(budget_s) + " s budget";
    }
    if (!v.ok) ++failures_;
    std::printf("%s %2d %s: %s (%.2f s)\n", v.ok ? "PASS" : "FAIL", id, name.c_str(), v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

}  // namespace

int main() {
  Runner run;
  PolyCoeffs majority;
  PolyCoeffs depolarizing_fit;

  run.check(1, "bit-flip code D(p) = 3p^2 - 2p^3", 1.0, [&] {
    majority = fitted(bit_flip_code(), NoiseKind::BitFlip);
    const double err = max_coeff_error(majority, {0.0, 3.0, -2.0});
    return Verdict{err <= 1e-8, "max coefficient error " + sci(err)};
  });

  run.check(2, "5-qubit code, depolarizing: 15p^2 - 50p^3 + 60p^4 - 24p^5", 30.0, [&] {
    depolarizing_fit = fitted(shor5_code(), NoiseKind::Depolarizing);
    const double err = max_coeff_error(depolarizing_fit, {0.0, 15.0, -50.0, 60.0, -24.0});
    return Verdict{err <= 1e-8, "max coefficient error " + sci(err) + ", |a1| = " +
                                    sci(std::abs(depolarizing_fit.coefficient(1)))};
  });

  run.check(3, "5-qubit code, amplitude damping: 5p^2(3 - 3p + p^2)/8", 0.0, [&] {
    const PolyCoeffs fit = fitted(shor5_code(), NoiseKind::AmplitudeDamping);
    const double err = max_coeff_error(fit, {0.0, 15.0 / 8.0, -15.0 / 8.0, 5.0 / 8.0});
    const double ratio = depolarizing_fit.coefficient(2) / fit.coefficient(2);
    return Verdict{err <= 1e-8 && std::abs(ratio - 8.0) <= 1e-8,
                   "max coefficient error " + sci(err) + ", leading ratio " + sci(ratio)};
  });

  run.check(4, "5-qubit code, phase damping: 10p^2(1 - 2p + p^2)", 0.0, [&] {
    const PolyCoeffs fit = fitted(shor5_code(), NoiseKind::PhaseDamping);
    const double err = max_coeff_error(fit, {0.0, 10.0, -20.0, 10.0});
    const double ratio = depolarizing_fit.coefficient(2) / fit.coefficient(2);
    return Verdict{err <= 1e-8 && std::abs(ratio - 1.5) <= 1e-8,
                   "max coefficient error " + sci(err) + ", leading ratio " + sci(ratio)};
  });

  run.check(5, "9-qubit code, depolarizing: D ~ 36p^2 at small p", 600.0, [&] {
    const SweepResult r = sweep(shor9_code(), NoiseKind::Depolarizing, {5e-4, 1e-3, 2e-3});
    const PolyCoeffs fit = fit_poly(r.samples, 3);
    const double a2 = fit.coefficient(2);
    return Verdict{std::abs(a2 / 36.0 - 1.0) <= 0.01, "quadratic coefficient " + sci(a2)};
  });

  run.check(6, "single-qubit calibrations D0 = p", 0.0, [&] {
    double worst = 0.0;
    for (double x : {0.0, 0.05, 0.2, 0.5, 0.9}) {
      worst = std::max(worst, std::abs(measure_chi(kraus_to_chi(bit_flip(x))) - x));
      worst = std::max(worst, std::abs(measure_chi(kraus_to_chi(depolarizing(x * 2.0 / 3.0))) - x * 2.0 / 3.0));
    }
    for (double x : {0.01, 0.3, 1.0, 3.0}) {
      worst = std::max(worst, std::abs(measure_chi(kraus_to_chi(amplitude_damping(x))) - (1 - std::exp(-x))));
      worst = std::max(worst, std::abs(measure_chi(kraus_to_chi(phase_damping(x))) - (1 - std::exp(-x)) / 2));
    }
    return Verdict{worst <= 1e-9, "max deviation " + sci(worst)};
  });

  run.check(7, "Choi spectra of the damping channels", 0.0, [&] {
    double worst = 0.0;
    for (double x : {0.05, 0.5, 1.0, 2.0}) {
      const double e = std::exp(-x);
      for (const ChoiState& tau : {kraus_to_choi(amplitude_damping(x)), kraus_to_choi(phase_damping(x))}) {
        const RealVector ev = tau.eigenvalues();
        worst = std::max({worst, std::abs(ev(0)), std::abs(ev(1)), std::abs(ev(2) - (1 - e) / 2),
                          std::abs(ev(3) - (1 + e) / 2)});
      }
    }
    return Verdict{worst <= 1e-10, "max eigenvalue error " + sci(worst)};
  });

  run.check(8, "quadratic-form measure vs brute force on 100 random channels", 0.0, [&] {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::uniform_int_distribution<int> terms(1, 4);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const int k = terms(gen);
      std::vector<double> w(static_cast<std::size_t>(k));
      double total = 0.0;
      for (double& x : w) total += (x = u(gen));
      std::vector<Matrix> ops;
      for (double x : w) ops.push_back(std::sqrt(x / total) * random_unitary(gen));
      const KrausChannel ch(ops);
      worst = std::max(worst, std::abs(measure_quadratic(kraus_to_chi(ch)) - measure_by_definition(ch)));
    }
    return Verdict{worst <= 5e-3, "max difference " + sci(worst)};
  });

  run.check(9, "every declared single error is corrected", 0.0, [&] {
    Vector omega = Vector::Zero(4);
    omega(0) = omega(3) = 1.0 / std::sqrt(2.0);
    const Matrix target = omega * omega.adjoint();
    double worst = 0.0;
    int cases = 0;
    for (const auto& code : {bit_flip_code(), phase_flip_code(), shor5_code(), shor9_code()}) {
      for (const auto& err : code.corrects) {
        worst = std::max(worst, max_abs_diff(simulate_choi(code, pauli_error_layer(err)).matrix(), target));
        ++cases;
      }
    }
    return Verdict{worst <= 1e-10, std::to_string(cases) + " errors, max deviation " + sci(worst)};
  });

  run.check(10, "double-dot decoherence curve", 60.0, [&] {
    const DqdParams params;
    const QuadratureConfig cfg;
    bool ok = spectral_function(params, 0.0) == 0.0;
    std::string detail = "B2(0) = " + sci(spectral_function(params, 0.0));

    double drift = 0.0;
    for (double t : {1e-15, 1e-14, 1e-13, 1e-12, 1e-11, 1e-10}) {
      const double fine = spectral_function(params, t, cfg.refined());
      drift = std::max(drift, std::abs(spectral_function(params, t, cfg) - fine) / fine);
    }
    ok = ok && drift < 1e-4;
    detail += ", node doubling " + sci(drift);

    bool below = true;
    for (double t : {1e-15, 1e-14, 1e-13}) {
      const DqdMeasures m = dqd_decoherence(params, t, 68, cfg);
      below = below && m.d <= m.d0;
    }
    ok = ok && below;
    detail += below ? ", D <= D0" : ", D > D0 somewhere";

    const double gamma_err = std::abs(relaxation_rate(params) / 1273433624.2483376338 - 1.0);
    const double b2_err = std::max(std::abs(spectral_function(params, 1e-12, cfg) / 0.01036138256808499 - 1.0),
                                   std::abs(spectral_function(params, 1e-10, cfg) / 0.008776580767483107 - 1.0));
    ok = ok && gamma_err <= 1e-12 && b2_err <= 1e-7;
    detail += ", Gamma rel error " + sci(gamma_err) + ", B2 rel error " + sci(b2_err);
    return Verdict{ok, detail};
  });

  run.check(11, "majority-vote break-even p* = 1/2", 0.0, [&] {
    const BreakEven be = break_even(majority);
    const bool ok = be.kind == BreakEven::Kind::Point && std::abs(be.p - 0.5) <= 1e-10;
    char buf[48];
    std::snprintf(buf, sizeof buf, "p* = %.15f", be.p);
    return Verdict{ok, buf};
  });

  std::printf("%d of 11 criteria failed\n", run.failures());
  return run.failures() == 0 ? 0 : 1;
}
