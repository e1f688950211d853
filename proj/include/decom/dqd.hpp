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

// Si double-quantum-dot charge qubit: phonon-induced relaxation rate,
// dephasing spectral function, and the error probabilities and decoherence
// measures they produce after N operations.

#include <string>

namespace decom {

/// Physical constants, SI units internally.
struct DqdParams {
  double xi = 3.3 * 1.602176634e-19;  ///< deformation potential, J
  double sound_speed = 9.0e3;         ///< m/s
  double density = 2330.0;            ///< kg/m^3
  double separation = 50e-9;          ///< dot separation L, m
  double radius = 3e-9;               ///< dot radius a, m
  double wavevector = 1e8;            ///< phonon wavevector k, 1/m
  double hbar = 1.054571817e-34;      ///< J s

  /// Throws RangeError unless every field is finite and positive.
  void validate() const;

  /// Reads the unit-suffixed JSON keys xi_eV, s_m_per_s, rho_g_per_cm3,
  /// L_nm, a_nm, k_per_m. Missing keys keep their defaults; unknown keys
  /// are rejected.
  static DqdParams from_json_text(const std::string& text);
  static DqdParams load(const std::string& path);
  std::string to_json_text() const;
};

struct QuadratureConfig {
  double q_max_factor = 8.0;  ///< q integral truncated at q_max_factor / a
  int outer_nodes = 256;      ///< initial q nodes (16 per panel)
  int inner_nodes = 1024;     ///< Theta nodes (16 per panel)
  double rel_tol = 1e-9;      ///< per-panel acceptance of the adaptive q rule
  int max_panels = 1 << 16;   ///< q panel budget

  void validate() const;
  /// Both node counts doubled.
  QuadratureConfig refined() const;
};

/// Gamma = Xi^2 k^3 / (4 pi rho s^2 hbar) exp(-a^2 k^2 / 2) (1 - sin(kL)/(kL)).
double relaxation_rate(const DqdParams& params);

/// B^2(t). Inner Theta integral by composite Gauss-Legendre, outer q integral
/// by adaptive Gauss-Legendre panels. Throws ConvergenceError when the panel
/// budget is exhausted.
double spectral_function(const DqdParams& params, double t, const QuadratureConfig& cfg = {});

/// Inner integral int_0^pi sin(Theta) sin^2(qL cos Theta) dTheta by the
/// composite rule used inside spectral_function.
double theta_integral(double ql, int inner_nodes);

struct DqdProbs {
  double p1 = 0.0;  ///< amplitude-damping probability, after N scaling
  double p2 = 0.0;  ///< phase-damping probability, after N scaling
  bool clamped = false;
};

/// p1 = 1 - e^{-Gamma t}, p2 = (1 - e^{-B^2})/2, each multiplied by N and
/// clamped to 1 and 1/2 respectively.
DqdProbs dqd_error_probs(const DqdParams& params, double t, int n_ops, const QuadratureConfig& cfg = {});

struct DqdMeasures {
  double d0 = 0.0;  ///< max(p1, p2)
  double d = 0.0;   ///< max of the 5-qubit closed forms
};

/// Uncorrected and 5-qubit-corrected measures for given probabilities.
DqdMeasures dqd_measures(double p1, double p2);
DqdMeasures dqd_decoherence(const DqdParams& params, double t, int n_ops, const QuadratureConfig& cfg = {});

}  // namespace decom
