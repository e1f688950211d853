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

// The five single-qubit noise models, parameterized natively or by their
// calibrated decoherence probability p (the measure of the bare channel).

#include <optional>
#include <string>
#include <string_view>

#include "decom/channel.hpp"

namespace decom {

enum class NoiseKind { BitFlip, PhaseFlip, Depolarizing, AmplitudeDamping, PhaseDamping };

std::string_view to_string(NoiseKind kind);
/// Accepts the CLI names: bit_flip, phase_flip, depolarizing,
/// amplitude_damping, phase_damping.
NoiseKind parse_noise_kind(std::string_view name);

/// Native parameter p' (flips), p (depolarizing), Gamma*t or B^2, together
/// with the decoherence measure it produces.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::BitFlip;
  double native_param = 0.0;
  double calibrated_p = 0.0;

  static NoiseSpec from_native(NoiseKind kind, double native);
  static NoiseSpec from_calibrated(NoiseKind kind, double p);

  KrausChannel channel() const;
  /// "kind=<name>, p=<real>" (or native=<real> when `native` is set).
  std::string to_text(bool native = false) const;
  /// Parses the text form produced by to_text.
  static NoiseSpec from_text(std::string_view text);
};

KrausChannel bit_flip(double p);
KrausChannel phase_flip(double p);
KrausChannel depolarizing(double p);
/// Amplitude damping with operators diag(1, e^{-gt/2}) and
/// sqrt(1-e^{-gt}) |0><1|.
KrausChannel amplitude_damping(double gamma_t);
/// Dephasing with operators e^{-b/2} I, sqrt(1-e^{-b}) |0><0|, sqrt(1-e^{-b}) |1><1|.
KrausChannel phase_damping(double b_sq);

/// Native parameter whose channel has decoherence measure p.
double native_from_calibrated(NoiseKind kind, double p);
/// Decoherence measure of the channel with the given native parameter.
double calibrated_from_native(NoiseKind kind, double native);
KrausChannel from_calibrated_p(NoiseKind kind, double p);

/// Upper end of the calibrated p range (inclusive for flips and
/// depolarizing, the open supremum for the damping channels).
double calibrated_max(NoiseKind kind);
bool calibrated_in_range(NoiseKind kind, double p);

}  // namespace decom
