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

#include "decom/simulate.hpp"

namespace decom {

ChoiState simulate_choi(const QecCode& code, const NoiseLayer& layer) {
  const int m = code.wire_count();
  if (m > kMaxSimulatedWires) {
    throw DimensionError("simulate_choi: " + std::to_string(m) + " wires exceed the limit of " +
                         std::to_string(kMaxSimulatedWires));
  }
  for (const auto& entry : layer) {
    if (entry.channel.dim() != 2) throw DimensionError("simulate_choi: channel is not single-qubit");
  }
  const Eigen::Index dim = Eigen::Index{1} << m;
  const Eigen::Index both = (Eigen::Index{1} << (m - 1)) | (Eigen::Index{1} << (m - 2));
  Vector psi = Vector::Zero(dim);
  psi(0) = psi(both) = 1.0 / std::sqrt(2.0);

  MultiQubitState state(m, psi * psi.adjoint());
  state.run(code.full_circuit(), layer);
  return ChoiState(partial_trace(state, {1, 0}).matrix());
}

ChoiState simulate_choi(const QecCode& code, const KrausChannel& ch) {
  if (ch.dim() != 2) throw DimensionError("simulate_choi: channel is not single-qubit");
  return simulate_choi(code, uniform_noise(ch, code.code_wires()));
}

NoiseLayer pauli_error_layer(const PauliError& err) {
  return {WireNoise{err.wire, KrausChannel::unitary(PauliBasis::element(err.pauli))}};
}

}  // namespace decom
