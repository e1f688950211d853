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

// Choi state of an encode / noise / decode / recover block. The reference
// wire 0 and the data wire 1 start in |Omega>; ancillas start in |0>. After
// the circuit the register is reduced to (data, reference), so the channel
// acts on the first factor of the returned state.

#include "decom/codes.hpp"

namespace decom {

/// Largest register simulate_choi accepts.
inline constexpr int kMaxSimulatedWires = 11;

/// The same channel on every code wire.
ChoiState simulate_choi(const QecCode& code, const KrausChannel& ch);
/// Arbitrary per-wire noise, e.g. a single Pauli on one wire.
ChoiState simulate_choi(const QecCode& code, const NoiseLayer& layer);

/// Layer putting `pauli` on `wire` and nothing elsewhere.
NoiseLayer pauli_error_layer(const PauliError& err);

}  // namespace decom
