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

// Measurement-free error-correction circuits. Every code lives on an
// (n + 1)-wire register: wire 0 is the untouched reference half of |Omega>,
// wire 1 carries the logical data, wires 2..n start in |0>.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "decom/circuit.hpp"

namespace decom {

struct PauliError {
  int wire;
  Pauli pauli;
};

struct QecCode {
  std::string name;
  int n = 1;  ///< code qubits (wires 1..n)
  Circuit encoder{2};
  Circuit decoder{2};
  /// Coherent recovery applied after the decoder, when the code has one.
  std::optional<Gate> recovery;
  /// Single-wire errors the code corrects exactly.
  std::vector<PauliError> corrects;

  int wire_count() const { return n + 1; }
  std::vector<int> code_wires() const;
  /// encoder, noise slot on wires 1..n, decoder, recovery.
  Circuit full_circuit() const;
};

/// No encoding: the channel acts on the bare data qubit.
QecCode trivial_code();
/// Three-qubit majority-voting code against X errors.
QecCode bit_flip_code();
/// The bit-flip code conjugated by Hadamard layers around the noise slot.
QecCode phase_flip_code();
/// Five-qubit code with a coherent recovery unitary.
QecCode shor5_code();
/// Nine-qubit Shor code: phase-flip code over three bit-flip blocks.
QecCode shor9_code();

/// Codes by CLI name: none, bit3, phase3, shor5, shor9.
QecCode code_by_name(std::string_view name);
std::vector<std::string_view> code_names();

/// All single-wire X, Y, Z errors on `wires`.
std::vector<PauliError> all_single_paulis(const std::vector<int>& wires);

/// Measurement-free recovery for an encoder on wires 1..n of an (n+1)-wire
/// circuit. For each error E_s (s = 0 is the identity, then `errors` in
/// order) the corrupted logical states E_s Enc|L, 0...0> are mapped to
/// |L> (x) |s>, with s written in binary on wires 2..n. The map is completed
/// to a unitary on the orthogonal complement. Throws InvariantError when the
/// corrupted subspaces are not mutually orthogonal.
Gate build_recovery(const Circuit& encoder, int n, const std::vector<PauliError>& errors);
Gate build_recovery(const Circuit& encoder, int n);

}  // namespace decom
