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

// Dense density-matrix simulation of small noiseless circuits with designated
// noise slots. Wire 0 is the leading (most significant) tensor factor.
// Gates act through index arithmetic on the wires they touch; full 2^m x 2^m
// gate matrices are never formed.

#include <variant>
#include <vector>

#include "decom/channel.hpp"

namespace decom {

enum class GateKind { H, X, Z, CNOT, CZ, Toffoli, MultiControlled, BlockUnitary };

class Gate {
 public:
  static Gate h(int wire);
  static Gate x(int wire);
  static Gate z(int wire);
  static Gate cnot(int control, int target);
  static Gate cz(int a, int b);
  static Gate toffoli(int c1, int c2, int target);
  /// Pauli on `target` conditioned on all `controls` being |1>.
  static Gate controlled(Pauli pauli, std::vector<int> controls, int target);
  /// Arbitrary unitary; `wires[0]` is the leading factor of `u`.
  static Gate block(Matrix u, std::vector<int> wires);

  GateKind kind() const { return kind_; }
  /// Wires in the tensor order of local_matrix(): controls first, target last.
  const std::vector<int>& wires() const { return wires_; }
  const Matrix& local_matrix() const { return matrix_; }
  /// Throws DimensionError if a wire is out of range or repeated.
  void validate(int wire_count) const;

 private:
  Gate(GateKind kind, std::vector<int> wires, Matrix matrix);

  GateKind kind_;
  std::vector<int> wires_;
  Matrix matrix_;
};

/// Location where the per-qubit environment acts, and the wires it touches.
struct NoiseSlot {
  std::vector<int> wires;
};

/// Channel applied to one wire inside a noise slot.
struct WireNoise {
  int wire;
  KrausChannel channel;
};
using NoiseLayer = std::vector<WireNoise>;

/// The same single-qubit channel on every listed wire.
NoiseLayer uniform_noise(const KrausChannel& ch, const std::vector<int>& wires);

class Circuit {
 public:
  using Step = std::variant<Gate, NoiseSlot>;

  explicit Circuit(int wire_count);

  Circuit& add(Gate gate);
  Circuit& add_noise_slot(std::vector<int> wires);
  Circuit& append(const Circuit& other);

  int wire_count() const { return wire_count_; }
  const std::vector<Step>& steps() const { return steps_; }
  bool has_noise_slot() const;

  /// Product of all gates restricted to `wires` (in that tensor order). Every
  /// gate must act inside `wires`; noise slots are ignored.
  Matrix unitary_on(const std::vector<int>& wires) const;

 private:
  int wire_count_;
  std::vector<Step> steps_;
};

/// Density matrix over wire_count qubits, owned exclusively by one simulation.
class MultiQubitState {
 public:
  explicit MultiQubitState(int wire_count);  // |0...0><0...0|
  MultiQubitState(int wire_count, Matrix rho);

  int wire_count() const { return wire_count_; }
  const Matrix& matrix() const { return rho_; }
  double trace() const { return rho_.trace().real(); }
  double purity() const;

  /// rho -> U rho U^dag on the gate's wires; trace renormalized.
  void apply(const Gate& gate);
  /// Applies `ch` to each listed wire in turn.
  void apply_noise(const KrausChannel& ch, const std::vector<int>& wires);
  void apply_noise(const NoiseLayer& layer);
  /// Runs every step; each noise slot applies the entries of `layer`.
  void run(const Circuit& circuit, const NoiseLayer& layer = {});

 private:
  void left_multiply(const Matrix& u, const std::vector<int>& wires, Matrix& target) const;
  void right_multiply_adjoint(const Matrix& u, const std::vector<int>& wires, Matrix& target) const;
  void check_wire(int wire) const;

  int wire_count_;
  Matrix rho_;
};

MultiQubitState apply_gate(MultiQubitState state, const Gate& gate);
MultiQubitState apply_noise_all(MultiQubitState state, const KrausChannel& ch, const std::vector<int>& wires);
/// Reduced state on `keep_wires`, in the listed order (first = leading factor).
DensityMatrix partial_trace(const MultiQubitState& state, const std::vector<int>& keep_wires);

}  // namespace decom
