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

#include "decom/codes.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace decom {

namespace {

std::vector<int> iota_wires(int first, int last) {
  std::vector<int> w(static_cast<std::size_t>(last - first + 1));
  std::iota(w.begin(), w.end(), first);
  return w;
}

std::vector<PauliError> single_kind(Pauli p, const std::vector<int>& wires) {
  std::vector<PauliError> out;
  for (int w : wires) out.push_back({w, p});
  return out;
}

// Applies a single-qubit operator to `local` (0 = leading factor) of an
// n-qubit state vector.
Vector apply_local(const Matrix& op, int local, int n, Vector v) {
  const Eigen::Index bit = Eigen::Index{1} << (n - 1 - local);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i & bit) continue;
    const Complex a = v(i);
    const Complex b = v(i | bit);
    v(i) = op(0, 0) * a + op(0, 1) * b;
    v(i | bit) = op(1, 0) * a + op(1, 1) * b;
  }
  return v;
}

}  // namespace

std::vector<int> QecCode::code_wires() const { return iota_wires(1, n); }

Circuit QecCode::full_circuit() const {
  Circuit c(wire_count());
  c.append(encoder);
  c.add_noise_slot(code_wires());
  c.append(decoder);
  if (recovery) c.add(*recovery);
  return c;
}

std::vector<PauliError> all_single_paulis(const std::vector<int>& wires) {
  std::vector<PauliError> out;
  for (int w : wires) {
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) out.push_back({w, p});
  }
  return out;
}

QecCode trivial_code() {
  QecCode code;
  code.name = "none";
  code.n = 1;
  code.encoder = Circuit(2);
  code.decoder = Circuit(2);
  return code;
}

QecCode bit_flip_code() {
  QecCode code;
  code.name = "bit3";
  code.n = 3;
  code.encoder = Circuit(4);
  code.encoder.add(Gate::cnot(1, 2)).add(Gate::cnot(1, 3));
  code.decoder = Circuit(4);
  code.decoder.add(Gate::cnot(1, 2)).add(Gate::cnot(1, 3)).add(Gate::toffoli(2, 3, 1));
  code.corrects = single_kind(Pauli::X, code.code_wires());
  return code;
}

QecCode phase_flip_code() {
  QecCode code;
  code.name = "phase3";
  code.n = 3;
  code.encoder = Circuit(4);
  code.encoder.add(Gate::cnot(1, 2)).add(Gate::cnot(1, 3));
  for (int w = 1; w <= 3; ++w) code.encoder.add(Gate::h(w));
  code.decoder = Circuit(4);
  for (int w = 1; w <= 3; ++w) code.decoder.add(Gate::h(w));
  code.decoder.add(Gate::cnot(1, 2)).add(Gate::cnot(1, 3)).add(Gate::toffoli(2, 3, 1));
  code.corrects = single_kind(Pauli::Z, code.code_wires());
  return code;
}

QecCode shor5_code() {
  QecCode code;
  code.name = "shor5";
  code.n = 5;
  Circuit& e = code.encoder = Circuit(6);
  // Each ancilla is put in |+> and then controls a Pauli string; the string
  // is lowered to commuting two-qubit gates sharing the control.
  e.add(Gate::z(1)).add(Gate::h(2));
  e.add(Gate::cnot(2, 1)).add(Gate::cz(2, 3)).add(Gate::cz(2, 5));
  e.add(Gate::h(5));
  e.add(Gate::cnot(5, 1)).add(Gate::cz(5, 2)).add(Gate::cz(5, 4));
  e.add(Gate::h(4));
  e.add(Gate::cz(4, 1)).add(Gate::cz(4, 3)).add(Gate::cnot(4, 5));
  e.add(Gate::h(3));
  e.add(Gate::cz(3, 2)).add(Gate::cnot(3, 4)).add(Gate::cz(3, 5));
  code.decoder = Circuit(6);
  code.corrects = all_single_paulis(code.code_wires());
  code.recovery = build_recovery(code.encoder, code.n, code.corrects);
  return code;
}

QecCode shor9_code() {
  QecCode code;
  code.name = "shor9";
  code.n = 9;
  constexpr std::array<int, 3> heads = {1, 4, 7};
  Circuit& e = code.encoder = Circuit(10);
  e.add(Gate::cnot(1, 7)).add(Gate::cnot(1, 4));
  for (int h : heads) e.add(Gate::h(h));
  for (int h : heads) e.add(Gate::cnot(h, h + 1));
  for (int h : heads) e.add(Gate::cnot(h, h + 2));

  Circuit& d = code.decoder = Circuit(10);
  for (int h : heads) d.add(Gate::cnot(h, h + 1));
  for (int h : heads) d.add(Gate::cnot(h, h + 2));
  for (int h : heads) d.add(Gate::toffoli(h + 1, h + 2, h));
  for (int h : heads) d.add(Gate::h(h));
  d.add(Gate::cnot(1, 7)).add(Gate::cnot(1, 4)).add(Gate::toffoli(4, 7, 1));
  code.corrects = all_single_paulis(code.code_wires());
  return code;
}

QecCode code_by_name(std::string_view name) {
  if (name == "none") return trivial_code();
  if (name == "bit3") return bit_flip_code();
  if (name == "phase3") return phase_flip_code();
  if (name == "shor5") return shor5_code();
  if (name == "shor9") return shor9_code();
  throw RangeError("unknown code '" + std::string(name) + "' (expected none, bit3, phase3, shor5, shor9)");
}

std::vector<std::string_view> code_names() { return {"none", "bit3", "phase3", "shor5", "shor9"}; }

Gate build_recovery(const Circuit& encoder, int n, const std::vector<PauliError>& errors) {
  if (n < 1 || encoder.wire_count() != n + 1) {
    throw DimensionError("build_recovery: encoder must act on an (n+1)-wire register");
  }
  const std::vector<int> wires = iota_wires(1, n);
  const Eigen::Index dim = Eigen::Index{1} << n;
  const auto syndromes = static_cast<Eigen::Index>(errors.size() + 1);
  if (2 * syndromes > dim) {
    throw InvariantError("build_recovery: " + std::to_string(syndromes) + " syndromes do not fit in " +
                         std::to_string(n - 1) + " ancilla qubits");
  }
  for (const auto& err : errors) {
    if (err.wire < 1 || err.wire > n) throw DimensionError("build_recovery: error wire outside the code");
  }

  const Matrix enc = encoder.unitary_on(wires);
  const Eigen::Index logical_stride = dim / 2;
  Matrix corrupted(dim, 2 * syndromes);
  Matrix targets = Matrix::Zero(dim, 2 * syndromes);
  std::vector<bool> used(static_cast<std::size_t>(dim), false);
  for (Eigen::Index s = 0; s < syndromes; ++s) {
    for (Eigen::Index logical = 0; logical < 2; ++logical) {
      Vector v = enc.col(logical * logical_stride);
      if (s > 0) {
        const auto& err = errors[static_cast<std::size_t>(s - 1)];
        v = apply_local(PauliBasis::element(err.pauli), err.wire - 1, n, std::move(v));
      }
      const Eigen::Index col = 2 * s + logical;
      corrupted.col(col) = v;
      const Eigen::Index out = logical * logical_stride + s;
      targets(out, col) = 1.0;
      used[static_cast<std::size_t>(out)] = true;
    }
  }

  const Matrix gram = corrupted.adjoint() * corrupted;
  const double overlap = max_abs_diff(gram, Matrix::Identity(gram.rows(), gram.cols()));
  if (overlap > 1e-10) {
    throw InvariantError("build_recovery: corrupted code subspaces are not orthogonal (overlap " +
                         std::to_string(overlap) + "); the encoder does not correct this error set");
  }

  Matrix recovery = targets * corrupted.adjoint();
  const Eigen::Index rest = dim - 2 * syndromes;
  if (rest > 0) {
    Eigen::HouseholderQR<Matrix> qr(corrupted);
    const Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
    const Matrix complement = q.rightCols(rest);
    Matrix free_targets = Matrix::Zero(dim, rest);
    Eigen::Index next = 0;
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (!used[static_cast<std::size_t>(i)]) free_targets(i, next++) = 1.0;
    }
    recovery += free_targets * complement.adjoint();
  }
  return Gate::block(std::move(recovery), wires);
}

Gate build_recovery(const Circuit& encoder, int n) {
  return build_recovery(encoder, n, all_single_paulis(iota_wires(1, n)));
}

}  // namespace decom
