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

#include "decom/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace decom {

namespace {

Matrix controlled_matrix(const Matrix& target_op, std::size_t controls) {
  const Eigen::Index dim = Eigen::Index{2} << controls;
  Matrix u = Matrix::Identity(dim, dim);
  u.bottomRightCorner(2, 2) = target_op;
  return u;
}

// Offsets of the 2^k local basis states within the global index, with
// wires[0] as the most significant local bit.
std::vector<Eigen::Index> local_offsets(const std::vector<int>& wires, int wire_count) {
  const std::size_t k = wires.size();
  std::vector<Eigen::Index> offsets(std::size_t{1} << k, 0);
  for (std::size_t j = 0; j < offsets.size(); ++j) {
    Eigen::Index off = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if ((j >> (k - 1 - i)) & 1U) off |= Eigen::Index{1} << (wire_count - 1 - wires[i]);
    }
    offsets[j] = off;
  }
  return offsets;
}

Eigen::Index wire_mask(const std::vector<int>& wires, int wire_count) {
  Eigen::Index mask = 0;
  for (int w : wires) mask |= Eigen::Index{1} << (wire_count - 1 - w);
  return mask;
}

}  // namespace

// ---------------------------------------------------------------- Gate

Gate::Gate(GateKind kind, std::vector<int> wires, Matrix matrix)
    : kind_(kind), wires_(std::move(wires)), matrix_(std::move(matrix)) {
  const Eigen::Index dim = Eigen::Index{1} << wires_.size();
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw DimensionError("Gate: matrix size does not match the number of wires");
  }
  if (max_abs_diff(matrix_.adjoint() * matrix_, Matrix::Identity(dim, dim)) > tol::kAlgebraic) {
    throw InvariantError("Gate: matrix is not unitary");
  }
}

Gate Gate::h(int wire) {
  Matrix u(2, 2);
  u << 1.0, 1.0, 1.0, -1.0;
  return Gate(GateKind::H, {wire}, u / std::numbers::sqrt2);
}

Gate Gate::x(int wire) { return Gate(GateKind::X, {wire}, PauliBasis::element(Pauli::X)); }

Gate Gate::z(int wire) { return Gate(GateKind::Z, {wire}, PauliBasis::element(Pauli::Z)); }

Gate Gate::cnot(int control, int target) {
  return Gate(GateKind::CNOT, {control, target}, controlled_matrix(PauliBasis::element(Pauli::X), 1));
}

Gate Gate::cz(int a, int b) {
  return Gate(GateKind::CZ, {a, b}, controlled_matrix(PauliBasis::element(Pauli::Z), 1));
}

Gate Gate::toffoli(int c1, int c2, int target) {
  return Gate(GateKind::Toffoli, {c1, c2, target}, controlled_matrix(PauliBasis::element(Pauli::X), 2));
}

Gate Gate::controlled(Pauli pauli, std::vector<int> controls, int target) {
  if (controls.empty()) throw DimensionError("Gate::controlled: at least one control required");
  const std::size_t n = controls.size();
  controls.push_back(target);
  return Gate(GateKind::MultiControlled, std::move(controls), controlled_matrix(PauliBasis::element(pauli), n));
}

Gate Gate::block(Matrix u, std::vector<int> wires) {
  return Gate(GateKind::BlockUnitary, std::move(wires), std::move(u));
}

void Gate::validate(int wire_count) const {
  std::set<int> seen;
  for (int w : wires_) {
    if (w < 0 || w >= wire_count) {
      throw DimensionError("Gate: wire " + std::to_string(w) + " outside 0.." + std::to_string(wire_count - 1));
    }
    if (!seen.insert(w).second) throw DimensionError("Gate: repeated wire " + std::to_string(w));
  }
}

NoiseLayer uniform_noise(const KrausChannel& ch, const std::vector<int>& wires) {
  NoiseLayer layer;
  layer.reserve(wires.size());
  for (int w : wires) layer.push_back({w, ch});
  return layer;
}

// ---------------------------------------------------------------- Circuit

Circuit::Circuit(int wire_count) : wire_count_(wire_count) {
  if (wire_count < 1) throw DimensionError("Circuit: wire_count must be positive");
}

Circuit& Circuit::add(Gate gate) {
  gate.validate(wire_count_);
  steps_.emplace_back(std::move(gate));
  return *this;
}

Circuit& Circuit::add_noise_slot(std::vector<int> wires) {
  for (int w : wires) {
    if (w < 0 || w >= wire_count_) throw DimensionError("Circuit: noise slot wire out of range");
  }
  steps_.emplace_back(NoiseSlot{std::move(wires)});
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.wire_count() != wire_count_) throw DimensionError("Circuit::append: wire count mismatch");
  steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
  return *this;
}

bool Circuit::has_noise_slot() const {
  return std::any_of(steps_.begin(), steps_.end(),
                     [](const Step& s) { return std::holds_alternative<NoiseSlot>(s); });
}

Matrix Circuit::unitary_on(const std::vector<int>& wires) const {
  const int k = static_cast<int>(wires.size());
  const Eigen::Index dim = Eigen::Index{1} << k;
  // Local position of every global wire, -1 when outside the window.
  std::vector<int> local(static_cast<std::size_t>(wire_count_), -1);
  for (int i = 0; i < k; ++i) local[static_cast<std::size_t>(wires[static_cast<std::size_t>(i)])] = i;

  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& step : steps_) {
    const auto* gate = std::get_if<Gate>(&step);
    if (gate == nullptr) continue;
    std::vector<int> mapped;
    for (int w : gate->wires()) {
      const int l = local[static_cast<std::size_t>(w)];
      if (l < 0) throw DimensionError("Circuit::unitary_on: gate acts outside the requested wires");
      mapped.push_back(l);
    }
    // Left-multiply the accumulated unitary column by column.
    const auto offsets = local_offsets(mapped, k);
    const Eigen::Index mask = wire_mask(mapped, k);
    const Matrix& g = gate->local_matrix();
    Vector buf(static_cast<Eigen::Index>(offsets.size()));
    for (Eigen::Index col = 0; col < dim; ++col) {
      for (Eigen::Index r = 0; r < dim; ++r) {
        if (r & mask) continue;
        for (std::size_t j = 0; j < offsets.size(); ++j) buf(static_cast<Eigen::Index>(j)) = u(r + offsets[j], col);
        const Vector out = g * buf;
        for (std::size_t j = 0; j < offsets.size(); ++j) u(r + offsets[j], col) = out(static_cast<Eigen::Index>(j));
      }
    }
  }
  return u;
}

// ---------------------------------------------------------------- MultiQubitState

MultiQubitState::MultiQubitState(int wire_count) : wire_count_(wire_count) {
  if (wire_count < 1 || wire_count > 14) throw DimensionError("MultiQubitState: wire_count must lie in 1..14");
  const Eigen::Index dim = Eigen::Index{1} << wire_count;
  rho_ = Matrix::Zero(dim, dim);
  rho_(0, 0) = 1.0;
}

MultiQubitState::MultiQubitState(int wire_count, Matrix rho) : wire_count_(wire_count), rho_(std::move(rho)) {
  if (wire_count < 1 || wire_count > 14) throw DimensionError("MultiQubitState: wire_count must lie in 1..14");
  const Eigen::Index dim = Eigen::Index{1} << wire_count;
  if (rho_.rows() != dim || rho_.cols() != dim) throw DimensionError("MultiQubitState: matrix size != 2^wire_count");
}

double MultiQubitState::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho_.cwiseAbs2().sum();
}

void MultiQubitState::check_wire(int wire) const {
  if (wire < 0 || wire >= wire_count_) {
    throw DimensionError("wire " + std::to_string(wire) + " outside 0.." + std::to_string(wire_count_ - 1));
  }
}

void MultiQubitState::left_multiply(const Matrix& u, const std::vector<int>& wires, Matrix& target) const {
  const auto offsets = local_offsets(wires, wire_count_);
  const Eigen::Index mask = wire_mask(wires, wire_count_);
  const auto k = static_cast<Eigen::Index>(offsets.size());
  const Eigen::Index dim = target.rows();
  Vector buf(k);
  Vector out(k);
  for (Eigen::Index col = 0; col < dim; ++col) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (r & mask) continue;
      for (Eigen::Index j = 0; j < k; ++j) buf(j) = target(r + offsets[static_cast<std::size_t>(j)], col);
      out.noalias() = u * buf;
      for (Eigen::Index j = 0; j < k; ++j) target(r + offsets[static_cast<std::size_t>(j)], col) = out(j);
    }
  }
}

void MultiQubitState::right_multiply_adjoint(const Matrix& u, const std::vector<int>& wires, Matrix& target) const {
  const auto offsets = local_offsets(wires, wire_count_);
  const Eigen::Index mask = wire_mask(wires, wire_count_);
  const auto k = static_cast<Eigen::Index>(offsets.size());
  const Eigen::Index dim = target.rows();
  const Matrix uc = u.conjugate();
  for (Eigen::Index r = 0; r < dim; ++r) {
    if (r & mask) continue;
    // Columns r + offsets[j] form a dim x k slab; multiply it by U^dag.
    Matrix slab(dim, k);
    for (Eigen::Index j = 0; j < k; ++j) slab.col(j) = target.col(r + offsets[static_cast<std::size_t>(j)]);
    const Matrix res = slab * uc.transpose();
    for (Eigen::Index j = 0; j < k; ++j) target.col(r + offsets[static_cast<std::size_t>(j)]) = res.col(j);
  }
}

void MultiQubitState::apply(const Gate& gate) {
  gate.validate(wire_count_);
  left_multiply(gate.local_matrix(), gate.wires(), rho_);
  right_multiply_adjoint(gate.local_matrix(), gate.wires(), rho_);
  rho_ /= trace();
}

void MultiQubitState::apply_noise(const KrausChannel& ch, const std::vector<int>& wires) {
  if (ch.dim() != 2) throw DimensionError("apply_noise: single-qubit channel required");
  for (int w : wires) check_wire(w);
  for (int w : wires) {
    const std::vector<int> target{w};
    if (ch.operators().size() == 1) {
      left_multiply(ch.operators().front(), target, rho_);
      right_multiply_adjoint(ch.operators().front(), target, rho_);
      continue;
    }
    Matrix acc = Matrix::Zero(rho_.rows(), rho_.cols());
    for (const auto& e : ch.operators()) {
      Matrix term = rho_;
      left_multiply(e, target, term);
      right_multiply_adjoint(e, target, term);
      acc += term;
    }
    rho_ = std::move(acc);
  }
}

void MultiQubitState::apply_noise(const NoiseLayer& layer) {
  for (const auto& entry : layer) apply_noise(entry.channel, {entry.wire});
}

void MultiQubitState::run(const Circuit& circuit, const NoiseLayer& layer) {
  if (circuit.wire_count() != wire_count_) throw DimensionError("run: circuit and state wire counts differ");
  for (const auto& step : circuit.steps()) {
    if (const auto* gate = std::get_if<Gate>(&step)) {
      apply(*gate);
      continue;
    }
    const auto& slot = std::get<NoiseSlot>(step);
    for (const auto& entry : layer) {
      if (std::find(slot.wires.begin(), slot.wires.end(), entry.wire) == slot.wires.end()) {
        throw DimensionError("run: noise on wire " + std::to_string(entry.wire) + " outside the noise slot");
      }
    }
    apply_noise(layer);
  }
}

MultiQubitState apply_gate(MultiQubitState state, const Gate& gate) {
  state.apply(gate);
  return state;
}

MultiQubitState apply_noise_all(MultiQubitState state, const KrausChannel& ch, const std::vector<int>& wires) {
  state.apply_noise(ch, wires);
  return state;
}

DensityMatrix partial_trace(const MultiQubitState& state, const std::vector<int>& keep_wires) {
  if (keep_wires.empty()) throw DimensionError("partial_trace: keep set is empty");
  const int m = state.wire_count();
  std::set<int> kept;
  for (int w : keep_wires) {
    if (w < 0 || w >= m) throw DimensionError("partial_trace: wire out of range");
    if (!kept.insert(w).second) throw DimensionError("partial_trace: repeated wire");
  }
  std::vector<int> traced;
  for (int w = 0; w < m; ++w) {
    if (!kept.count(w)) traced.push_back(w);
  }
  const auto keep_off = local_offsets(keep_wires, m);
  const auto trace_off = traced.empty() ? std::vector<Eigen::Index>{0} : local_offsets(traced, m);
  const auto kd = static_cast<Eigen::Index>(keep_off.size());
  const Matrix& rho = state.matrix();
  Matrix out = Matrix::Zero(kd, kd);
  for (Eigen::Index a = 0; a < kd; ++a) {
    for (Eigen::Index b = 0; b < kd; ++b) {
      Complex s = 0.0;
      for (Eigen::Index t : trace_off) {
        s += rho(keep_off[static_cast<std::size_t>(a)] + t, keep_off[static_cast<std::size_t>(b)] + t);
      }
      out(a, b) = s;
    }
  }
  return DensityMatrix(std::move(out));
}

}  // namespace decom
