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

#include "decom/channel.hpp"

#include <cmath>

namespace decom {

namespace {

const std::array<Matrix, 4>& pauli_table() {
  static const std::array<Matrix, 4> table = [] {
    std::array<Matrix, 4> t;
    const Complex i(0.0, 1.0);
    t[0] = Matrix::Identity(2, 2);
    t[1] = Matrix::Zero(2, 2);
    t[1](0, 1) = 1.0;
    t[1](1, 0) = 1.0;
    t[2] = Matrix::Zero(2, 2);
    t[2](0, 1) = -i;
    t[2](1, 0) = i;
    t[3] = Matrix::Zero(2, 2);
    t[3](0, 0) = 1.0;
    t[3](1, 1) = -1.0;
    return t;
  }();
  return table;
}

void require_qubit(Eigen::Index dim, const char* what) {
  if (dim != 2) {
    throw DimensionError(std::string(what) + ": chi representation is defined for d = 2 only");
  }
}

}  // namespace

// ---------------------------------------------------------------- DensityMatrix

DensityMatrix::DensityMatrix(Matrix entries, double psd_slack) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw DimensionError("DensityMatrix: entries must be a non-empty square matrix");
  }
  const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
  if (!is_hermitian(entries_, tol::kAlgebraic * scale * 10.0)) {
    throw InvariantError("DensityMatrix: not Hermitian");
  }
  entries_ = 0.5 * (entries_ + entries_.adjoint());
  const double tr = entries_.trace().real();
  if (std::abs(tr - 1.0) > psd_slack + tol::kAlgebraic) {
    throw InvariantError("DensityMatrix: trace " + std::to_string(tr) + " != 1");
  }
  entries_ /= tr;
  if (hermitian_eigenvalues(entries_).minCoeff() < -std::max(psd_slack, tol::kPositivity)) {
    throw InvariantError("DensityMatrix: not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::from_bloch(double px, double py, double pz) {
  if (px * px + py * py + pz * pz > 1.0 + 1e-12) {
    throw RangeError("DensityMatrix::from_bloch: Bloch vector outside the unit ball");
  }
  Matrix rho = 0.5 * (PauliBasis::element(0) + px * PauliBasis::element(1) +
                      py * PauliBasis::element(2) + pz * PauliBasis::element(3));
  return DensityMatrix(std::move(rho));
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const double n = psi.norm();
  if (n == 0.0) throw RangeError("DensityMatrix::pure: zero vector");
  Vector v = psi / n;
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::zero_state(int qubits) {
  if (qubits < 1) throw RangeError("DensityMatrix::zero_state: need at least one qubit");
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  Matrix rho = Matrix::Zero(dim, dim);
  rho(0, 0) = 1.0;
  return DensityMatrix(std::move(rho));
}

double DensityMatrix::purity() const { return (entries_ * entries_).trace().real(); }

// ---------------------------------------------------------------- KrausChannel

KrausChannel::KrausChannel(std::vector<Matrix> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) throw DimensionError("KrausChannel: no operators");
  dim_ = operators_.front().rows();
  for (const auto& e : operators_) {
    if (e.rows() != dim_ || e.cols() != dim_) {
      throw DimensionError("KrausChannel: operators must all be square of equal size");
    }
  }
  if (completeness_error() > tol::kAlgebraic) {
    throw InvariantError("KrausChannel: completeness sum E^dag E = I violated");
  }
}

KrausChannel KrausChannel::identity(Eigen::Index dim) {
  return KrausChannel({Matrix::Identity(dim, dim)});
}

KrausChannel KrausChannel::unitary(const Matrix& u) { return KrausChannel({u}); }

KrausChannel KrausChannel::mixture(double weight, const KrausChannel& a, const KrausChannel& b) {
  if (weight < 0.0 || weight > 1.0) throw RangeError("KrausChannel::mixture: weight outside [0,1]");
  if (a.dim() != b.dim()) throw DimensionError("KrausChannel::mixture: dimension mismatch");
  std::vector<Matrix> ops;
  for (const auto& e : a.operators()) ops.push_back(std::sqrt(weight) * e);
  for (const auto& e : b.operators()) ops.push_back(std::sqrt(1.0 - weight) * e);
  return KrausChannel(std::move(ops));
}

double KrausChannel::completeness_error() const {
  Matrix sum = Matrix::Zero(dim_, dim_);
  for (const auto& e : operators_) sum += e.adjoint() * e;
  return max_abs_diff(sum, Matrix::Identity(dim_, dim_));
}

// ---------------------------------------------------------------- PauliBasis

const Matrix& PauliBasis::element(int alpha) {
  if (alpha < 0 || alpha > 3) throw RangeError("PauliBasis: index outside 0..3");
  return pauli_table()[static_cast<std::size_t>(alpha)];
}

// ---------------------------------------------------------------- ChiMatrix

ChiMatrix::ChiMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != 4 || entries_.cols() != 4) {
    throw DimensionError("ChiMatrix: qubit chi must be 4x4");
  }
  if (!is_hermitian(entries_, tol::kAlgebraic)) {
    throw InvariantError("ChiMatrix: chi_ba = conj(chi_ab) violated");
  }
  entries_ = 0.5 * (entries_ + entries_.adjoint());
}

ChiMatrix ChiMatrix::from_params(const ChiParams& k) {
  const Complex i(0.0, 1.0);
  Matrix c = Matrix::Zero(4, 4);
  c(0, 0) = 1.0 - k[1] - k[2] - k[3];
  c(1, 1) = k[1];
  c(2, 2) = k[2];
  c(3, 3) = k[3];
  c(0, 1) = k[4] + i * k[5];
  c(0, 2) = k[6] + i * k[7];
  c(0, 3) = k[8] + i * k[9];
  c(1, 2) = k[10] - i * k[8];
  c(1, 3) = k[11] + i * k[6];
  c(2, 3) = k[12] - i * k[4];
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < a; ++b) c(a, b) = std::conj(c(b, a));
  }
  return ChiMatrix(std::move(c));
}

ChiMatrix ChiMatrix::diagonal(double c0, double c1, double c2, double c3) {
  Matrix c = Matrix::Zero(4, 4);
  c(0, 0) = c0;
  c(1, 1) = c1;
  c(2, 2) = c2;
  c(3, 3) = c3;
  return ChiMatrix(std::move(c));
}

ChiParams ChiMatrix::params() const {
  const Matrix& c = entries_;
  ChiParams k{};
  k[1] = c(1, 1).real();
  k[2] = c(2, 2).real();
  k[3] = c(3, 3).real();
  k[4] = c(0, 1).real();
  k[5] = c(0, 1).imag();
  k[6] = c(0, 2).real();
  k[7] = c(0, 2).imag();
  k[8] = c(0, 3).real();
  k[9] = c(0, 3).imag();
  k[10] = c(1, 2).real();
  k[11] = c(1, 3).real();
  k[12] = c(2, 3).real();
  return k;
}

bool ChiMatrix::is_diagonal(double eps) const {
  Matrix off = entries_;
  off.diagonal().setZero();
  return off.cwiseAbs().maxCoeff() <= eps;
}

double ChiMatrix::linear_magnitude() const {
  const ChiParams k = params();
  return std::max({std::abs(k[4]), std::abs(k[6]), std::abs(k[8])});
}

Matrix ChiMatrix::trace_operator() const {
  Matrix sum = Matrix::Zero(2, 2);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      sum += entries_(a, b) * PauliBasis::element(b).adjoint() * PauliBasis::element(a);
    }
  }
  return sum;
}

std::array<double, 4> ChiMatrix::tp_relation_residuals() const {
  const Matrix& c = entries_;
  return {
      std::abs(c(0, 0).real() - (1.0 - c(1, 1).real() - c(2, 2).real() - c(3, 3).real())),
      std::abs(c(1, 2).imag() + c(3, 0).real()),
      std::abs(c(3, 1).imag() + c(2, 0).real()),
      std::abs(c(2, 3).imag() + c(1, 0).real()),
  };
}

// ---------------------------------------------------------------- supervectors

Vector vectorize(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("vectorize: square matrix required");
  const Eigen::Index d = a.rows();
  Vector v(d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) v(i * d + j) = a(i, j);
  }
  return v;
}

Matrix devectorize(const Vector& v) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (d * d != v.size()) throw DimensionError("devectorize: length is not a perfect square");
  Matrix a(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = v(i * d + j);
  }
  return a;
}

Vector maximally_entangled(int d) {
  if (d < 2) throw RangeError("maximally_entangled: d must be >= 2");
  Vector omega = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) omega(static_cast<Eigen::Index>(i) * d + i) = amp;
  return omega;
}

// ---------------------------------------------------------------- ChoiState

ChoiState::ChoiState(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw DimensionError("ChoiState: square matrix required");
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(entries_.rows()))));
  if (d * d != entries_.rows() || d < 2) {
    throw DimensionError("ChoiState: dimension must be d^2 with d >= 2");
  }
  if (!is_hermitian(entries_, 1e-10)) throw InvariantError("ChoiState: not Hermitian");
  entries_ = 0.5 * (entries_ + entries_.adjoint());
}

RealVector ChoiState::eigenvalues() const { return hermitian_eigenvalues(entries_); }

bool ChoiState::is_psd(double floor) const { return eigenvalues().minCoeff() >= -floor; }

Matrix ChoiState::reference_marginal() const {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(entries_.rows()))));
  Matrix out = Matrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    out += entries_.block(k * d, k * d, d, d);
  }
  return out;
}

// ---------------------------------------------------------------- operations

Matrix apply_channel(const KrausChannel& ch, const Matrix& rho) {
  if (ch.dim() != rho.rows() || rho.rows() != rho.cols()) {
    throw DimensionError("apply_channel: channel and state dimensions differ");
  }
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const auto& e : ch.operators()) out += e * rho * e.adjoint();
  return out;
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
  return DensityMatrix(apply_channel(ch, rho.matrix()));
}

Matrix apply_chi(const ChiMatrix& chi, const Matrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw DimensionError("apply_chi: qubit state required");
  Matrix out = Matrix::Zero(2, 2);
  for (int a = 0; a < 4; ++a) {
    const Matrix left = PauliBasis::element(a) * rho;
    for (int b = 0; b < 4; ++b) {
      if (chi(a, b) == Complex(0.0)) continue;
      out += chi(a, b) * left * PauliBasis::element(b).adjoint();
    }
  }
  return out;
}

DensityMatrix apply_chi(const ChiMatrix& chi, const DensityMatrix& rho) {
  return DensityMatrix(apply_chi(chi, rho.matrix()));
}

ChiMatrix kraus_to_chi(const KrausChannel& ch) {
  require_qubit(ch.dim(), "kraus_to_chi");
  Matrix chi = Matrix::Zero(4, 4);
  for (const auto& e : ch.operators()) {
    Vector c(4);
    for (int a = 0; a < 4; ++a) c(a) = (PauliBasis::element(a).adjoint() * e).trace() / 2.0;
    chi += c * c.adjoint();
  }
  return ChiMatrix(std::move(chi));
}

ChoiState chi_to_choi(const ChiMatrix& chi) {
  Matrix tau = Matrix::Zero(4, 4);
  std::array<Vector, 4> vecs;
  for (int a = 0; a < 4; ++a) vecs[a] = vectorize(PauliBasis::element(a));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) tau += chi(a, b) * vecs[a] * vecs[b].adjoint();
  }
  return ChoiState(tau / 2.0);
}

ChiMatrix choi_to_chi(const ChoiState& tau) {
  if (tau.dim() != 4) throw DimensionError("choi_to_chi: qubit Choi state (4x4) required");
  const Matrix scaled = 2.0 * tau.matrix();  // chi-hat-hat = d * tau
  Matrix chi(4, 4);
  std::array<Vector, 4> vecs;
  for (int a = 0; a < 4; ++a) vecs[a] = vectorize(PauliBasis::element(a));
  // <<P_a|P_b>> = 2 delta_ab, so each projection carries a factor 1/(2*2).
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      chi(a, b) = vecs[a].dot(scaled * vecs[b]) / 4.0;
    }
  }
  return ChiMatrix(std::move(chi));
}

ChoiState kraus_to_choi(const KrausChannel& ch) {
  const auto d = static_cast<int>(ch.dim());
  const Vector omega = maximally_entangled(d);
  const Matrix proj = omega * omega.adjoint();
  const Matrix id = Matrix::Identity(d, d);
  Matrix tau = Matrix::Zero(d * d, d * d);
  for (const auto& e : ch.operators()) {
    const Matrix lifted = kron(e, id);
    tau += lifted * proj * lifted.adjoint();
  }
  return ChoiState(std::move(tau));
}

Matrix apply_choi(const ChoiState& tau, const Matrix& rho) {
  const Eigen::Index d = rho.rows();
  if (tau.dim() != d * d) throw DimensionError("apply_choi: dimension mismatch");
  const Matrix lifted = tau.matrix() * kron(Matrix::Identity(d, d), rho.transpose());
  Matrix out = Matrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      Complex s = 0.0;
      for (Eigen::Index k = 0; k < d; ++k) s += lifted(i * d + k, j * d + k);
      out(i, j) = s;
    }
  }
  return static_cast<double>(d) * out;
}

CptpReport verify_cptp(const ChiMatrix& chi) {
  const double tp_err = max_abs_diff(chi.trace_operator(), Matrix::Identity(2, 2));
  const double min_eig = hermitian_eigenvalues(chi.matrix()).minCoeff();
  return {tp_err <= tol::kPositivity, min_eig >= -tol::kPositivity, min_eig};
}

}  // namespace decom
