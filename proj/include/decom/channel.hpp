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

// Single-qubit channel representations: Kraus sums, process (chi) matrices in
// the Pauli basis and Choi states, with conversions between them.
//
// Conventions used throughout the library:
//   * supervectors flatten row-major: |A>> = [A11, ..., A1d, A21, ..., Add]^T
//   * in a Choi state the channel acts on the FIRST tensor factor and the
//     untouched reference is the second factor
//   * Pauli matrices are unnormalized, Tr(P^dag P) = 2

#include <array>
#include <vector>

#include "decom/linalg.hpp"

namespace decom {

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityMatrix {
 public:
  /// Validates the invariants. Trace is renormalized exactly; a negative
  /// eigenvalue floor of `psd_slack` is tolerated for simulated states.
  explicit DensityMatrix(Matrix entries, double psd_slack = tol::kDegenerate);

  /// rho = (I + Px X + Py Y + Pz Z) / 2.
  static DensityMatrix from_bloch(double px, double py, double pz);
  /// |psi><psi| for a (not necessarily normalized) state vector.
  static DensityMatrix pure(const Vector& psi);
  /// |0...0><0...0| on `qubits` qubits.
  static DensityMatrix zero_state(int qubits);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
  double purity() const;

 private:
  Matrix entries_;
};

/// Ordered Kraus operators satisfying sum_i E_i^dag E_i = I.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix> operators);

  static KrausChannel identity(Eigen::Index dim = 2);
  /// Single unitary conjugation rho -> U rho U^dag.
  static KrausChannel unitary(const Matrix& u);
  /// Convex combination w*a + (1-w)*b realized by concatenated Kraus sets.
  static KrausChannel mixture(double weight, const KrausChannel& a, const KrausChannel& b);

  Eigen::Index dim() const { return dim_; }
  const std::vector<Matrix>& operators() const { return operators_; }
  /// max |(sum E^dag E - I)_ij|
  double completeness_error() const;

 private:
  Eigen::Index dim_;
  std::vector<Matrix> operators_;
};

enum class Pauli { I = 0, X = 1, Y = 2, Z = 3 };

/// The ordered operator basis {I, X, Y, Z} for one qubit.
class PauliBasis {
 public:
  static const Matrix& element(int alpha);
  static const Matrix& element(Pauli p) { return element(static_cast<int>(p)); }
  static constexpr int size() { return 4; }
  static char label(int alpha) { return "IXYZ"[alpha]; }
};

/// chi_k parameters of a trace-preserving qubit chi matrix (k = 1..12), in
/// the positions of the twelve-parameter display:
///   chi_1..3 = chi_11, chi_22, chi_33
///   chi_4 + i chi_5 = chi_01,  chi_6 + i chi_7 = chi_02,  chi_8 + i chi_9 = chi_03
///   chi_10 = Re chi_12, chi_11 = Re chi_13, chi_12 = Re chi_23
/// Index 0 is unused so that `k[n]` reads as chi_n.
using ChiParams = std::array<double, 13>;

/// 4x4 Hermitian process matrix in the Pauli basis:
/// E(rho) = sum_ab chi_ab P_a rho P_b^dag.
class ChiMatrix {
 public:
  explicit ChiMatrix(Matrix entries);

  /// Builds the trace-preserving chi with the given twelve parameters.
  /// Imaginary parts of chi_12, chi_13, chi_23 are fixed by trace
  /// preservation: Im chi_12 = -chi_8, Im chi_13 = chi_6, Im chi_23 = -chi_4.
  static ChiMatrix from_params(const ChiParams& k);
  static ChiMatrix diagonal(double c0, double c1, double c2, double c3);
  static ChiMatrix identity() { return diagonal(1.0, 0.0, 0.0, 0.0); }

  const Matrix& matrix() const { return entries_; }
  Complex operator()(int a, int b) const { return entries_(a, b); }
  Eigen::Index d() const { return 2; }

  ChiParams params() const;
  bool is_diagonal(double eps = tol::kAlgebraic) const;
  /// Largest |chi_4|, |chi_6|, |chi_8|; these feed the linear Bloch terms.
  double linear_magnitude() const;

  /// sum_ab chi_ab P_b^dag P_a (equals I for trace-preserving maps).
  Matrix trace_operator() const;
  /// Residuals of the four scalar trace-preservation relations
  ///   chi_00 = 1 - chi_11 - chi_22 - chi_33
  ///   Im chi_12 = -Re chi_30,  Im chi_31 = -Re chi_20,  Im chi_23 = -Re chi_10
  std::array<double, 4> tp_relation_residuals() const;

 private:
  Matrix entries_;
};

/// Row-major flattening |A>> of a square matrix.
Vector vectorize(const Matrix& a);
/// Inverse of vectorize.
Matrix devectorize(const Vector& v);

/// (1/sqrt d) sum_i |i>|i>.
Vector maximally_entangled(int d);

/// Choi state tau = (E (x) I)|Omega><Omega| on the doubled space. Not
/// necessarily PSD: non-CP maps produce indefinite tau.
class ChoiState {
 public:
  explicit ChoiState(Matrix entries);

  const Matrix& matrix() const { return entries_; }
  Eigen::Index dim() const { return entries_.rows(); }
  /// Spectrum, ascending.
  RealVector eigenvalues() const;
  bool is_psd(double floor = tol::kPositivity) const;
  /// Partial trace over the channel (first) factor; I/d for TP channels.
  Matrix reference_marginal() const;

 private:
  Matrix entries_;
};

struct CptpReport {
  bool trace_preserving;
  bool completely_positive;
  double min_eigenvalue;
};

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);
/// Raw Kraus action without state validation (used on indefinite inputs).
Matrix apply_channel(const KrausChannel& ch, const Matrix& rho);
DensityMatrix apply_chi(const ChiMatrix& chi, const DensityMatrix& rho);
Matrix apply_chi(const ChiMatrix& chi, const Matrix& rho);

ChiMatrix kraus_to_chi(const KrausChannel& ch);
ChoiState chi_to_choi(const ChiMatrix& chi);
ChiMatrix choi_to_chi(const ChoiState& tau);
/// Choi state computed directly from Kraus operators, (E (x) I)|Omega><Omega|.
ChoiState kraus_to_choi(const KrausChannel& ch);
/// Action on rho reconstructed from tau: d * Tr_2[tau (I (x) rho^T)].
Matrix apply_choi(const ChoiState& tau, const Matrix& rho);

CptpReport verify_cptp(const ChiMatrix& chi);

}  // namespace decom
