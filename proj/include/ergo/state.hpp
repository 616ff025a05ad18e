// Copyright 2026 The ergo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>

#include "ergo/pauli.hpp"

namespace ergo {

using Cplx = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Amplitude vectors are allowed up to this size; dense matrices only up to
/// kMaxDenseQubits.
inline constexpr int kMaxAmplitudeQubits = 16;

/// Pure state of n qubits: 2^n amplitudes with unit norm (checked to 1e-12).
/// Basis index bit (n-1-j) holds qubit j, i.e. qubit 0 is the most
/// significant bit.
class PureState {
 public:
  PureState(int n_qubits, Vector amplitudes);

  static PureState basis_state(int n_qubits, uint64_t index);

  int n_qubits() const { return n_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Vector& amplitudes() const { return amps_; }

 private:
  int n_;
  Vector amps_;
};

/// Density matrix of n qubits: Hermitian, unit trace (both checked to 1e-12).
/// Positivity is not enforced here; consumers that need it check spectra.
class DensityMatrix {
 public:
  DensityMatrix(int n_qubits, Matrix rho);

  static DensityMatrix from_pure(const PureState& state);

  int n_qubits() const { return n_; }
  Eigen::Index dim() const { return rho_.rows(); }
  const Matrix& matrix() const { return rho_; }

 private:
  int n_;
  Matrix rho_;
};

/// sign * P(x,z) |state>, computed in O(2^n) without forming a matrix.
PureState pauli_apply(const PauliString& p, const PureState& state);

/// <state| sign * P |state>; real because P is Hermitian.
double pauli_expectation(const PureState& state, const PauliString& p);

/// Tr[rho * sign * P].
double pauli_expectation(const DensityMatrix& rho, const PauliString& p);

/// Dense 2^n x 2^n matrix of a signed string / a sparse operator.
Matrix pauli_dense(const PauliString& p);
Matrix operator_dense(const PauliOperator& h);

/// Pauli expansion H_l = 2^{-n} Tr[H P_l] of a dense Hermitian matrix whose
/// dimension is a power of two. The identity component is stripped; if its
/// magnitude exceeds 1e-10 a warning goes to stderr, since dropping it
/// shifts all energies by a constant.
PauliOperator hamiltonian_coefficients(const Matrix& h_dense);

/// <H> = sum_l H_l <P_l>.
double energy(const PureState& state, const PauliOperator& h);
double energy(const DensityMatrix& rho, const PauliOperator& h);

}  // namespace ergo
