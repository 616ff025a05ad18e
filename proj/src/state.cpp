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

#include "ergo/state.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ergo {

namespace {

constexpr Cplx kPhaseI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_state_n(int n_qubits, int max_n, const char* what) {
  if (n_qubits < 1 || n_qubits > max_n)
    throw std::invalid_argument(std::string(what) + " supports 1 to " +
                                std::to_string(max_n) + " qubits, got " +
                                std::to_string(n_qubits));
}

}  // namespace

PureState::PureState(int n_qubits, Vector amplitudes)
    : n_(n_qubits), amps_(std::move(amplitudes)) {
  check_state_n(n_qubits, kMaxAmplitudeQubits, "PureState");
  if (amps_.size() != (Eigen::Index{1} << n_qubits))
    throw std::invalid_argument("amplitude count must be 2^n");
  if (std::abs(amps_.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("state is not normalized");
}

PureState PureState::basis_state(int n_qubits, uint64_t index) {
  check_state_n(n_qubits, kMaxAmplitudeQubits, "PureState");
  Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (index >= static_cast<uint64_t>(dim))
    throw std::invalid_argument("basis index out of range");
  Vector amps = Vector::Zero(dim);
  amps(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(n_qubits, std::move(amps));
}

DensityMatrix::DensityMatrix(int n_qubits, Matrix rho)
    : n_(n_qubits), rho_(std::move(rho)) {
  check_state_n(n_qubits, kMaxDenseQubits, "DensityMatrix");
  Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (rho_.rows() != dim || rho_.cols() != dim)
    throw std::invalid_argument("density matrix must be 2^n x 2^n");
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho_.trace() - Cplx(1, 0)) > 1e-12)
    throw std::invalid_argument("density matrix trace is not 1");
}

DensityMatrix DensityMatrix::from_pure(const PureState& state) {
  check_state_n(state.n_qubits(), kMaxDenseQubits, "DensityMatrix");
  Matrix rho = state.amplitudes() * state.amplitudes().adjoint();
  return DensityMatrix(state.n_qubits(), std::move(rho));
}

PureState pauli_apply(const PauliString& p, const PureState& state) {
  if (p.n != state.n_qubits()) throw std::invalid_argument("qubit count mismatch");
  const Vector& in = state.amplitudes();
  Vector out(in.size());
  Cplx front = kPhaseI[p.y_count() & 3] * static_cast<double>(p.sign);
  for (Eigen::Index c = 0; c < in.size(); ++c) {
    double zsign = parity(p.z & static_cast<uint64_t>(c)) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(static_cast<uint64_t>(c) ^ p.x)) =
        front * zsign * in(c);
  }
  return PureState(state.n_qubits(), std::move(out));
}

double pauli_expectation(const PureState& state, const PauliString& p) {
  if (p.n != state.n_qubits()) throw std::invalid_argument("qubit count mismatch");
  const Vector& amps = state.amplitudes();
  Cplx sum = 0.0;
  for (Eigen::Index c = 0; c < amps.size(); ++c) {
    double zsign = parity(p.z & static_cast<uint64_t>(c)) ? -1.0 : 1.0;
    sum += std::conj(amps(static_cast<Eigen::Index>(static_cast<uint64_t>(c) ^ p.x))) *
           (zsign * amps(c));
  }
  sum *= kPhaseI[p.y_count() & 3] * static_cast<double>(p.sign);
  return sum.real();
}

double pauli_expectation(const DensityMatrix& rho, const PauliString& p) {
  if (p.n != rho.n_qubits()) throw std::invalid_argument("qubit count mismatch");
  const Matrix& m = rho.matrix();
  Cplx sum = 0.0;
  // Tr[rho P] = sum_c rho(c, c^x) * phase(c), with P|c> = phase(c)|c^x>.
  for (Eigen::Index c = 0; c < m.rows(); ++c) {
    double zsign = parity(p.z & static_cast<uint64_t>(c)) ? -1.0 : 1.0;
    sum += m(c, static_cast<Eigen::Index>(static_cast<uint64_t>(c) ^ p.x)) * zsign;
  }
  sum *= kPhaseI[p.y_count() & 3] * static_cast<double>(p.sign);
  return sum.real();
}

Matrix pauli_dense(const PauliString& p) {
  check_state_n(p.n, kMaxDenseQubits, "pauli_dense");
  Eigen::Index dim = Eigen::Index{1} << p.n;
  Matrix out = Matrix::Zero(dim, dim);
  Cplx front = kPhaseI[p.y_count() & 3] * static_cast<double>(p.sign);
  for (Eigen::Index c = 0; c < dim; ++c) {
    double zsign = parity(p.z & static_cast<uint64_t>(c)) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(static_cast<uint64_t>(c) ^ p.x), c) = front * zsign;
  }
  return out;
}

Matrix operator_dense(const PauliOperator& h) {
  check_state_n(h.n_qubits(), kMaxDenseQubits, "operator_dense");
  Eigen::Index dim = Eigen::Index{1} << h.n_qubits();
  Matrix out = Matrix::Zero(dim, dim);
  for (std::size_t k = 0; k < h.num_terms(); ++k) {
    PauliString p = h.string_at(k);
    Cplx front = kPhaseI[p.y_count() & 3] * h.terms()[k].second;
    for (Eigen::Index c = 0; c < dim; ++c) {
      double zsign = parity(p.z & static_cast<uint64_t>(c)) ? -1.0 : 1.0;
      out(static_cast<Eigen::Index>(static_cast<uint64_t>(c) ^ p.x), c) +=
          front * zsign;
    }
  }
  return out;
}

PauliOperator hamiltonian_coefficients(const Matrix& h_dense) {
  Eigen::Index dim = h_dense.rows();
  if (dim < 2 || h_dense.cols() != dim || (dim & (dim - 1)) != 0)
    throw std::invalid_argument("matrix dimension must be a power of two >= 2");
  int n_qubits = 0;
  while ((Eigen::Index{1} << n_qubits) < dim) ++n_qubits;
  check_state_n(n_qubits, kMaxDenseQubits, "hamiltonian_coefficients");
  double scale = h_dense.cwiseAbs().maxCoeff();
  if ((h_dense - h_dense.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + scale))
    throw std::invalid_argument("matrix is not Hermitian");

  double identity_part = h_dense.trace().real() / static_cast<double>(dim);
  if (std::abs(identity_part) > 1e-10)
    std::fprintf(stderr,
                 "warning: stripping identity component %.6g from Hamiltonian; "
                 "energies shift by a constant\n",
                 identity_part);

  PauliOperator op(n_qubits);
  double drop = 1e-13 * (1.0 + scale);
  uint64_t labels = uint64_t{1} << (2 * n_qubits);
  for (uint64_t label = 1; label < labels; ++label) {
    PauliString p = PauliString::from_label(n_qubits, label);
    Cplx tr = 0.0;
    for (Eigen::Index c = 0; c < dim; ++c) {
      double zsign = parity(p.z & static_cast<uint64_t>(c)) ? -1.0 : 1.0;
      tr += h_dense(c, static_cast<Eigen::Index>(static_cast<uint64_t>(c) ^ p.x)) *
            zsign;
    }
    tr *= kPhaseI[p.y_count() & 3];
    double coeff = tr.real() / static_cast<double>(dim);
    if (std::abs(coeff) > drop) op.add(p, coeff);
  }
  return op;
}

double energy(const PureState& state, const PauliOperator& h) {
  if (h.n_qubits() != state.n_qubits())
    throw std::invalid_argument("qubit count mismatch");
  double sum = 0.0;
  for (std::size_t k = 0; k < h.num_terms(); ++k)
    sum += h.terms()[k].second * pauli_expectation(state, h.string_at(k));
  return sum;
}

double energy(const DensityMatrix& rho, const PauliOperator& h) {
  if (h.n_qubits() != rho.n_qubits())
    throw std::invalid_argument("qubit count mismatch");
  double sum = 0.0;
  for (std::size_t k = 0; k < h.num_terms(); ++k)
    sum += h.terms()[k].second * pauli_expectation(rho, h.string_at(k));
  return sum;
}

}  // namespace ergo
