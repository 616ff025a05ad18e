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

#include "ergo/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ergo {

namespace {

constexpr Cplx kPhaseI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// In-place unnormalized Walsh-Hadamard transform:
// out[z] = sum_c (-1)^{parity(z & c)} in[c].
void wht(std::vector<Cplx>& v) {
  std::size_t size = v.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t j = block; j < block + half; ++j) {
        Cplx a = v[j];
        Cplx b = v[j + half];
        v[j] = a + b;
        v[j + half] = a - b;
      }
    }
  }
}

void check_table_n(int n_qubits) {
  if (n_qubits > kMaxDenseQubits)
    throw std::invalid_argument(
        "exhaustive Pauli tables support at most " +
        std::to_string(kMaxDenseQubits) + " qubits, got " +
        std::to_string(n_qubits));
}

// Fills table[(x << n) | z] for one x-mask.
void table_block_pure(const Vector& amps, int n_qubits, uint64_t x,
                      std::vector<double>& table) {
  uint64_t dim = uint64_t{1} << n_qubits;
  std::vector<Cplx> w(dim);
  for (uint64_t c = 0; c < dim; ++c)
    w[c] = std::conj(amps(static_cast<Eigen::Index>(c ^ x))) *
           amps(static_cast<Eigen::Index>(c));
  wht(w);
  uint64_t base = x << n_qubits;
  for (uint64_t z = 0; z < dim; ++z)
    table[base | z] = (kPhaseI[std::popcount(x & z) & 3] * w[z]).real();
}

void table_block_mixed(const Matrix& rho, int n_qubits, uint64_t x,
                       std::vector<double>& table) {
  uint64_t dim = uint64_t{1} << n_qubits;
  std::vector<Cplx> w(dim);
  for (uint64_t c = 0; c < dim; ++c)
    w[c] = rho(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c ^ x));
  wht(w);
  uint64_t base = x << n_qubits;
  for (uint64_t z = 0; z < dim; ++z)
    table[base | z] = (kPhaseI[std::popcount(x & z) & 3] * w[z]).real();
}

}  // namespace

std::vector<double> pauli_coefficient_table_serial(const PureState& state) {
  check_table_n(state.n_qubits());
  int n_qubits = state.n_qubits();
  uint64_t dim = uint64_t{1} << n_qubits;
  std::vector<double> table(dim * dim);
  for (uint64_t x = 0; x < dim; ++x)
    table_block_pure(state.amplitudes(), n_qubits, x, table);
  return table;
}

std::vector<double> pauli_coefficient_table(const PureState& state) {
  check_table_n(state.n_qubits());
  int n_qubits = state.n_qubits();
  int64_t dim = int64_t{1} << n_qubits;
  std::vector<double> table(static_cast<std::size_t>(dim * dim));
#pragma omp parallel for schedule(dynamic)
  for (int64_t x = 0; x < dim; ++x)
    table_block_pure(state.amplitudes(), n_qubits, static_cast<uint64_t>(x), table);
  return table;
}

std::vector<double> pauli_coefficient_table_serial(const DensityMatrix& rho) {
  check_table_n(rho.n_qubits());
  int n_qubits = rho.n_qubits();
  uint64_t dim = uint64_t{1} << n_qubits;
  std::vector<double> table(dim * dim);
  for (uint64_t x = 0; x < dim; ++x)
    table_block_mixed(rho.matrix(), n_qubits, x, table);
  return table;
}

std::vector<double> pauli_coefficient_table(const DensityMatrix& rho) {
  check_table_n(rho.n_qubits());
  int n_qubits = rho.n_qubits();
  int64_t dim = int64_t{1} << n_qubits;
  std::vector<double> table(static_cast<std::size_t>(dim * dim));
#pragma omp parallel for schedule(dynamic)
  for (int64_t x = 0; x < dim; ++x)
    table_block_mixed(rho.matrix(), n_qubits, static_cast<uint64_t>(x), table);
  return table;
}

PauliSpectrum spectrum_from_table(int n_qubits, const std::vector<double>& table) {
  uint64_t total = uint64_t{1} << (2 * n_qubits);
  if (table.size() != total)
    throw std::invalid_argument("coefficient table has wrong size");
  PauliSpectrum spec;
  spec.n_qubits = n_qubits;
  spec.labels.resize(total - 1);
  std::iota(spec.labels.begin(), spec.labels.end(), uint64_t{1});
  std::sort(spec.labels.begin(), spec.labels.end(),
            [&table](uint64_t a, uint64_t b) {
              double ra = std::abs(table[a]);
              double rb = std::abs(table[b]);
              if (ra != rb) return ra > rb;
              return a < b;
            });
  spec.r.resize(total - 1);
  for (std::size_t k = 0; k < spec.labels.size(); ++k)
    spec.r[k] = std::abs(table[spec.labels[k]]);
  return spec;
}

PauliSpectrum pauli_spectrum(const PureState& state) {
  return spectrum_from_table(state.n_qubits(), pauli_coefficient_table(state));
}

PauliSpectrum pauli_spectrum(const DensityMatrix& rho) {
  return spectrum_from_table(rho.n_qubits(), pauli_coefficient_table(rho));
}

}  // namespace ergo
