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

#include <cstdint>
#include <vector>

#include "ergo/state.hpp"

namespace ergo {

/// Absolute Pauli coefficients |Tr[rho P]| of a state over all 4^n - 1
/// non-identity strings, sorted nonincreasing. Ties are broken by ascending
/// label so the ordering is reproducible.
struct PauliSpectrum {
  int n_qubits = 0;
  std::vector<double> r;          ///< sorted |coefficients|, length 4^n - 1
  std::vector<uint64_t> labels;   ///< labels in the same order

  double r1() const { return r.empty() ? 0.0 : r.front(); }
};

/// Full signed coefficient table rho_l = Tr[rho P_l], indexed by label
/// (x << n) | z. Entry 0 is the identity coefficient (1 for normalized
/// states). Cost O(4^n n) via a Walsh-Hadamard transform per x-mask; the
/// _serial variants are single-threaded references for testing, the plain
/// ones parallelize over x-masks with OpenMP.
std::vector<double> pauli_coefficient_table(const PureState& state);
std::vector<double> pauli_coefficient_table_serial(const PureState& state);
std::vector<double> pauli_coefficient_table(const DensityMatrix& rho);
std::vector<double> pauli_coefficient_table_serial(const DensityMatrix& rho);

PauliSpectrum spectrum_from_table(int n_qubits, const std::vector<double>& table);
PauliSpectrum pauli_spectrum(const PureState& state);
PauliSpectrum pauli_spectrum(const DensityMatrix& rho);

}  // namespace ergo
