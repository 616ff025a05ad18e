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

#include <optional>

#include "ergo/ergotropy.hpp"
#include "ergo/spectrum.hpp"

namespace ergo {

/// Upper bound on the Clifford ergotropy from the rearrangement inequality:
/// initial energy plus the dot product of the sorted absolute Pauli
/// coefficients of the state and of H (H's list zero-padded). Tight enough
/// to show kinks where the dominant coefficient changes.
double rearrangement_bound(const PauliSpectrum& spec, const PauliOperator& h,
                           double initial_energy);

/// Weaker Hoelder-style bound: initial energy + r1 * ||H||_1.
double holder_bound(const PauliSpectrum& spec, const PauliOperator& h,
                    double initial_energy);

/// Filtered stabilizer Renyi entropy of order alpha (alpha > 0, alpha != 1):
///   M_alpha = 1/(1-alpha) ln sum_{mu >= 1} r_mu^{2 alpha} / (d - 1),
/// with d = 2^n. Defined for pure states only; throws if the spectrum is
/// inconsistent with a normalized pure state (sum r^2 != d - 1).
double filtered_sre(const PauliSpectrum& spec, double alpha);

/// alpha -> infinity limit, -ln r1^2. Same purity requirement.
double m_infinity(const PauliSpectrum& spec);

/// Upper bound on Clifford ergotropy through the max-order entropy:
/// initial energy + exp(-M_infinity / 2) * ||H||_1. Coincides with the
/// Hoelder bound for pure states.
double sre_bound(const PauliSpectrum& spec, const PauliOperator& h,
                 double initial_energy);

/// Best overlap of a single-qubit state (Bloch vector b) with a stabilizer
/// state: (1 + max_axis |b|) / 2.
double stabilizer_fidelity_1q(double bx, double by, double bz);

/// -ln of the best stabilizer overlap; 0 exactly on the octahedron axes.
double min_relative_entropy_1q(double bx, double by, double bz);

/// Everything the bounds CLI prints for one state/Hamiltonian pair.
struct BoundReport {
  int n_qubits = 0;
  double initial_energy = 0.0;
  double l1_norm = 0.0;
  double r1 = 0.0;
  double m_infinity = 0.0;
  double bound_rearrangement = 0.0;
  double bound_holder = 0.0;
  double bound_sre = 0.0;
  std::optional<double> clifford_ergotropy;  ///< exact when n is small
  bool clifford_exact = false;
  std::optional<double> ergotropy;           ///< dense path, n <= kMaxDenseQubits
  std::optional<double> gap_lower_rearrangement;  ///< pure states: -E_G - r.h
  std::optional<double> gap_lower_holder;         ///< pure states: -E_G - r1 ||H||_1
};

/// Assembles the report for a pure state. When exhaustive minimization is
/// feasible (n <= min(exact_n_limit, kMaxEnumQubits)) the Clifford ergotropy
/// is exact; otherwise the heuristic with the given budget fills it in.
BoundReport bound_report(const PureState& state, const PauliOperator& h,
                         const HeuristicBudget& budget, uint64_t seed,
                         int exact_n_limit = kMaxEnumQubits);

}  // namespace ergo
