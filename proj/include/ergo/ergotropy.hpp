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

#include <functional>
#include <optional>
#include <vector>

#include "ergo/clifford_group.hpp"
#include "ergo/spectrum.hpp"
#include "ergo/state.hpp"
#include "ergo/tableau.hpp"

namespace ergo {

/// Extractable work under arbitrary unitaries.
struct ErgotropyResult {
  double initial_energy = 0.0;
  double passive_energy = 0.0;
  double ergotropy = 0.0;  ///< initial_energy - passive_energy
  /// (population, level) pairs of the passive state: populations sorted
  /// nonincreasing against levels sorted nondecreasing.
  std::vector<std::pair<double, double>> passive_pairs;
};

/// Ground-state energy of a sparse observable via dense diagonalization.
double ground_state_energy(const PauliOperator& h);

/// Max work extractable from rho by any unitary: pair the sorted
/// eigenvalues of rho (descending) with those of H (ascending).
ErgotropyResult standard_ergotropy(const DensityMatrix& rho, const PauliOperator& h);

/// Pure-state shortcut: ergotropy = <H> - ground energy.
double ergotropy_pure(const PureState& state, const PauliOperator& h);

/// Orbit energy in the Heisenberg picture: sum_l H_l eta_l table[label of
/// t(P_l)], where t(P) carries sign eta. Equals Tr[H C rho C^dagger] for a
/// unitary C realizing t.inverse(); minimizing over t still ranges over the
/// whole orbit since the group is closed under inversion.
double orbit_energy(const CliffordTableau& t, const std::vector<double>& table,
                    const PauliOperator& h);

struct OrbitMinResult {
  double energy = 0.0;
  /// Enumeration index of the minimizing frame for exhaustive scans; the
  /// restart that found it for the heuristic.
  uint64_t index = 0;
  CliffordTableau tableau;
};

struct CliffordErgotropyResult {
  double initial_energy = 0.0;
  double orbit_min_energy = 0.0;
  double clifford_ergotropy = 0.0;  ///< initial_energy - orbit_min_energy
  OrbitMinResult minimizer;
  bool exact = false;               ///< exhaustive scan vs heuristic
  std::optional<double> gap;        ///< ergotropy - clifford_ergotropy, when
                                    ///< the dense path is available
};

/// Called with the completed fraction of an exhaustive scan, at most a few
/// hundred times total.
using ProgressFn = std::function<void(double)>;

/// Exhaustive minimum of the orbit energy over all Clifford frame actions.
/// Ties resolve to the smallest enumeration index, so the result does not
/// depend on thread count. n <= kMaxEnumQubits.
OrbitMinResult clifford_min_energy_exact(int n_qubits,
                                         const std::vector<double>& table,
                                         const PauliOperator& h,
                                         const ProgressFn& progress = nullptr);
OrbitMinResult clifford_min_energy_exact_serial(int n_qubits,
                                                const std::vector<double>& table,
                                                const PauliOperator& h,
                                                const ProgressFn& progress = nullptr);

CliffordErgotropyResult clifford_ergotropy_exact(const PureState& state,
                                                 const PauliOperator& h);
CliffordErgotropyResult clifford_ergotropy_exact(const DensityMatrix& rho,
                                                 const PauliOperator& h);

struct HeuristicBudget {
  int restarts = 50;
  int steps = 200;
};

/// Steepest-descent search over the orbit: moves are all 24 single-qubit
/// frames per site plus a CNOT per ordered pair. Restart 0 starts from the
/// identity frame, the rest from random frames seeded by (seed, restart),
/// so enlarging the budget never worsens the result. Deterministic for a
/// fixed seed regardless of thread count.
OrbitMinResult clifford_min_energy_heuristic(int n_qubits,
                                             const std::vector<double>& table,
                                             const PauliOperator& h,
                                             const HeuristicBudget& budget,
                                             uint64_t seed);
OrbitMinResult clifford_min_energy_heuristic_serial(int n_qubits,
                                                    const std::vector<double>& table,
                                                    const PauliOperator& h,
                                                    const HeuristicBudget& budget,
                                                    uint64_t seed);

/// ergotropy - Clifford ergotropy >= 0. For pure states this equals the
/// orbit minimum minus the ground energy.
double ergotropy_gap(const PureState& state, const PauliOperator& h);
double ergotropy_gap(const DensityMatrix& rho, const PauliOperator& h);

}  // namespace ergo
