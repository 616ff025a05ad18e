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

#include <vector>

#include "ergo/pauli.hpp"
#include "ergo/state.hpp"

namespace ergo {

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

/// Single-qubit magic state (|0> + e^{i pi/4}|1>) / sqrt(2); Bloch vector
/// (1/sqrt2, 1/sqrt2, 0).
PureState t_state();

/// Two copies of it.
PureState tt_state();

/// n copies.
PureState t_product_state(int n_qubits);

/// Single-qubit density matrix (1 + b . sigma) / 2; |b| <= 1.
DensityMatrix density_from_bloch(double bx, double by, double bz);

// ---------------------------------------------------------------------------
// Hamiltonians
// ---------------------------------------------------------------------------

/// Two-qubit mixed-field Ising Hamiltonian
///   H = -Z1 Z2 + g (X1 + X2) + h (Z1 + Z2).
PauliOperator hamiltonian_2q(double g, double h);

/// Periodic classical Ising chain -sum Z_j Z_{j+1} + h sum Z_j, n >= 2.
/// (At n = 2 the two bonds coincide and merge into one term.)
PauliOperator hamiltonian_classical_ising(int n_qubits, double h);

/// Periodic transverse-field Ising chain -sum Z_j Z_{j+1} + g sum X_j.
PauliOperator hamiltonian_tfim(int n_qubits, double g);

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// Clifford ergotropy of a single qubit with Bloch vector b under H = h Z,
/// h > 0: h (bz + max_axis |b|). Valid for mixed states too.
double clifford_ergotropy_1q(double bx, double by, double bz, double h);

/// Ergotropy of the same system: h (bz + |b|).
double ergotropy_1q(double bx, double by, double bz, double h);

/// Clifford ergotropy of the doubled magic state under hamiltonian_2q:
///   sqrt(2) g + B(g, h), with B = 1/sqrt2 + (1/sqrt2 + 1/2) s for s <= 1
///   and B = 1/2 + sqrt2 s for s >= 1, where s = |g| + |h|.
/// The two branches cross at s = 1; the minimizing orbit changes there.
double clifford_ergotropy_2q_analytic(double g, double h);

/// Complete elliptic integral of the second kind,
///   E(x) = int_0^{pi/2} sqrt(1 - x^2 sin^2 t) dt,  0 <= x <= 1,
/// by the arithmetic-geometric mean iteration.
double elliptic_e(double x);

/// Ground energy per site of the periodic transverse-field Ising chain in
/// the large-n limit: -(1+|g|) (2/pi) E(2 sqrt|g| / (1+|g|)), times n.
double tfim_ground_energy_asymptotic(int n_qubits, double g);

/// Lower bound on the ergotropy gap of a product state: the pure-state gap
/// is at least -E_G - (r . h), with r built from the per-site absolute
/// coefficient lists (each sorted nonincreasing, identity excluded) and h
/// the sorted absolute coefficients of H. Only the num_terms(H) largest
/// products enter, found by a best-first walk over index tuples.
double product_state_gap_bound(
    const std::vector<std::vector<double>>& site_spectra,
    const PauliOperator& h, double ground_energy);

/// The couplings |g| where the transverse-field chain's asymptotic bound
/// changes sign, i.e. (2/pi) E(2 sqrt g/(1+g)) = 1/sqrt2: one root in
/// (0.1, 1), one in (1, 3), found by bisection to 1e-6.
std::pair<double, double> tfim_bound_crossings();

}  // namespace ergo
