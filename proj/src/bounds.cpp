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

#include "ergo/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ergo {

namespace {

void check_pair(const PauliSpectrum& spec, const PauliOperator& h) {
  if (spec.n_qubits != h.n_qubits())
    throw std::invalid_argument("qubit count mismatch");
}

// Pure states satisfy sum_{mu >= 1} r_mu^2 = d - 1 with d = 2^n (the full
// table sums to d). Reject anything else: the entropies below are defined
// for pure states only.
void check_pure(const PauliSpectrum& spec) {
  double d_minus_1 = std::pow(2.0, spec.n_qubits) - 1.0;
  double sum = 0.0;
  for (double r : spec.r) sum += r * r;
  if (std::abs(sum / d_minus_1 - 1.0) > 1e-9)
    throw std::invalid_argument(
        "Pauli spectrum is not that of a normalized pure state");
}

}  // namespace

double rearrangement_bound(const PauliSpectrum& spec, const PauliOperator& h,
                           double initial_energy) {
  check_pair(spec, h);
  std::vector<double> habs = h.sorted_abs_coefficients();
  double dot = 0.0;
  std::size_t count = std::min(habs.size(), spec.r.size());
  for (std::size_t k = 0; k < count; ++k) dot += spec.r[k] * habs[k];
  return initial_energy + dot;
}

double holder_bound(const PauliSpectrum& spec, const PauliOperator& h,
                    double initial_energy) {
  check_pair(spec, h);
  return initial_energy + spec.r1() * h.l1_norm();
}

double filtered_sre(const PauliSpectrum& spec, double alpha) {
  if (!(alpha > 0.0) || std::abs(alpha - 1.0) < 1e-12)
    throw std::invalid_argument("order must be positive and different from 1");
  check_pure(spec);
  double d_minus_1 = std::pow(2.0, spec.n_qubits) - 1.0;
  double sum = 0.0;
  for (double r : spec.r) sum += std::pow(r * r, alpha);
  return std::log(sum / d_minus_1) / (1.0 - alpha);
}

double m_infinity(const PauliSpectrum& spec) {
  check_pure(spec);
  double r1 = spec.r1();
  if (r1 <= 0.0)
    throw std::logic_error("pure state with vanishing Pauli spectrum");
  return -2.0 * std::log(r1);
}

double sre_bound(const PauliSpectrum& spec, const PauliOperator& h,
                 double initial_energy) {
  check_pair(spec, h);
  return initial_energy + std::exp(-0.5 * m_infinity(spec)) * h.l1_norm();
}

double stabilizer_fidelity_1q(double bx, double by, double bz) {
  double norm = std::sqrt(bx * bx + by * by + bz * bz);
  if (norm > 1.0 + 1e-10)
    throw std::invalid_argument("Bloch vector lies outside the unit ball");
  double axis = std::max({std::abs(bx), std::abs(by), std::abs(bz)});
  return 0.5 * (1.0 + axis);
}

double min_relative_entropy_1q(double bx, double by, double bz) {
  return -std::log(stabilizer_fidelity_1q(bx, by, bz));
}

BoundReport bound_report(const PureState& state, const PauliOperator& h,
                         const HeuristicBudget& budget, uint64_t seed,
                         int exact_n_limit) {
  if (state.n_qubits() != h.n_qubits())
    throw std::invalid_argument("qubit count mismatch");
  int n_qubits = state.n_qubits();
  std::vector<double> table = pauli_coefficient_table(state);
  PauliSpectrum spec = spectrum_from_table(n_qubits, table);

  BoundReport rep;
  rep.n_qubits = n_qubits;
  double e0 = 0.0;
  for (const auto& [label, coeff] : h.terms()) e0 += coeff * table[label];
  rep.initial_energy = e0;
  rep.l1_norm = h.l1_norm();
  rep.r1 = spec.r1();
  rep.m_infinity = m_infinity(spec);
  rep.bound_rearrangement = rearrangement_bound(spec, h, e0);
  rep.bound_holder = holder_bound(spec, h, e0);
  rep.bound_sre = sre_bound(spec, h, e0);

  if (n_qubits <= std::min(exact_n_limit, kMaxEnumQubits)) {
    OrbitMinResult min = clifford_min_energy_exact(n_qubits, table, h);
    rep.clifford_ergotropy = e0 - min.energy;
    rep.clifford_exact = true;
  } else {
    OrbitMinResult min =
        clifford_min_energy_heuristic(n_qubits, table, h, budget, seed);
    rep.clifford_ergotropy = e0 - min.energy;
    rep.clifford_exact = false;
  }
  if (n_qubits <= kMaxDenseQubits) {
    double ground = ground_state_energy(h);
    rep.ergotropy = e0 - ground;
    rep.gap_lower_rearrangement = -ground - (rep.bound_rearrangement - e0);
    rep.gap_lower_holder = -ground - (rep.bound_holder - e0);
  }
  return rep;
}

}  // namespace ergo
