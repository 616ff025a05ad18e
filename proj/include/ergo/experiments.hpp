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

#include <iosfwd>
#include <vector>

#include "ergo/bounds.hpp"
#include "ergo/ergotropy.hpp"
#include "ergo/models.hpp"

namespace ergo {

/// One grid point of the two-qubit transverse+longitudinal field sweep with
/// the doubled magic state as the initial state.
struct SweepRow {
  double g = 0.0;
  double initial_energy = 0.0;
  double ergotropy = 0.0;
  double clifford_ergotropy_exact = 0.0;
  double clifford_ergotropy_analytic = 0.0;
  double bound_rearrangement = 0.0;
  double bound_holder = 0.0;
  double gap = 0.0;  ///< ergotropy - clifford_ergotropy_exact
};

/// steps grid points on [g_min, g_max], endpoints included; steps >= 2.
std::vector<SweepRow> sweep_2q(double h, double g_min, double g_max, int steps);

/// One Haar sample of the typicality experiment.
struct TypicalityRow {
  uint64_t sample_index = 0;
  double r1 = 0.0;
  double m_infinity = 0.0;   ///< -2 ln r1
  double initial_energy = 0.0;
  bool violation = false;    ///< r1 >= sqrt(16 a ln d / d)
};

struct TypicalityResult {
  int n_qubits = 0;
  double a = 0.0;
  double threshold = 0.0;   ///< sqrt(16 a ln d / d)
  double tail_bound = 0.0;  ///< e^pi / d^{2(a-1)}, the analytic tail weight
  std::vector<TypicalityRow> rows;
  uint64_t violations = 0;
  double median_m_infinity = 0.0;  ///< lower middle averaged with upper for even counts
};

/// Haar-random pure state: normalized vector of iid complex Gaussians.
PureState haar_state(int n_qubits, Rng& rng);

/// samples Haar states on n qubits; per-sample substreams of seed make the
/// output independent of how the batch is parallelized. Row initial_energy
/// is <h> in the sampled state. Pass a > 1.
TypicalityResult run_typicality(int n_qubits, uint64_t samples, uint64_t seed,
                                double a, const PauliOperator& h);
TypicalityResult run_typicality_serial(int n_qubits, uint64_t samples,
                                       uint64_t seed, double a,
                                       const PauliOperator& h);

/// CSV writers: fixed header, fixed column order, %.15g numbers. The
/// typicality file ends with a "# summary: ..." comment line.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_typicality_csv(std::ostream& out, const TypicalityResult& result);

}  // namespace ergo
