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

// Timings of the OpenMP kernels against their serial reference
// implementations.  Every pair also reports a checksum from both runs so a
// speedup never hides a result mismatch.

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <vector>

#include "ergo/ergotropy.hpp"
#include "ergo/experiments.hpp"
#include "ergo/models.hpp"
#include "ergo/rng.hpp"
#include "ergo/spectrum.hpp"

namespace {

using namespace ergo;

PureState random_state(int n_qubits, Rng& rng) {
  Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Vector amps(dim);
  double norm_sq = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    amps(i) = Cplx(rng.gaussian(), rng.gaussian());
    norm_sq += std::norm(amps(i));
  }
  amps /= std::sqrt(norm_sq);
  return PureState(n_qubits, amps);
}

void report(const char* name, double t_serial, double t_parallel,
            double sum_serial, double sum_parallel) {
  std::printf("%-28s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   "
              "checksums %.12g / %.12g %s\n",
              name, 1e3 * t_serial, 1e3 * t_parallel, t_serial / t_parallel,
              sum_serial, sum_parallel,
              sum_serial == sum_parallel ? "(equal)" : "(MISMATCH)");
}

void bench_tables() {
  Rng rng(101);
  PureState psi = random_state(9, rng);
  double t0 = omp_get_wtime();
  std::vector<double> ser = pauli_coefficient_table_serial(psi);
  double t1 = omp_get_wtime();
  std::vector<double> par = pauli_coefficient_table(psi);
  double t2 = omp_get_wtime();
  double sum_s = 0.0;
  double sum_p = 0.0;
  for (double v : ser) sum_s += v * v;
  for (double v : par) sum_p += v * v;
  report("coefficient table n=9", t1 - t0, t2 - t1, sum_s, sum_p);
}

void bench_exact_scan() {
  Rng rng(202);
  const int batch = 20;
  std::vector<PureState> states;
  for (int i = 0; i < batch; ++i) states.push_back(random_state(2, rng));
  PauliOperator h = hamiltonian_2q(0.7, 0.3);
  double sum_s = 0.0;
  double t0 = omp_get_wtime();
  for (const PureState& psi : states)
    sum_s += clifford_min_energy_exact_serial(2, pauli_coefficient_table(psi), h)
                 .energy;
  double t1 = omp_get_wtime();
  double sum_p = 0.0;
  for (const PureState& psi : states)
    sum_p += clifford_min_energy_exact(2, pauli_coefficient_table(psi), h)
                 .energy;
  double t2 = omp_get_wtime();
  report("exact 2q orbit scan x20", t1 - t0, t2 - t1, sum_s, sum_p);
}

void bench_typicality() {
  PauliOperator h = hamiltonian_tfim(8, 1.0);
  double t0 = omp_get_wtime();
  TypicalityResult ser = run_typicality_serial(8, 100, 33, 2.0, h);
  double t1 = omp_get_wtime();
  TypicalityResult par = run_typicality(8, 100, 33, 2.0, h);
  double t2 = omp_get_wtime();
  double sum_s = 0.0;
  double sum_p = 0.0;
  for (const TypicalityRow& row : ser.rows) sum_s += row.m_infinity;
  for (const TypicalityRow& row : par.rows) sum_p += row.m_infinity;
  report("typicality n=8 x100", t1 - t0, t2 - t1, sum_s, sum_p);
}

void bench_heuristic() {
  Rng rng(303);
  PureState psi = random_state(4, rng);
  PauliOperator h = hamiltonian_tfim(4, 0.8);
  std::vector<double> table = pauli_coefficient_table(psi);
  HeuristicBudget budget{16, 60};
  double t0 = omp_get_wtime();
  double e_serial =
      clifford_min_energy_heuristic_serial(4, table, h, budget, 44).energy;
  double t1 = omp_get_wtime();
  double e_parallel =
      clifford_min_energy_heuristic(4, table, h, budget, 44).energy;
  double t2 = omp_get_wtime();
  report("heuristic n=4 16x60", t1 - t0, t2 - t1, e_serial, e_parallel);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  bench_tables();
  bench_exact_scan();
  bench_typicality();
  bench_heuristic();
  return 0;
}
