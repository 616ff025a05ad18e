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

#include "ergo/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ergo {

namespace {

std::string fmt15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

}  // namespace

std::vector<SweepRow> sweep_2q(double h, double g_min, double g_max, int steps) {
  if (steps < 2) throw std::invalid_argument("sweep needs at least 2 grid points");
  if (!(g_min < g_max)) throw std::invalid_argument("empty sweep range");
  PureState state = tt_state();
  std::vector<double> table = pauli_coefficient_table(state);
  PauliSpectrum spec = spectrum_from_table(2, table);

  std::vector<SweepRow> rows(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    double g = g_min + (g_max - g_min) * k / (steps - 1);
    PauliOperator ham = hamiltonian_2q(g, h);
    SweepRow row;
    row.g = g;
    double e0 = 0.0;
    for (const auto& [label, coeff] : ham.terms()) e0 += coeff * table[label];
    row.initial_energy = e0;
    row.ergotropy = e0 - ground_state_energy(ham);
    OrbitMinResult min = clifford_min_energy_exact(2, table, ham);
    row.clifford_ergotropy_exact = e0 - min.energy;
    row.clifford_ergotropy_analytic = clifford_ergotropy_2q_analytic(g, h);
    row.bound_rearrangement = rearrangement_bound(spec, ham, e0);
    row.bound_holder = holder_bound(spec, ham, e0);
    row.gap = row.ergotropy - row.clifford_ergotropy_exact;
    rows[static_cast<std::size_t>(k)] = row;
  }
  return rows;
}

PureState haar_state(int n_qubits, Rng& rng) {
  Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Vector amps(dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    double re = rng.gaussian();
    double im = rng.gaussian();
    amps(c) = Cplx(re, im);
  }
  amps /= amps.norm();
  return PureState(n_qubits, std::move(amps));
}

namespace {

TypicalityRow typicality_sample(int n_qubits, uint64_t sample, uint64_t seed,
                                double threshold, const PauliOperator& h) {
  Rng rng = Rng::substream(seed, sample);
  PureState state = haar_state(n_qubits, rng);
  std::vector<double> table = pauli_coefficient_table_serial(state);
  TypicalityRow row;
  row.sample_index = sample;
  double r1 = 0.0;
  for (std::size_t l = 1; l < table.size(); ++l)
    r1 = std::max(r1, std::abs(table[l]));
  row.r1 = r1;
  row.m_infinity = -2.0 * std::log(r1);
  double e0 = 0.0;
  for (const auto& [label, coeff] : h.terms()) e0 += coeff * table[label];
  row.initial_energy = e0;
  row.violation = r1 >= threshold;
  return row;
}

TypicalityResult finish_typicality(int n_qubits, double a,
                                   std::vector<TypicalityRow> rows) {
  TypicalityResult out;
  out.n_qubits = n_qubits;
  out.a = a;
  double d = std::pow(2.0, n_qubits);
  out.threshold = std::sqrt(16.0 * a * std::log(d) / d);
  out.tail_bound = std::exp(3.14159265358979323846) / std::pow(d, 2.0 * (a - 1.0));
  out.rows = std::move(rows);
  for (const TypicalityRow& row : out.rows)
    if (row.violation) ++out.violations;
  std::vector<double> ms;
  ms.reserve(out.rows.size());
  for (const TypicalityRow& row : out.rows) ms.push_back(row.m_infinity);
  std::sort(ms.begin(), ms.end());
  std::size_t count = ms.size();
  out.median_m_infinity = (count % 2 == 1)
                              ? ms[count / 2]
                              : 0.5 * (ms[count / 2 - 1] + ms[count / 2]);
  return out;
}

void check_typicality_args(int n_qubits, uint64_t samples, double a,
                           const PauliOperator& h) {
  if (n_qubits < 2 || n_qubits > kMaxDenseQubits)
    throw std::invalid_argument("typicality supports 2 to " +
                                std::to_string(kMaxDenseQubits) + " qubits");
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  if (!(a > 1.0)) throw std::invalid_argument("tail parameter a must exceed 1");
  if (h.n_qubits() != n_qubits)
    throw std::invalid_argument("qubit count mismatch");
}

}  // namespace

TypicalityResult run_typicality_serial(int n_qubits, uint64_t samples,
                                       uint64_t seed, double a,
                                       const PauliOperator& h) {
  check_typicality_args(n_qubits, samples, a, h);
  double d = std::pow(2.0, n_qubits);
  double threshold = std::sqrt(16.0 * a * std::log(d) / d);
  std::vector<TypicalityRow> rows(samples);
  for (uint64_t s = 0; s < samples; ++s)
    rows[s] = typicality_sample(n_qubits, s, seed, threshold, h);
  return finish_typicality(n_qubits, a, std::move(rows));
}

TypicalityResult run_typicality(int n_qubits, uint64_t samples, uint64_t seed,
                                double a, const PauliOperator& h) {
  check_typicality_args(n_qubits, samples, a, h);
  double d = std::pow(2.0, n_qubits);
  double threshold = std::sqrt(16.0 * a * std::log(d) / d);
  std::vector<TypicalityRow> rows(samples);
#pragma omp parallel for schedule(dynamic)
  for (int64_t s = 0; s < static_cast<int64_t>(samples); ++s)
    rows[static_cast<std::size_t>(s)] = typicality_sample(
        n_qubits, static_cast<uint64_t>(s), seed, threshold, h);
  return finish_typicality(n_qubits, a, std::move(rows));
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "g,initial_energy,ergotropy,clifford_ergotropy_exact,"
         "clifford_ergotropy_analytic,bound_rearrangement,bound_holder,gap\n";
  for (const SweepRow& r : rows) {
    out << fmt15(r.g) << ',' << fmt15(r.initial_energy) << ','
        << fmt15(r.ergotropy) << ',' << fmt15(r.clifford_ergotropy_exact) << ','
        << fmt15(r.clifford_ergotropy_analytic) << ','
        << fmt15(r.bound_rearrangement) << ',' << fmt15(r.bound_holder) << ','
        << fmt15(r.gap) << '\n';
  }
}

void write_typicality_csv(std::ostream& out, const TypicalityResult& result) {
  out << "sample_index,r1,m_infinity,initial_energy,violation\n";
  for (const TypicalityRow& r : result.rows) {
    out << r.sample_index << ',' << fmt15(r.r1) << ',' << fmt15(r.m_infinity)
        << ',' << fmt15(r.initial_energy) << ',' << (r.violation ? 1 : 0)
        << '\n';
  }
  double fraction = result.rows.empty()
                        ? 0.0
                        : static_cast<double>(result.violations) /
                              static_cast<double>(result.rows.size());
  out << "# summary: n=" << result.n_qubits << " samples=" << result.rows.size()
      << " violation_fraction=" << fmt15(fraction)
      << " median_m_infinity=" << fmt15(result.median_m_infinity)
      << " threshold=" << fmt15(result.threshold)
      << " tail_bound=" << fmt15(result.tail_bound) << '\n';
}

}  // namespace ergo
