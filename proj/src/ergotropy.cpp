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

#include "ergo/ergotropy.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace ergo {

namespace {

void check_table(int n_qubits, const std::vector<double>& table,
                 const PauliOperator& h) {
  if (h.n_qubits() != n_qubits)
    throw std::invalid_argument("qubit count mismatch");
  if (table.size() != (std::size_t{1} << (2 * n_qubits)))
    throw std::invalid_argument("coefficient table has wrong size");
}

void check_exhaustive_n(int n_qubits) {
  if (n_qubits > kMaxEnumQubits)
    throw std::invalid_argument(
        "exhaustive orbit minimization supports at most " +
        std::to_string(kMaxEnumQubits) +
        " qubits; use clifford_min_energy_heuristic");
}

// Sign-flip mask of a string: bit 2q when X_q enters its generator
// expansion, bit 2q+1 for Z_q. Flipping generator signs of a frame flips a
// conjugated term's sign once per overlapping bit.
uint64_t generator_mask(const PauliString& p) {
  uint64_t mask = 0;
  for (int q = 0; q < p.n; ++q) {
    uint64_t bit = qubit_bit(p.n, q);
    if (p.x & bit) mask |= uint64_t{1} << (2 * q);
    if (p.z & bit) mask |= uint64_t{1} << (2 * q + 1);
  }
  return mask;
}

struct BestSlot {
  double energy = std::numeric_limits<double>::infinity();
  uint64_t index = ~uint64_t{0};

  void offer(double e, uint64_t idx) {
    if (e < energy || (e == energy && idx < index)) {
      energy = e;
      index = idx;
    }
  }
  void merge(const BestSlot& other) { offer(other.energy, other.index); }
};

// Best (energy, index) over all sign patterns of one sign-free frame.
// base[l] = H_l * eta_l * table[label] for the unflipped frame.
void scan_signs(const std::vector<double>& base, const std::vector<uint64_t>& mask,
                uint32_t sign_space, uint64_t index_base, BestSlot& best) {
  for (uint32_t bits = 0; bits < sign_space; ++bits) {
    double e = 0.0;
    for (std::size_t l = 0; l < base.size(); ++l)
      e += (std::popcount(mask[l] & bits) & 1) ? -base[l] : base[l];
    best.offer(e, index_base + bits);
  }
}

void frame_base_values(const CliffordTableau& t, const std::vector<double>& table,
                       const PauliOperator& h, std::vector<double>& base) {
  for (std::size_t l = 0; l < h.num_terms(); ++l) {
    PauliString img = t.conjugate(h.string_at(l));
    base[l] = h.terms()[l].second * img.sign * table[img.label()];
  }
}

OrbitMinResult finish_scan(int n_qubits, const BestSlot& best) {
  OrbitMinResult out;
  out.energy = best.energy;
  out.index = best.index;
  out.tableau = clifford_from_index(n_qubits, best.index);
  return out;
}

}  // namespace

double ground_state_energy(const PauliOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(operator_dense(h),
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

ErgotropyResult standard_ergotropy(const DensityMatrix& rho, const PauliOperator& h) {
  if (h.n_qubits() != rho.n_qubits())
    throw std::invalid_argument("qubit count mismatch");
  Eigen::SelfAdjointEigenSolver<Matrix> solver_h(operator_dense(h),
                                                 Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Matrix> solver_rho(rho.matrix(),
                                                   Eigen::EigenvaluesOnly);
  Eigen::VectorXd levels = solver_h.eigenvalues();    // ascending
  Eigen::VectorXd pops_asc = solver_rho.eigenvalues();
  if (pops_asc.minCoeff() < -1e-10)
    throw std::invalid_argument("density matrix is not positive semidefinite");

  ErgotropyResult out;
  out.initial_energy = energy(rho, h);
  out.passive_pairs.reserve(static_cast<std::size_t>(levels.size()));
  double passive = 0.0;
  for (Eigen::Index k = 0; k < levels.size(); ++k) {
    double p = pops_asc(pops_asc.size() - 1 - k);  // descending
    passive += p * levels(k);
    out.passive_pairs.emplace_back(p, levels(k));
  }
  out.passive_energy = passive;
  out.ergotropy = out.initial_energy - passive;
  return out;
}

double ergotropy_pure(const PureState& state, const PauliOperator& h) {
  return energy(state, h) - ground_state_energy(h);
}

double orbit_energy(const CliffordTableau& t, const std::vector<double>& table,
                    const PauliOperator& h) {
  check_table(t.n_qubits(), table, h);
  double sum = 0.0;
  for (std::size_t l = 0; l < h.num_terms(); ++l) {
    PauliString img = t.conjugate(h.string_at(l));
    sum += h.terms()[l].second * img.sign * table[img.label()];
  }
  return sum;
}

OrbitMinResult clifford_min_energy_exact_serial(int n_qubits,
                                                const std::vector<double>& table,
                                                const PauliOperator& h,
                                                const ProgressFn& progress) {
  check_table(n_qubits, table, h);
  check_exhaustive_n(n_qubits);
  const uint64_t nsym = symplectic_count(n_qubits);
  const uint32_t sign_space = uint32_t{1} << (2 * n_qubits);
  const std::size_t num_terms = h.num_terms();

  std::vector<uint64_t> mask(num_terms);
  for (std::size_t l = 0; l < num_terms; ++l)
    mask[l] = generator_mask(h.string_at(l));

  BestSlot best;
  std::vector<double> base(num_terms);
  uint64_t report_step = std::max<uint64_t>(1, nsym / 100);
  for (uint64_t s = 0; s < nsym; ++s) {
    CliffordTableau t = symplectic_from_index(n_qubits, s);
    frame_base_values(t, table, h, base);
    scan_signs(base, mask, sign_space, s * sign_space, best);
    if (progress && (s + 1) % report_step == 0)
      progress(static_cast<double>(s + 1) / static_cast<double>(nsym));
  }
  return finish_scan(n_qubits, best);
}

OrbitMinResult clifford_min_energy_exact(int n_qubits,
                                         const std::vector<double>& table,
                                         const PauliOperator& h,
                                         const ProgressFn& progress) {
  check_table(n_qubits, table, h);
  check_exhaustive_n(n_qubits);
  const int64_t nsym = static_cast<int64_t>(symplectic_count(n_qubits));
  const uint32_t sign_space = uint32_t{1} << (2 * n_qubits);
  const std::size_t num_terms = h.num_terms();

  std::vector<uint64_t> mask(num_terms);
  for (std::size_t l = 0; l < num_terms; ++l)
    mask[l] = generator_mask(h.string_at(l));

  BestSlot best;
  std::atomic<int64_t> done{0};
  const int64_t report_step = std::max<int64_t>(1, nsym / 100);

#pragma omp parallel
  {
    BestSlot local;
    std::vector<double> base(num_terms);
    int64_t since_flush = 0;
#pragma omp for schedule(dynamic, 256) nowait
    for (int64_t s = 0; s < nsym; ++s) {
      CliffordTableau t = symplectic_from_index(n_qubits, static_cast<uint64_t>(s));
      frame_base_values(t, table, h, base);
      scan_signs(base, mask, sign_space, static_cast<uint64_t>(s) * sign_space,
                 local);
      if (progress && ++since_flush == 256) {
        int64_t total = done.fetch_add(since_flush) + since_flush;
        since_flush = 0;
        if (total % report_step < 256) {
#pragma omp critical(ergo_progress)
          progress(static_cast<double>(total) / static_cast<double>(nsym));
        }
      }
    }
#pragma omp critical(ergo_min_merge)
    best.merge(local);
  }
  return finish_scan(n_qubits, best);
}

namespace {

CliffordErgotropyResult assemble_clifford_result(int n_qubits,
                                                 const std::vector<double>& table,
                                                 const PauliOperator& h,
                                                 double full_ergotropy) {
  CliffordErgotropyResult out;
  double e0 = 0.0;
  for (const auto& [label, coeff] : h.terms()) e0 += coeff * table[label];
  out.initial_energy = e0;
  out.minimizer = clifford_min_energy_exact(n_qubits, table, h);
  out.orbit_min_energy = out.minimizer.energy;
  out.clifford_ergotropy = out.initial_energy - out.orbit_min_energy;
  out.exact = true;
  out.gap = full_ergotropy - out.clifford_ergotropy;
  return out;
}

}  // namespace

CliffordErgotropyResult clifford_ergotropy_exact(const PureState& state,
                                                 const PauliOperator& h) {
  return assemble_clifford_result(state.n_qubits(),
                                  pauli_coefficient_table(state), h,
                                  ergotropy_pure(state, h));
}

CliffordErgotropyResult clifford_ergotropy_exact(const DensityMatrix& rho,
                                                 const PauliOperator& h) {
  return assemble_clifford_result(rho.n_qubits(), pauli_coefficient_table(rho), h,
                                  standard_ergotropy(rho, h).ergotropy);
}

namespace {

CliffordTableau embed_single_qubit_frame(int n_qubits, int qubit,
                                         const CliffordTableau& one) {
  auto lift = [&](const PauliString& p) {
    uint64_t bit = qubit_bit(n_qubits, qubit);
    return PauliString(n_qubits, p.x ? bit : 0, p.z ? bit : 0, p.sign);
  };
  CliffordTableau t(n_qubits);
  std::vector<PauliString> images = t.images();
  images[2 * static_cast<std::size_t>(qubit)] = lift(one.image_x(0));
  images[2 * static_cast<std::size_t>(qubit) + 1] = lift(one.image_z(0));
  return CliffordTableau(n_qubits, std::move(images));
}

std::vector<CliffordTableau> heuristic_moves(int n_qubits) {
  std::vector<CliffordTableau> moves;
  uint64_t singles = clifford_count(1);
  moves.reserve(static_cast<std::size_t>(n_qubits) * singles +
                static_cast<std::size_t>(n_qubits) * (n_qubits - 1));
  for (int q = 0; q < n_qubits; ++q)
    for (uint64_t i = 0; i < singles; ++i)
      moves.push_back(embed_single_qubit_frame(n_qubits, q, clifford_from_index(1, i)));
  for (int c = 0; c < n_qubits; ++c)
    for (int t = 0; t < n_qubits; ++t)
      if (c != t) moves.push_back(cnot_tableau(n_qubits, c, t));
  return moves;
}

struct RestartOutcome {
  double energy = std::numeric_limits<double>::infinity();
  CliffordTableau tableau;
};

RestartOutcome run_restart(int n_qubits, const std::vector<double>& table,
                           const PauliOperator& h,
                           const std::vector<CliffordTableau>& moves, int steps,
                           uint64_t seed, int restart) {
  CliffordTableau cur(n_qubits);
  if (restart > 0) {
    Rng rng = Rng::substream(seed, static_cast<uint64_t>(restart));
    cur = random_clifford(n_qubits, rng);
  }
  const std::size_t num_terms = h.num_terms();
  const std::size_t num_moves = moves.size();

  // Candidate frames are never materialized during the search: a product's
  // action factors as compose(a, b).conjugate(p) == a.conjugate(b.conjugate(p)),
  // so candidate energies come from chained conjugations and only the winning
  // frame is composed.  Images of the Hamiltonian strings under each move are
  // fixed for the whole run.
  std::vector<PauliString> move_img(num_moves * num_terms);
  for (std::size_t j = 0; j < num_moves; ++j)
    for (std::size_t l = 0; l < num_terms; ++l)
      move_img[j * num_terms + l] = moves[j].conjugate(h.string_at(l));

  auto table_energy = [&](auto&& image_of) {
    double sum = 0.0;
    for (std::size_t l = 0; l < num_terms; ++l) {
      PauliString img = image_of(l);
      sum += h.terms()[l].second * img.sign * table[img.label()];
    }
    return sum;
  };

  enum class Arrangement { kLeft, kRight, kSandwich };
  std::vector<PauliString> cur_img(num_terms);
  std::vector<PauliString> via_right(num_terms);

  double e = orbit_energy(cur, table, h);
  for (int step = 0; step < steps; ++step) {
    for (std::size_t l = 0; l < num_terms; ++l)
      cur_img[l] = cur.conjugate(h.string_at(l));
    double best_e = e;
    bool improved = false;
    Arrangement best_arr = Arrangement::kLeft;
    std::size_t best_i = 0;
    std::size_t best_j = 0;
    auto consider = [&](double ec, Arrangement arr, std::size_t i, std::size_t j) {
      if (ec < best_e) {
        best_e = ec;
        improved = true;
        best_arr = arr;
        best_i = i;
        best_j = j;
      }
    };
    // Each move is tried on both sides of the current frame; the two-sided
    // neighborhood escapes local minima that one-sided composition gets
    // trapped in.
    for (std::size_t i = 0; i < num_moves; ++i) {
      consider(table_energy([&](std::size_t l) { return moves[i].conjugate(cur_img[l]); }),
               Arrangement::kLeft, i, 0);
      consider(table_energy([&](std::size_t l) { return cur.conjugate(move_img[i * num_terms + l]); }),
               Arrangement::kRight, i, 0);
    }
    if (!improved) {
      // Stuck at a depth-1 minimum: search sandwich pairs (one move on each
      // side of the frame) before giving up.  This only runs at local
      // minima, so the typical per-step cost stays linear in the move count.
      for (std::size_t j = 0; j < num_moves; ++j) {
        for (std::size_t l = 0; l < num_terms; ++l)
          via_right[l] = cur.conjugate(move_img[j * num_terms + l]);
        for (std::size_t i = 0; i < num_moves; ++i) {
          consider(table_energy([&](std::size_t l) { return moves[i].conjugate(via_right[l]); }),
                   Arrangement::kSandwich, i, j);
        }
      }
    }
    if (!improved) break;
    switch (best_arr) {
      case Arrangement::kLeft:
        cur = CliffordTableau::compose(moves[best_i], cur);
        break;
      case Arrangement::kRight:
        cur = CliffordTableau::compose(cur, moves[best_i]);
        break;
      case Arrangement::kSandwich:
        cur = CliffordTableau::compose(moves[best_i], CliffordTableau::compose(cur, moves[best_j]));
        break;
    }
    e = best_e;
  }
  return {e, std::move(cur)};
}

}  // namespace

OrbitMinResult clifford_min_energy_heuristic_serial(int n_qubits,
                                                    const std::vector<double>& table,
                                                    const PauliOperator& h,
                                                    const HeuristicBudget& budget,
                                                    uint64_t seed) {
  check_table(n_qubits, table, h);
  if (budget.restarts < 1 || budget.steps < 1)
    throw std::invalid_argument("heuristic budget must be positive");
  std::vector<CliffordTableau> moves = heuristic_moves(n_qubits);
  OrbitMinResult out;
  out.energy = std::numeric_limits<double>::infinity();
  for (int r = 0; r < budget.restarts; ++r) {
    RestartOutcome res =
        run_restart(n_qubits, table, h, moves, budget.steps, seed, r);
    if (res.energy < out.energy) {
      out.energy = res.energy;
      out.index = static_cast<uint64_t>(r);
      out.tableau = std::move(res.tableau);
    }
  }
  return out;
}

OrbitMinResult clifford_min_energy_heuristic(int n_qubits,
                                             const std::vector<double>& table,
                                             const PauliOperator& h,
                                             const HeuristicBudget& budget,
                                             uint64_t seed) {
  check_table(n_qubits, table, h);
  if (budget.restarts < 1 || budget.steps < 1)
    throw std::invalid_argument("heuristic budget must be positive");
  std::vector<CliffordTableau> moves = heuristic_moves(n_qubits);
  std::vector<RestartOutcome> results(static_cast<std::size_t>(budget.restarts));
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < budget.restarts; ++r)
    results[static_cast<std::size_t>(r)] =
        run_restart(n_qubits, table, h, moves, budget.steps, seed, r);

  OrbitMinResult out;
  out.energy = std::numeric_limits<double>::infinity();
  for (int r = 0; r < budget.restarts; ++r) {
    RestartOutcome& res = results[static_cast<std::size_t>(r)];
    if (res.energy < out.energy) {
      out.energy = res.energy;
      out.index = static_cast<uint64_t>(r);
      out.tableau = std::move(res.tableau);
    }
  }
  return out;
}

double ergotropy_gap(const PureState& state, const PauliOperator& h) {
  return ergotropy_pure(state, h) -
         clifford_ergotropy_exact(state, h).clifford_ergotropy;
}

double ergotropy_gap(const DensityMatrix& rho, const PauliOperator& h) {
  return standard_ergotropy(rho, h).ergotropy -
         clifford_ergotropy_exact(rho, h).clifford_ergotropy;
}

}  // namespace ergo
