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

#include "doctest.h"
#include "helpers.hpp"

#include <cmath>

#include "ergo/ergotropy.hpp"
#include "ergo/models.hpp"

using namespace ergo;
using ergo_test::haar_unitary;
using ergo_test::random_density;
using ergo_test::random_state;

TEST_SUITE_BEGIN("ergotropy");

TEST_CASE("standard ergotropy on hand solvable instances") {
  PauliOperator z = PauliOperator::from_words({{"Z", 1.0}});

  // |1><1| under Z: E = -1 already passive
  DensityMatrix excited = DensityMatrix::from_pure(PureState::basis_state(1, 1));
  ErgotropyResult lifted = standard_ergotropy(excited, z);
  CHECK(lifted.initial_energy == doctest::Approx(-1.0));
  CHECK(lifted.ergotropy == doctest::Approx(0.0));

  // |0><0| under Z: all of E - E_ground = 2 is extractable
  DensityMatrix ground = DensityMatrix::from_pure(PureState::basis_state(1, 0));
  ErgotropyResult full = standard_ergotropy(ground, z);
  CHECK(full.initial_energy == doctest::Approx(1.0));
  CHECK(full.passive_energy == doctest::Approx(-1.0));
  CHECK(full.ergotropy == doctest::Approx(2.0));

  // diag(0.7, 0.3) under Z: passive orders 0.7 onto the ground level
  Matrix diag = Matrix::Zero(2, 2);
  diag(0, 0) = 0.7;
  diag(1, 1) = 0.3;
  ErgotropyResult mixed = standard_ergotropy(DensityMatrix(1, diag), z);
  CHECK(mixed.initial_energy == doctest::Approx(0.4));
  CHECK(mixed.passive_energy == doctest::Approx(-0.4));
  CHECK(mixed.ergotropy == doctest::Approx(0.8));
  REQUIRE(mixed.passive_pairs.size() == 2);
  CHECK(mixed.passive_pairs[0].first == doctest::Approx(0.7));
  CHECK(mixed.passive_pairs[0].second == doctest::Approx(-1.0));
}

TEST_CASE("pure-state shortcut matches the general formula") {
  Rng rng(61);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng.below(3));
    PureState psi = random_state(n, rng);
    PauliOperator h = ergo_test::random_operator(n, 6, rng);
    double direct = ergotropy_pure(psi, h);
    double general = standard_ergotropy(DensityMatrix::from_pure(psi), h).ergotropy;
    CHECK(direct == doctest::Approx(general).epsilon(1e-10));
    CHECK(energy(psi, h) - ground_state_energy(h) ==
          doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("passive states cannot yield work to any unitary") {
  Rng rng(62);
  PauliOperator h = ergo_test::random_operator(2, 6, rng);
  Matrix hd = operator_dense(h);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hd);
  // populations sorted nonincreasing against ascending eigenvectors
  Eigen::Vector4d pops(0.4, 0.3, 0.2, 0.1);
  Matrix passive = Matrix::Zero(4, 4);
  for (int k = 0; k < 4; ++k)
    passive += pops(k) * solver.eigenvectors().col(k) *
               solver.eigenvectors().col(k).adjoint();
  DensityMatrix rho(2, (passive + passive.adjoint()) / 2.0);
  CHECK(standard_ergotropy(rho, h).ergotropy == doctest::Approx(0.0).epsilon(1e-10));

  double e0 = (hd * rho.matrix()).trace().real();
  for (int trial = 0; trial < 200; ++trial) {
    Matrix u = haar_unitary(4, rng);
    double e = (hd * u * rho.matrix() * u.adjoint()).trace().real();
    CHECK(e >= e0 - 1e-10);
  }
}

TEST_CASE("orbit_energy equals the energy of the rotated dense state") {
  // Heisenberg convention: t moves observables, so the state moves by the
  // inverse frame's unitary.
  Rng rng(63);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng.below(2));
    PureState psi = random_state(n, rng);
    PauliOperator h = ergo_test::random_operator(n, 6, rng);
    std::vector<double> table = pauli_coefficient_table(psi);
    CliffordTableau t = random_clifford(n, rng);
    Matrix c = dense_unitary(t.inverse());
    PureState rotated(n, c * psi.amplitudes());
    CHECK(orbit_energy(t, table, h) ==
          doctest::Approx(energy(rotated, h)).epsilon(1e-10));
  }
}

TEST_CASE("exact orbit minimum on hand solvable instances") {
  // single qubit magic state under Z: min over frames is -r1 = -1/sqrt(2)
  PauliOperator z = PauliOperator::from_words({{"Z", 1.0}});
  std::vector<double> table = pauli_coefficient_table(t_state());
  OrbitMinResult res = clifford_min_energy_exact(1, table, z);
  CHECK(res.energy == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(orbit_energy(res.tableau, table, z) == doctest::Approx(res.energy));

  // two magic copies, pure ZZ coupling: best frame aligns one axis
  PauliOperator zz = PauliOperator::from_words({{"ZZ", -1.0}});
  std::vector<double> table2 = pauli_coefficient_table(tt_state());
  OrbitMinResult res2 = clifford_min_energy_exact(2, table2, zz);
  CHECK(res2.energy == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("exact scan rejects registers beyond the enumeration limit") {
  std::vector<double> table(256, 0.0);
  table[0] = 1.0;
  PauliOperator h = PauliOperator::from_words({{"ZZZZ", 1.0}});
  CHECK_THROWS_AS(clifford_min_energy_exact(4, table, h), std::invalid_argument);
}

TEST_CASE("serial and parallel exact scans agree bit for bit") {
  Rng rng(64);
  for (int trial = 0; trial < 6; ++trial) {
    int n = 1 + static_cast<int>(rng.below(2));
    PureState psi = random_state(n, rng);
    PauliOperator h = ergo_test::random_operator(n, 6, rng);
    std::vector<double> table = pauli_coefficient_table(psi);
    OrbitMinResult par = clifford_min_energy_exact(n, table, h);
    OrbitMinResult ser = clifford_min_energy_exact_serial(n, table, h);
    CHECK(par.energy == ser.energy);
    CHECK(par.index == ser.index);
    CHECK(par.tableau == ser.tableau);
  }
}

TEST_CASE("exact minimum is witnessed and is a true lower bound of the orbit") {
  Rng rng(65);
  PureState psi = random_state(2, rng);
  PauliOperator h = ergo_test::random_operator(2, 8, rng);
  std::vector<double> table = pauli_coefficient_table(psi);
  OrbitMinResult res = clifford_min_energy_exact(2, table, h);
  CHECK(orbit_energy(res.tableau, table, h) == doctest::Approx(res.energy).epsilon(1e-13));
  CHECK(clifford_from_index(2, res.index) == res.tableau);
  for (int trial = 0; trial < 300; ++trial) {
    CliffordTableau t = random_clifford(2, rng);
    CHECK(orbit_energy(t, table, h) >= res.energy - 1e-12);
  }
}

TEST_CASE("frozen value: two-copy magic state in a transverse-and-parallel field") {
  PureState psi = tt_state();
  PauliOperator h = hamiltonian_2q(0.3, 0.5);
  CliffordErgotropyResult res = clifford_ergotropy_exact(psi, h);
  CHECK(res.exact);
  CHECK(res.clifford_ergotropy == doctest::Approx(2.0970562748477141).epsilon(1e-12));
  CHECK(res.orbit_min_energy == doctest::Approx(-1.6727922061357856).epsilon(1e-12));
  CHECK(res.initial_energy == doctest::Approx(0.3 * std::sqrt(2.0)).epsilon(1e-12));
  REQUIRE(res.gap.has_value());
  CHECK(*res.gap == doctest::Approx(ergotropy_pure(psi, h) - res.clifford_ergotropy)
                        .epsilon(1e-12));
  CHECK(*res.gap >= 0.0);
}

TEST_CASE("Clifford ergotropy never exceeds ergotropy") {
  Rng rng(66);
  for (int trial = 0; trial < 15; ++trial) {
    PureState psi = random_state(2, rng);
    PauliOperator h = ergo_test::random_operator(2, 8, rng);
    CliffordErgotropyResult res = clifford_ergotropy_exact(psi, h);
    double full = ergotropy_pure(psi, h);
    CHECK(res.clifford_ergotropy <= full + 1e-10);
    CHECK(ergotropy_gap(psi, h) == doctest::Approx(full - res.clifford_ergotropy)
                                       .epsilon(1e-12));
  }
}

TEST_CASE("orbit minimum is invariant under Clifford rotations of the state") {
  Rng rng(67);
  for (int trial = 0; trial < 8; ++trial) {
    PureState psi = random_state(2, rng);
    PauliOperator h = ergo_test::random_operator(2, 6, rng);
    CliffordTableau c = random_clifford(2, rng);
    PureState rotated(2, dense_unitary(c) * psi.amplitudes());
    double a = clifford_ergotropy_exact(psi, h).orbit_min_energy;
    double b = clifford_ergotropy_exact(rotated, h).orbit_min_energy;
    CHECK(a == doctest::Approx(b).epsilon(1e-10));
  }
}

TEST_CASE("mixed-state Clifford ergotropy handles nontrivial spectra") {
  Rng rng(68);
  DensityMatrix rho = random_density(2, rng);
  PauliOperator h = ergo_test::random_operator(2, 8, rng);
  CliffordErgotropyResult res = clifford_ergotropy_exact(rho, h);
  CHECK(res.exact);
  double full = standard_ergotropy(rho, h).ergotropy;
  CHECK(res.clifford_ergotropy <= full + 1e-10);
  REQUIRE(res.gap.has_value());
  CHECK(*res.gap == doctest::Approx(full - res.clifford_ergotropy).epsilon(1e-10));
  CHECK(ergotropy_gap(rho, h) == doctest::Approx(*res.gap).epsilon(1e-12));
}

TEST_CASE("heuristic reaches the exact optimum on two qubits") {
  PureState psi = tt_state();
  PauliOperator h = hamiltonian_2q(0.3, 0.5);
  std::vector<double> table = pauli_coefficient_table(psi);
  OrbitMinResult exact = clifford_min_energy_exact(2, table, h);
  OrbitMinResult heur = clifford_min_energy_heuristic(2, table, h, {50, 200}, 1234);
  CHECK(heur.energy == doctest::Approx(exact.energy).epsilon(1e-9));
  CHECK(heur.energy >= exact.energy - 1e-12);
  CHECK(orbit_energy(heur.tableau, table, h) ==
        doctest::Approx(heur.energy).epsilon(1e-13));
}

TEST_CASE("heuristic never undercuts the exact optimum") {
  Rng rng(69);
  for (int trial = 0; trial < 12; ++trial) {
    PureState psi = random_state(2, rng);
    PauliOperator h = ergo_test::random_operator(2, 8, rng);
    std::vector<double> table = pauli_coefficient_table(psi);
    double exact = clifford_min_energy_exact(2, table, h).energy;
    double heur = clifford_min_energy_heuristic(2, table, h, {12, 60}, trial).energy;
    CHECK(heur >= exact - 1e-12);
  }
}

TEST_CASE("heuristic is monotone in the restart budget and seed-deterministic") {
  Rng rng(70);
  PureState psi = random_state(3, rng);
  PauliOperator h = ergo_test::random_operator(3, 10, rng);
  std::vector<double> table = pauli_coefficient_table(psi);
  OrbitMinResult small = clifford_min_energy_heuristic(3, table, h, {4, 40}, 99);
  OrbitMinResult big = clifford_min_energy_heuristic(3, table, h, {16, 40}, 99);
  CHECK(big.energy <= small.energy + 1e-15);
  OrbitMinResult again = clifford_min_energy_heuristic(3, table, h, {16, 40}, 99);
  CHECK(again.energy == big.energy);
  CHECK(again.index == big.index);
  OrbitMinResult serial = clifford_min_energy_heuristic_serial(3, table, h, {16, 40}, 99);
  CHECK(serial.energy == big.energy);
  CHECK(serial.index == big.index);
  CHECK(serial.tableau == big.tableau);
}

TEST_CASE("heuristic budget validation") {
  std::vector<double> table(16, 0.0);
  table[0] = 1.0;
  PauliOperator h = PauliOperator::from_words({{"ZZ", 1.0}});
  CHECK_THROWS_AS(clifford_min_energy_heuristic(2, table, h, {0, 100}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(clifford_min_energy_heuristic(2, table, h, {5, 0}, 1),
                  std::invalid_argument);
}

TEST_SUITE_END();
