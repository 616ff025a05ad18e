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

#include "ergo/models.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>

namespace ergo {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

}  // namespace

PureState t_state() {
  Vector amps(2);
  amps << Cplx(kInvSqrt2, 0), std::polar(kInvSqrt2, kPi / 4);
  return PureState(1, std::move(amps));
}

PureState tt_state() { return t_product_state(2); }

PureState t_product_state(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxAmplitudeQubits)
    throw std::invalid_argument("qubit count out of range");
  Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Vector amps(dim);
  double mag = std::pow(kInvSqrt2, n_qubits);
  for (Eigen::Index c = 0; c < dim; ++c) {
    int ones = std::popcount(static_cast<uint64_t>(c));
    amps(c) = std::polar(mag, ones * kPi / 4);
  }
  return PureState(n_qubits, std::move(amps));
}

DensityMatrix density_from_bloch(double bx, double by, double bz) {
  if (bx * bx + by * by + bz * bz > 1.0 + 1e-10)
    throw std::invalid_argument("Bloch vector lies outside the unit ball");
  Matrix rho(2, 2);
  rho << Cplx(0.5 * (1 + bz), 0), Cplx(0.5 * bx, -0.5 * by),
      Cplx(0.5 * bx, 0.5 * by), Cplx(0.5 * (1 - bz), 0);
  return DensityMatrix(1, std::move(rho));
}

PauliOperator hamiltonian_2q(double g, double h) {
  PauliOperator op(2);
  op.add(PauliString::from_word("ZZ"), -1.0);
  if (g != 0.0) {
    op.add(PauliString::from_word("XI"), g);
    op.add(PauliString::from_word("IX"), g);
  }
  if (h != 0.0) {
    op.add(PauliString::from_word("ZI"), h);
    op.add(PauliString::from_word("IZ"), h);
  }
  return op;
}

PauliOperator hamiltonian_classical_ising(int n_qubits, double h) {
  if (n_qubits < 2) throw std::invalid_argument("chain needs at least 2 sites");
  PauliOperator op(n_qubits);
  for (int j = 0; j < n_qubits; ++j) {
    uint64_t bond = qubit_bit(n_qubits, j) | qubit_bit(n_qubits, (j + 1) % n_qubits);
    op.add(PauliString(n_qubits, 0, bond), -1.0);
    if (h != 0.0) op.add(PauliString::single(n_qubits, j, 'Z'), h);
  }
  return op;
}

PauliOperator hamiltonian_tfim(int n_qubits, double g) {
  if (n_qubits < 2) throw std::invalid_argument("chain needs at least 2 sites");
  PauliOperator op(n_qubits);
  for (int j = 0; j < n_qubits; ++j) {
    uint64_t bond = qubit_bit(n_qubits, j) | qubit_bit(n_qubits, (j + 1) % n_qubits);
    op.add(PauliString(n_qubits, 0, bond), -1.0);
    if (g != 0.0) op.add(PauliString::single(n_qubits, j, 'X'), g);
  }
  return op;
}

double clifford_ergotropy_1q(double bx, double by, double bz, double h) {
  if (h <= 0.0) throw std::invalid_argument("field strength must be positive");
  if (bx * bx + by * by + bz * bz > 1.0 + 1e-10)
    throw std::invalid_argument("Bloch vector lies outside the unit ball");
  double r1 = std::max({std::abs(bx), std::abs(by), std::abs(bz)});
  return h * (bz + r1);
}

double ergotropy_1q(double bx, double by, double bz, double h) {
  if (h <= 0.0) throw std::invalid_argument("field strength must be positive");
  double norm = std::sqrt(bx * bx + by * by + bz * bz);
  if (norm > 1.0 + 1e-10)
    throw std::invalid_argument("Bloch vector lies outside the unit ball");
  return h * (bz + norm);
}

double clifford_ergotropy_2q_analytic(double g, double h) {
  double s = std::abs(g) + std::abs(h);
  double extracted = (s <= 1.0) ? kInvSqrt2 + (kInvSqrt2 + 0.5) * s
                                : 0.5 + std::sqrt(2.0) * s;
  return std::sqrt(2.0) * g + extracted;
}

double elliptic_e(double x) {
  if (x < 0.0 || x > 1.0)
    throw std::invalid_argument("modulus must lie in [0, 1]");
  if (x == 0.0) return kPi / 2.0;
  if (x == 1.0) return 1.0;
  // AGM iteration: with a0 = 1, b0 = sqrt(1 - x^2), c0 = x,
  //   E = K (1 - sum_j 2^{j-1} c_j^2),  K = pi / (2 agm(a0, b0)).
  double a = 1.0;
  double b = std::sqrt((1.0 - x) * (1.0 + x));
  double c = x;
  double csum = 0.5 * c * c;
  double pow2 = 0.5;
  for (int it = 0; it < 64 && c > 1e-18 * a; ++it) {
    double an = 0.5 * (a + b);
    double bn = std::sqrt(a * b);
    c = 0.5 * (a - b);
    a = an;
    b = bn;
    pow2 *= 2.0;
    csum += pow2 * c * c;
  }
  return kPi / (2.0 * a) * (1.0 - csum);
}

double tfim_ground_energy_asymptotic(int n_qubits, double g) {
  if (n_qubits < 1) throw std::invalid_argument("need at least one site");
  double gm = std::abs(g);
  double modulus = 2.0 * std::sqrt(gm) / (1.0 + gm);
  return -static_cast<double>(n_qubits) * (1.0 + gm) * (2.0 / kPi) *
         elliptic_e(modulus);
}

double product_state_gap_bound(
    const std::vector<std::vector<double>>& site_spectra,
    const PauliOperator& h, double ground_energy) {
  int n_sites = static_cast<int>(site_spectra.size());
  if (n_sites != h.n_qubits())
    throw std::invalid_argument("site count does not match the Hamiltonian");
  // Per-site candidate lists with the identity (value 1) prepended; each
  // must be sorted nonincreasing for the best-first walk to be admissible.
  std::vector<std::vector<double>> lists(site_spectra.size());
  for (std::size_t j = 0; j < site_spectra.size(); ++j) {
    const std::vector<double>& s = site_spectra[j];
    if (s.size() != 3)
      throw std::invalid_argument("each site needs its 3 absolute coefficients");
    if (!std::is_sorted(s.rbegin(), s.rend()))
      throw std::invalid_argument("site spectra must be sorted nonincreasing");
    if (s.front() > 1.0 + 1e-12 || s.back() < 0.0)
      throw std::invalid_argument("site spectra must lie in [0, 1]");
    lists[j].push_back(1.0);
    lists[j].insert(lists[j].end(), s.begin(), s.end());
  }
  auto product_of = [&lists](const std::vector<int>& idx) {
    double value = 1.0;
    for (std::size_t j = 0; j < idx.size(); ++j)
      value *= lists[j][static_cast<std::size_t>(idx[j])];
    return value;
  };

  // K largest products of one entry per site, excluding the all-identity
  // tuple. Tuples are explored best-first; successors bump one index.
  std::size_t want = h.num_terms();
  std::vector<double> top;
  using Node = std::pair<double, std::vector<int>>;
  std::priority_queue<Node> heap;
  std::set<std::vector<int>> seen;
  std::vector<int> root(site_spectra.size(), 0);
  heap.push({1.0, root});
  seen.insert(root);
  while (!heap.empty() && top.size() < want) {
    auto [value, idx] = heap.top();
    heap.pop();
    bool is_identity =
        std::all_of(idx.begin(), idx.end(), [](int i) { return i == 0; });
    if (!is_identity) top.push_back(value);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (idx[j] + 1 >= static_cast<int>(lists[j].size())) continue;
      std::vector<int> next = idx;
      ++next[j];
      if (!seen.insert(next).second) continue;
      double next_value = product_of(next);
      heap.push({next_value, std::move(next)});
    }
  }
  while (top.size() < want) top.push_back(0.0);

  std::vector<double> habs = h.sorted_abs_coefficients();
  double dot = 0.0;
  for (std::size_t k = 0; k < habs.size(); ++k) dot += top[k] * habs[k];
  return -ground_energy - dot;
}

std::pair<double, double> tfim_bound_crossings() {
  auto f = [](double g) {
    return (2.0 / kPi) * elliptic_e(2.0 * std::sqrt(g) / (1.0 + g)) - kInvSqrt2;
  };
  auto bisect = [&f](double lo, double hi) {
    double flo = f(lo);
    if (flo * f(hi) > 0.0)
      throw std::logic_error("crossing bracket does not change sign");
    while (hi - lo > 1e-6) {
      double mid = 0.5 * (lo + hi);
      if (f(mid) * flo > 0.0)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };
  return {bisect(0.1, 1.0), bisect(1.0, 3.0)};
}

}  // namespace ergo
