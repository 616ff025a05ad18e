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

// Oracles for the test suites. Everything here is built independently of
// the library's fast paths: dense matrices from explicit 2x2 Kronecker
// products, eigenvalues from Eigen, integrals from quadrature. Tests compare
// the library against these, never against itself.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "ergo/pauli.hpp"
#include "ergo/rng.hpp"
#include "ergo/state.hpp"

namespace ergo_test {

using ergo::Cplx;
using ergo::Matrix;
using ergo::Vector;

// Dense matrix of a signed Pauli word via explicit Kronecker products,
// leftmost letter = qubit 0 = most significant bit.
inline Matrix dense_from_word(const std::string& word, int sign = +1) {
  Matrix x(2, 2), y(2, 2), z(2, 2), id(2, 2);
  x << 0, 1, 1, 0;
  y << Cplx(0, 0), Cplx(0, -1), Cplx(0, 1), Cplx(0, 0);
  z << 1, 0, 0, -1;
  id << 1, 0, 0, 1;
  Matrix out = Matrix::Identity(1, 1);
  for (char c : word) {
    const Matrix& factor = (c == 'X') ? x : (c == 'Y') ? y : (c == 'Z') ? z : id;
    Matrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j)
        next.block(2 * i, 2 * j, 2, 2) = out(i, j) * factor;
    out = next;
  }
  return static_cast<double>(sign) * out;
}

inline Matrix dense_operator_oracle(const ergo::PauliOperator& h) {
  Eigen::Index dim = Eigen::Index{1} << h.n_qubits();
  Matrix out = Matrix::Zero(dim, dim);
  for (std::size_t k = 0; k < h.num_terms(); ++k)
    out += h.terms()[k].second * dense_from_word(h.string_at(k).word());
  return out;
}

inline ergo::PureState random_state(int n_qubits, ergo::Rng& rng) {
  Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Vector amps(dim);
  for (Eigen::Index c = 0; c < dim; ++c)
    amps(c) = Cplx(rng.gaussian(), rng.gaussian());
  amps /= amps.norm();
  return ergo::PureState(n_qubits, std::move(amps));
}

// Random mixed state: Gaussian matrix G, rho = G G^dagger / tr.
inline ergo::DensityMatrix random_density(int n_qubits, ergo::Rng& rng) {
  Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Matrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      g(i, j) = Cplx(rng.gaussian(), rng.gaussian());
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint().eval());
  return ergo::DensityMatrix(n_qubits, std::move(rho));
}

// Haar-distributed unitary via QR of a Gaussian matrix with the standard
// phase correction.
inline Matrix haar_unitary(Eigen::Index dim, ergo::Rng& rng) {
  Matrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      g(i, j) = Cplx(rng.gaussian(), rng.gaussian());
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    Cplx d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

// Random sparse observable with up to max_terms distinct non-identity words.
inline ergo::PauliOperator random_operator(int n_qubits, int max_terms,
                                           ergo::Rng& rng) {
  ergo::PauliOperator op(n_qubits);
  uint64_t labels = uint64_t{1} << (2 * n_qubits);
  int placed = 0;
  int cap = static_cast<int>(std::min<uint64_t>(labels - 1,
                                                static_cast<uint64_t>(max_terms)));
  int want = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(cap)));
  while (placed < want) {
    uint64_t label = 1 + rng.below(labels - 1);
    double coeff = 2.0 * rng.uniform() - 1.0;
    if (coeff == 0.0) continue;
    if (op.coefficient(label) != 0.0) continue;
    op.add(ergo::PauliString::from_label(n_qubits, label), coeff);
    ++placed;
  }
  return op;
}

inline double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

// Complete elliptic integral of the second kind by adaptive Simpson
// quadrature on [0, pi/2]; independent of the AGM implementation.
inline double elliptic_e_quadrature(double x) {
  auto f = [x](double t) {
    double s = std::sin(t);
    return std::sqrt(std::max(0.0, 1.0 - x * x * s * s));
  };
  auto simpson = [&f](double a, double b) {
    return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
  };
  struct Frame {
    double a, b, whole;
  };
  double total = 0.0;
  std::vector<Frame> stack{{0.0, 1.5707963267948966, simpson(0.0, 1.5707963267948966)}};
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    double mid = 0.5 * (fr.a + fr.b);
    double left = simpson(fr.a, mid);
    double right = simpson(mid, fr.b);
    if (std::abs(left + right - fr.whole) < 1e-13 || fr.b - fr.a < 1e-8) {
      total += left + right + (left + right - fr.whole) / 15.0;
    } else {
      stack.push_back({fr.a, mid, left});
      stack.push_back({mid, fr.b, right});
    }
  }
  return total;
}

}  // namespace ergo_test
