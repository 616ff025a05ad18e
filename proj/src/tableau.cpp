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

#include "ergo/tableau.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ergo {

namespace {

int symplectic_product(const PauliString& p, const PauliString& q) {
  return parity(p.x & q.z) ^ parity(p.z & q.x);
}

void check_qubit(int n_qubits, int qubit) {
  if (qubit < 0 || qubit >= n_qubits)
    throw std::invalid_argument("qubit index out of range");
}

}  // namespace

CliffordTableau::CliffordTableau(int n_qubits) : n_(n_qubits) {
  images_.reserve(2 * static_cast<std::size_t>(n_qubits));
  for (int q = 0; q < n_qubits; ++q) {
    images_.push_back(PauliString::single(n_qubits, q, 'X'));
    images_.push_back(PauliString::single(n_qubits, q, 'Z'));
  }
}

CliffordTableau::CliffordTableau(int n_qubits, std::vector<PauliString> images)
    : n_(n_qubits), images_(std::move(images)) {
  if (images_.size() != 2 * static_cast<std::size_t>(n_qubits))
    throw std::invalid_argument("tableau needs 2n generator images");
  for (const PauliString& p : images_)
    if (p.n != n_qubits) throw std::invalid_argument("image qubit count mismatch");
}

PauliString CliffordTableau::conjugate(const PauliString& p) const {
  if (p.n != n_) throw std::invalid_argument("qubit count mismatch");
  // P(x,z) = i^{|x&z|} prod_q X_q^{x_q} prod_q Z_q^{z_q}; conjugation
  // replaces each bare generator by its image.
  PauliString acc = PauliString::identity(n_);
  int k = p.y_count();
  for (int q = 0; q < n_; ++q) {
    if (p.x & qubit_bit(n_, q)) {
      auto [r, dk] = pauli_product(acc, image_x(q));
      acc = r;
      k += dk;
    }
  }
  for (int q = 0; q < n_; ++q) {
    if (p.z & qubit_bit(n_, q)) {
      auto [r, dk] = pauli_product(acc, image_z(q));
      acc = r;
      k += dk;
    }
  }
  k &= 3;
  if (k & 1) throw std::logic_error("tableau is not a valid Clifford frame");
  acc.sign = (k == 0) ? p.sign : -p.sign;
  return acc;
}

CliffordTableau CliffordTableau::compose(const CliffordTableau& a,
                                         const CliffordTableau& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("qubit count mismatch");
  std::vector<PauliString> images;
  images.reserve(b.images_.size());
  for (const PauliString& p : b.images_) images.push_back(a.conjugate(p));
  return CliffordTableau(a.n_, std::move(images));
}

CliffordTableau CliffordTableau::inverse() const {
  std::vector<PauliString> inv_images(2 * static_cast<std::size_t>(n_));
  for (int k = 0; k < 2 * n_; ++k) {
    PauliString gen = (k % 2 == 0) ? PauliString::single(n_, k / 2, 'X')
                                   : PauliString::single(n_, k / 2, 'Z');
    // Expand gen over the image basis via symplectic pairing, then read the
    // same combination off the plain generators.
    uint64_t x = 0;
    uint64_t z = 0;
    for (int q = 0; q < n_; ++q) {
      if (symplectic_product(gen, image_z(q))) x |= qubit_bit(n_, q);
      if (symplectic_product(gen, image_x(q))) z |= qubit_bit(n_, q);
    }
    PauliString cand(n_, x, z, +1);
    PauliString mapped = conjugate(cand);
    if (mapped.x != gen.x || mapped.z != gen.z)
      throw std::logic_error("tableau is not invertible (invalid frame)");
    cand.sign = mapped.sign;
    inv_images[static_cast<std::size_t>(k)] = cand;
  }
  return CliffordTableau(n_, std::move(inv_images));
}

bool CliffordTableau::symplectic_check() const {
  if (images_.size() != 2 * static_cast<std::size_t>(n_)) return false;
  for (int i = 0; i < 2 * n_; ++i) {
    const PauliString& p = images_[static_cast<std::size_t>(i)];
    if (p.n != n_ || (p.sign != 1 && p.sign != -1)) return false;
    for (int j = i + 1; j < 2 * n_; ++j) {
      int want = (j == (i ^ 1)) ? 1 : 0;
      if (symplectic_product(p, images_[static_cast<std::size_t>(j)]) != want)
        return false;
    }
  }
  return true;
}

CliffordTableau CliffordTableau::with_signs(uint64_t sign_bits) const {
  CliffordTableau out = *this;
  for (int k = 0; k < 2 * n_; ++k)
    if (sign_bits >> k & 1u)
      out.images_[static_cast<std::size_t>(k)].sign =
          -out.images_[static_cast<std::size_t>(k)].sign;
  return out;
}

uint64_t CliffordTableau::frame_hash() const {
  uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(static_cast<uint64_t>(n_));
  for (const PauliString& p : images_) {
    mix(p.x);
    mix(p.z);
    mix(p.sign > 0 ? 1u : 2u);
  }
  return h;
}

CliffordTableau hadamard_tableau(int n_qubits, int qubit) {
  check_qubit(n_qubits, qubit);
  CliffordTableau t(n_qubits);
  std::vector<PauliString> images = t.images();
  images[2 * static_cast<std::size_t>(qubit)] = PauliString::single(n_qubits, qubit, 'Z');
  images[2 * static_cast<std::size_t>(qubit) + 1] = PauliString::single(n_qubits, qubit, 'X');
  return CliffordTableau(n_qubits, std::move(images));
}

CliffordTableau phase_tableau(int n_qubits, int qubit) {
  check_qubit(n_qubits, qubit);
  CliffordTableau t(n_qubits);
  std::vector<PauliString> images = t.images();
  images[2 * static_cast<std::size_t>(qubit)] = PauliString::single(n_qubits, qubit, 'Y');
  return CliffordTableau(n_qubits, std::move(images));
}

CliffordTableau sqrt_x_tableau(int n_qubits, int qubit) {
  check_qubit(n_qubits, qubit);
  CliffordTableau t(n_qubits);
  std::vector<PauliString> images = t.images();
  PauliString minus_y = PauliString::single(n_qubits, qubit, 'Y');
  minus_y.sign = -1;
  images[2 * static_cast<std::size_t>(qubit) + 1] = minus_y;
  return CliffordTableau(n_qubits, std::move(images));
}

CliffordTableau pauli_x_tableau(int n_qubits, int qubit) {
  check_qubit(n_qubits, qubit);
  CliffordTableau t(n_qubits);
  std::vector<PauliString> images = t.images();
  images[2 * static_cast<std::size_t>(qubit) + 1].sign = -1;
  return CliffordTableau(n_qubits, std::move(images));
}

CliffordTableau pauli_z_tableau(int n_qubits, int qubit) {
  check_qubit(n_qubits, qubit);
  CliffordTableau t(n_qubits);
  std::vector<PauliString> images = t.images();
  images[2 * static_cast<std::size_t>(qubit)].sign = -1;
  return CliffordTableau(n_qubits, std::move(images));
}

CliffordTableau cnot_tableau(int n_qubits, int control, int target) {
  check_qubit(n_qubits, control);
  check_qubit(n_qubits, target);
  if (control == target)
    throw std::invalid_argument("control and target must differ");
  CliffordTableau t(n_qubits);
  std::vector<PauliString> images = t.images();
  uint64_t cbit = qubit_bit(n_qubits, control);
  uint64_t tbit = qubit_bit(n_qubits, target);
  images[2 * static_cast<std::size_t>(control)] =
      PauliString(n_qubits, cbit | tbit, 0);  // X_c -> X_c X_t
  images[2 * static_cast<std::size_t>(target) + 1] =
      PauliString(n_qubits, 0, cbit | tbit);  // Z_t -> Z_c Z_t
  return CliffordTableau(n_qubits, std::move(images));
}

CliffordTableau swap_tableau(int n_qubits, int a, int b) {
  check_qubit(n_qubits, a);
  check_qubit(n_qubits, b);
  if (a == b) throw std::invalid_argument("swap qubits must differ");
  CliffordTableau t(n_qubits);
  std::vector<PauliString> images = t.images();
  images[2 * static_cast<std::size_t>(a)] = PauliString::single(n_qubits, b, 'X');
  images[2 * static_cast<std::size_t>(a) + 1] = PauliString::single(n_qubits, b, 'Z');
  images[2 * static_cast<std::size_t>(b)] = PauliString::single(n_qubits, a, 'X');
  images[2 * static_cast<std::size_t>(b) + 1] = PauliString::single(n_qubits, a, 'Z');
  return CliffordTableau(n_qubits, std::move(images));
}

CliffordTableau gate_tableau(int n_qubits, const Gate& g) {
  auto need = [&g](std::size_t count) {
    if (g.qubits.size() != count)
      throw std::invalid_argument("gate " + g.name + " takes " +
                                  std::to_string(count) + " qubit(s)");
  };
  if (g.name == "H") {
    need(1);
    return hadamard_tableau(n_qubits, g.qubits[0]);
  }
  if (g.name == "S") {
    need(1);
    return phase_tableau(n_qubits, g.qubits[0]);
  }
  if (g.name == "SX") {
    need(1);
    return sqrt_x_tableau(n_qubits, g.qubits[0]);
  }
  if (g.name == "X") {
    need(1);
    return pauli_x_tableau(n_qubits, g.qubits[0]);
  }
  if (g.name == "Z") {
    need(1);
    return pauli_z_tableau(n_qubits, g.qubits[0]);
  }
  if (g.name == "CX") {
    need(2);
    return cnot_tableau(n_qubits, g.qubits[0], g.qubits[1]);
  }
  if (g.name == "SWAP") {
    need(2);
    return swap_tableau(n_qubits, g.qubits[0], g.qubits[1]);
  }
  throw std::invalid_argument("unknown gate \"" + g.name + "\"");
}

namespace {

Matrix embed_single(int n_qubits, int qubit, const Matrix& u) {
  Eigen::Index dim = Eigen::Index{1} << n_qubits;
  uint64_t bit = qubit_bit(n_qubits, qubit);
  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    int in_bit = (static_cast<uint64_t>(b) & bit) ? 1 : 0;
    uint64_t cleared = static_cast<uint64_t>(b) & ~bit;
    for (int r = 0; r < 2; ++r) {
      uint64_t row = cleared | (r ? bit : 0);
      out(static_cast<Eigen::Index>(row), b) = u(r, in_bit);
    }
  }
  return out;
}

}  // namespace

Matrix gate_unitary(int n_qubits, const Gate& g) {
  if (n_qubits > kMaxDenseQubits)
    throw std::invalid_argument("dense unitaries support at most " +
                                std::to_string(kMaxDenseQubits) + " qubits");
  gate_tableau(n_qubits, g);  // validates name and operands
  Eigen::Index dim = Eigen::Index{1} << n_qubits;
  const Cplx i(0, 1);
  if (g.name == "H" || g.name == "S" || g.name == "SX" || g.name == "X" ||
      g.name == "Z") {
    Matrix u(2, 2);
    if (g.name == "H") u << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0),
                            1 / std::sqrt(2.0), -1 / std::sqrt(2.0);
    if (g.name == "S") u << 1, 0, 0, i;
    if (g.name == "SX") u << (1.0 + i) / 2.0, (1.0 - i) / 2.0,
                             (1.0 - i) / 2.0, (1.0 + i) / 2.0;
    if (g.name == "X") u << 0, 1, 1, 0;
    if (g.name == "Z") u << 1, 0, 0, -1;
    return embed_single(n_qubits, g.qubits[0], u);
  }
  Matrix out = Matrix::Zero(dim, dim);
  if (g.name == "CX") {
    uint64_t cbit = qubit_bit(n_qubits, g.qubits[0]);
    uint64_t tbit = qubit_bit(n_qubits, g.qubits[1]);
    for (Eigen::Index b = 0; b < dim; ++b) {
      uint64_t row = static_cast<uint64_t>(b);
      if (row & cbit) row ^= tbit;
      out(static_cast<Eigen::Index>(row), b) = 1.0;
    }
    return out;
  }
  // SWAP
  uint64_t abit = qubit_bit(n_qubits, g.qubits[0]);
  uint64_t bbit = qubit_bit(n_qubits, g.qubits[1]);
  for (Eigen::Index b = 0; b < dim; ++b) {
    uint64_t row = static_cast<uint64_t>(b);
    bool has_a = (row & abit) != 0;
    bool has_b = (row & bbit) != 0;
    if (has_a != has_b) row ^= abit | bbit;
    out(static_cast<Eigen::Index>(row), b) = 1.0;
  }
  return out;
}

CliffordTableau circuit_tableau(int n_qubits, const std::vector<Gate>& gates) {
  CliffordTableau t(n_qubits);
  for (const Gate& g : gates) t = CliffordTableau::compose(gate_tableau(n_qubits, g), t);
  return t;
}

Matrix circuit_unitary(int n_qubits, const std::vector<Gate>& gates) {
  Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Matrix u = Matrix::Identity(dim, dim);
  for (const Gate& g : gates) u = gate_unitary(n_qubits, g) * u;
  return u;
}

std::vector<Gate> synthesize(const CliffordTableau& t) {
  if (!t.symplectic_check())
    throw std::invalid_argument("not a valid Clifford frame");
  int n_qubits = t.n_qubits();
  CliffordTableau cur = t;
  std::vector<Gate> emitted;
  auto apply = [&](const Gate& g) {
    emitted.push_back(g);
    cur = CliffordTableau::compose(gate_tableau(n_qubits, g), cur);
  };

  for (int j = 0; j < n_qubits; ++j) {
    // Bring image of X_j to +X_j. Its support is confined to qubits >= j
    // because earlier pairs are already pinned.
    {
      PauliString p = cur.image_x(j);
      for (int q = j; q < n_qubits; ++q) {
        char op = p.op_at(q);
        if (op == 'Y') apply({"S", {q}});
        else if (op == 'Z') apply({"H", {q}});
      }
      p = cur.image_x(j);
      int pivot = -1;
      for (int q = j; q < n_qubits; ++q)
        if (p.op_at(q) == 'X') {
          pivot = q;
          break;
        }
      if (pivot < 0) throw std::logic_error("synthesis lost the X image");
      for (int q = pivot + 1; q < n_qubits; ++q)
        if (p.op_at(q) == 'X') apply({"CX", {pivot, q}});
      if (pivot != j) apply({"SWAP", {j, pivot}});
      if (cur.image_x(j).sign < 0) apply({"Z", {j}});
    }
    // Bring image of Z_j to +Z_j without disturbing X_j.
    {
      PauliString r = cur.image_z(j);
      if (r.op_at(j) == 'Y') apply({"SX", {j}});
      else if (r.op_at(j) == 'X' || r.op_at(j) == 'I')
        throw std::logic_error("synthesis lost the Z image");
      r = cur.image_z(j);
      for (int q = j + 1; q < n_qubits; ++q) {
        char op = r.op_at(q);
        if (op == 'X') apply({"H", {q}});
        else if (op == 'Y') apply({"SX", {q}});
      }
      r = cur.image_z(j);
      for (int q = j + 1; q < n_qubits; ++q)
        if (r.op_at(q) == 'Z') apply({"CX", {q, j}});
      if (cur.image_z(j).sign < 0) apply({"X", {j}});
    }
  }
  if (!(cur == CliffordTableau(n_qubits)))
    throw std::logic_error("synthesis did not reduce the frame to identity");

  // emitted reduces t to the identity, so t is the reversed sequence of
  // inverses. S and SX are not self-inverse: S^-1 = Z S, SX^-1 = X SX.
  std::vector<Gate> result;
  result.reserve(emitted.size() + n_qubits);
  for (auto it = emitted.rbegin(); it != emitted.rend(); ++it) {
    if (it->name == "S") {
      result.push_back({"S", it->qubits});
      result.push_back({"Z", it->qubits});
    } else if (it->name == "SX") {
      result.push_back({"SX", it->qubits});
      result.push_back({"X", it->qubits});
    } else {
      result.push_back(*it);
    }
  }
  return result;
}

Matrix dense_unitary(const CliffordTableau& t) {
  return circuit_unitary(t.n_qubits(), synthesize(t));
}

}  // namespace ergo
