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

#include "ergo/clifford_group.hpp"

#include <bit>
#include <stdexcept>

namespace ergo {

namespace {

int sp(const PauliString& p, const PauliString& q) {
  return parity(p.x & q.z) ^ parity(p.z & q.x);
}

// XOR-combination of basis vectors selected by coefficient bits.
PauliString combine(const std::vector<PauliString>& basis, uint64_t bits) {
  uint64_t x = 0;
  uint64_t z = 0;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (bits >> j & 1u) {
      x ^= basis[j].x;
      z ^= basis[j].z;
    }
  }
  return PauliString(basis.front().n, x, z, +1);
}

struct LevelChoice {
  PauliString a, b;                // images of X_j, Z_j
  std::vector<PauliString> rest;   // symplectic basis of the complement
};

// One enumeration level over a symplectic basis of 2m vectors (stored as
// adjacent pairs). a_idx in [0, 4^m - 1) picks a nonzero vector a; b_idx in
// [0, 2^{2m-1}) picks one of the vectors with sp(a, b) = 1. The remaining
// basis is reduced against (a, b) and re-paired, preserving order, so the
// whole scheme is a fixed bijection.
LevelChoice decode_level(const std::vector<PauliString>& basis, uint64_t a_idx,
                         uint64_t b_idx) {
  int m2 = static_cast<int>(basis.size());
  uint64_t alpha = a_idx + 1;
  PauliString a = combine(basis, alpha);

  // In coordinates, sp(alpha, e_j) = alpha_{j^1}. The first set bit k of
  // alpha gives the particular solution beta0 = e_{k^1}; the kernel of
  // sp(alpha, .) is spanned by e_j + alpha_{j^1} e_{k^1} for j != k^1.
  int k = std::countr_zero(alpha);
  int p = k ^ 1;
  uint64_t beta = uint64_t{1} << p;
  int t = 0;
  for (int j = 0; j < m2; ++j) {
    if (j == p) continue;
    uint64_t v = uint64_t{1} << j;
    if (alpha >> (j ^ 1) & 1u) v |= uint64_t{1} << p;
    if (b_idx >> t & 1u) beta ^= v;
    ++t;
  }
  PauliString b = combine(basis, beta);

  LevelChoice out{a, b, {}};
  std::vector<PauliString> reduced;
  reduced.reserve(basis.size());
  for (const PauliString& w : basis) {
    PauliString w2 = w;
    if (sp(w2, b)) {
      w2.x ^= a.x;
      w2.z ^= a.z;
    }
    if (sp(w2, a)) {
      w2.x ^= b.x;
      w2.z ^= b.z;
    }
    if (!w2.is_identity()) reduced.push_back(w2);
  }
  while (!reduced.empty()) {
    PauliString u = reduced.front();
    reduced.erase(reduced.begin());
    if (u.is_identity()) continue;
    int partner = -1;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (sp(u, reduced[i])) {
        partner = static_cast<int>(i);
        break;
      }
    }
    if (partner < 0)
      throw std::logic_error("symplectic complement lost nondegeneracy");
    PauliString v = reduced[static_cast<std::size_t>(partner)];
    reduced.erase(reduced.begin() + partner);
    for (PauliString& w : reduced) {
      if (sp(w, v)) {
        w.x ^= u.x;
        w.z ^= u.z;
      }
      if (sp(w, u)) {
        w.x ^= v.x;
        w.z ^= v.z;
      }
    }
    out.rest.push_back(u);
    out.rest.push_back(v);
  }
  return out;
}

uint64_t level_block(int m) {
  // (4^m - 1) * 2^{2m-1} choices at a level with m pairs left
  return ((uint64_t{1} << (2 * m)) - 1) << (2 * m - 1);
}

std::vector<PauliString> generator_basis(int n_qubits) {
  std::vector<PauliString> basis;
  basis.reserve(2 * static_cast<std::size_t>(n_qubits));
  for (int q = 0; q < n_qubits; ++q) {
    basis.push_back(PauliString::single(n_qubits, q, 'X'));
    basis.push_back(PauliString::single(n_qubits, q, 'Z'));
  }
  return basis;
}

void check_enum_n(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxEnumQubits)
    throw std::invalid_argument("exhaustive Clifford enumeration supports 1 to " +
                                std::to_string(kMaxEnumQubits) + " qubits");
}

void rec_symplectic(int n_qubits, std::vector<PauliString>& basis,
                    std::vector<PauliString>& images, uint64_t base_index,
                    const std::function<void(uint64_t, const CliffordTableau&)>& fn) {
  if (basis.empty()) {
    fn(base_index, CliffordTableau(n_qubits, images));
    return;
  }
  int m = static_cast<int>(basis.size()) / 2;
  uint64_t below = 1;
  for (int j = 1; j < m; ++j) below *= level_block(j);
  uint64_t a_count = (uint64_t{1} << (2 * m)) - 1;
  uint64_t b_count = uint64_t{1} << (2 * m - 1);
  for (uint64_t a_idx = 0; a_idx < a_count; ++a_idx) {
    for (uint64_t b_idx = 0; b_idx < b_count; ++b_idx) {
      LevelChoice c = decode_level(basis, a_idx, b_idx);
      images.push_back(c.a);
      images.push_back(c.b);
      rec_symplectic(n_qubits, c.rest, images,
                     base_index + (a_idx * b_count + b_idx) * below, fn);
      images.pop_back();
      images.pop_back();
    }
  }
}

}  // namespace

uint64_t symplectic_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 5)
    throw std::invalid_argument("symplectic_count overflows outside [1, 5]");
  uint64_t count = 1;
  for (int m = 1; m <= n_qubits; ++m) count *= level_block(m);
  return count;
}

uint64_t clifford_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 4)
    throw std::invalid_argument("clifford_count overflows outside [1, 4]");
  return symplectic_count(n_qubits) << (2 * n_qubits);
}

CliffordTableau symplectic_from_index(int n_qubits, uint64_t index) {
  check_enum_n(n_qubits);
  if (index >= symplectic_count(n_qubits))
    throw std::out_of_range("symplectic index out of range");
  std::vector<PauliString> basis = generator_basis(n_qubits);
  std::vector<PauliString> images;
  images.reserve(basis.size());
  uint64_t rem = index;
  for (int m = n_qubits; m >= 1; --m) {
    uint64_t below = 1;
    for (int j = 1; j < m; ++j) below *= level_block(j);
    uint64_t digit = rem / below;
    rem %= below;
    uint64_t b_count = uint64_t{1} << (2 * m - 1);
    LevelChoice c = decode_level(basis, digit / b_count, digit % b_count);
    images.push_back(c.a);
    images.push_back(c.b);
    basis = std::move(c.rest);
  }
  return CliffordTableau(n_qubits, std::move(images));
}

CliffordTableau clifford_from_index(int n_qubits, uint64_t index) {
  check_enum_n(n_qubits);
  if (index >= clifford_count(n_qubits))
    throw std::out_of_range("clifford index out of range");
  uint64_t signs = index & ((uint64_t{1} << (2 * n_qubits)) - 1);
  CliffordTableau t = symplectic_from_index(n_qubits, index >> (2 * n_qubits));
  return t.with_signs(signs);
}

void for_each_symplectic(int n_qubits,
                         const std::function<void(uint64_t, const CliffordTableau&)>& fn) {
  check_enum_n(n_qubits);
  std::vector<PauliString> basis = generator_basis(n_qubits);
  std::vector<PauliString> images;
  rec_symplectic(n_qubits, basis, images, 0, fn);
}

void for_each_clifford(int n_qubits,
                       const std::function<void(uint64_t, const CliffordTableau&)>& fn) {
  check_enum_n(n_qubits);
  uint32_t sign_space = uint32_t{1} << (2 * n_qubits);
  for_each_symplectic(n_qubits, [&](uint64_t sym_idx, const CliffordTableau& t) {
    for (uint32_t bits = 0; bits < sign_space; ++bits)
      fn(sym_idx * sign_space + bits, t.with_signs(bits));
  });
}

CliffordTableau random_clifford(int n_qubits, Rng& rng) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::invalid_argument("qubit count out of range");
  std::vector<PauliString> basis = generator_basis(n_qubits);
  std::vector<PauliString> images;
  images.reserve(basis.size());
  for (int m = n_qubits; m >= 1; --m) {
    uint64_t a_count = (m < 32) ? (uint64_t{1} << (2 * m)) - 1 : ~uint64_t{0};
    uint64_t b_count = uint64_t{1} << (2 * m - 1);
    LevelChoice c = decode_level(basis, rng.below(a_count), rng.below(b_count));
    images.push_back(c.a);
    images.push_back(c.b);
    basis = std::move(c.rest);
  }
  CliffordTableau t(n_qubits, std::move(images));
  uint64_t mask = (n_qubits == 32) ? ~uint64_t{0}
                                   : (uint64_t{1} << (2 * n_qubits)) - 1;
  return t.with_signs(rng.next_u64() & mask);
}

}  // namespace ergo
