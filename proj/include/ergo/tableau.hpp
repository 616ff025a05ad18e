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

#include <cstdint>
#include <string>
#include <vector>

#include "ergo/pauli.hpp"
#include "ergo/state.hpp"

namespace ergo {

/// Clifford unitary represented by its frame action P -> U P U^dagger on the
/// 2n generators, stored in the order X_0, Z_0, X_1, Z_1, ... Signs are
/// tracked; global phase is not (it cancels in conjugation).
class CliffordTableau {
 public:
  CliffordTableau() = default;

  /// Identity frame on n qubits.
  explicit CliffordTableau(int n_qubits);

  /// images must hold 2n signed strings in generator order.
  CliffordTableau(int n_qubits, std::vector<PauliString> images);

  int n_qubits() const { return n_; }
  const std::vector<PauliString>& images() const { return images_; }
  const PauliString& image_x(int qubit) const { return images_[2 * static_cast<std::size_t>(qubit)]; }
  const PauliString& image_z(int qubit) const { return images_[2 * static_cast<std::size_t>(qubit) + 1]; }

  /// U P U^dagger for an arbitrary signed string, by composing generator
  /// images. Cost O(n) bit operations per generator in the support.
  PauliString conjugate(const PauliString& p) const;

  /// Frame of the product: compose(a, b).conjugate(p) equals
  /// a.conjugate(b.conjugate(p)).
  static CliffordTableau compose(const CliffordTableau& a, const CliffordTableau& b);

  CliffordTableau inverse() const;

  /// True iff the images pairwise satisfy the Pauli-group relations
  /// (anticommuting within a pair, commuting across pairs) and each image is
  /// Hermitian with sign +1 or -1. Any valid constructed tableau passes.
  bool symplectic_check() const;

  /// Copy with image k's sign flipped for every set bit k of sign_bits.
  CliffordTableau with_signs(uint64_t sign_bits) const;

  /// Hash of the full frame action (images and signs), for distinctness
  /// tests. Not cryptographic.
  uint64_t frame_hash() const;

  bool operator==(const CliffordTableau&) const = default;

 private:
  int n_ = 0;
  std::vector<PauliString> images_;
};

// Named one- and two-qubit gate frames embedded in an n-qubit register.
CliffordTableau hadamard_tableau(int n_qubits, int qubit);
CliffordTableau phase_tableau(int n_qubits, int qubit);       // S: X -> Y
CliffordTableau sqrt_x_tableau(int n_qubits, int qubit);      // SX: Z -> -Y
CliffordTableau pauli_x_tableau(int n_qubits, int qubit);
CliffordTableau pauli_z_tableau(int n_qubits, int qubit);
CliffordTableau cnot_tableau(int n_qubits, int control, int target);
CliffordTableau swap_tableau(int n_qubits, int a, int b);

/// A gate name plus qubit operands, e.g. {"CX", {0, 1}} or {"H", {2}}.
/// Supported names: H, S, SX, X, Z, CX, SWAP.
struct Gate {
  std::string name;
  std::vector<int> qubits;
};

CliffordTableau gate_tableau(int n_qubits, const Gate& g);
Matrix gate_unitary(int n_qubits, const Gate& g);

/// Frame of the circuit as a whole: gates act left-to-right on states, so
/// the result is tableau(g_last) ∘ ... ∘ tableau(g_first).
CliffordTableau circuit_tableau(int n_qubits, const std::vector<Gate>& gates);
Matrix circuit_unitary(int n_qubits, const std::vector<Gate>& gates);

/// A circuit whose frame equals t (not gate-count optimal). Inverse of the
/// reduction it performs, so circuit_tableau(synthesize(t)) == t up to the
/// unobservable global phase.
std::vector<Gate> synthesize(const CliffordTableau& t);

/// Dense unitary U with U P U^dagger = t.conjugate(P) for all P, up to a
/// global phase. Requires n <= kMaxDenseQubits.
Matrix dense_unitary(const CliffordTableau& t);

}  // namespace ergo
