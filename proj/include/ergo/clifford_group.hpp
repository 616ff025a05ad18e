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
#include <functional>

#include "ergo/rng.hpp"
#include "ergo/tableau.hpp"

namespace ergo {

/// Exhaustive enumeration is limited to this many qubits; beyond it the
/// group is astronomically large and only sampling makes sense.
inline constexpr int kMaxEnumQubits = 3;

/// Number of sign-free frames, |Sp(2n, 2)| = prod_{k=1..n} (4^k - 1) 2^{2k-1}.
/// 6, 720, 1451520 for n = 1, 2, 3. Overflows uint64 beyond n = 5.
uint64_t symplectic_count(int n_qubits);

/// Number of distinct frame actions, symplectic_count * 4^n: 24, 11520,
/// 92897280 for n = 1, 2, 3. One per Clifford unitary modulo global phase.
/// Overflows uint64 beyond n = 4.
uint64_t clifford_count(int n_qubits);

/// Sign-free frame for index in [0, symplectic_count(n)). The decoding is a
/// fixed mixed-radix scheme: per qubit pair, first the image of X, then the
/// image of Z among the candidates that complete a symplectic pair.
CliffordTableau symplectic_from_index(int n_qubits, uint64_t index);

/// Frame for index in [0, clifford_count(n)): symplectic part index / 4^n,
/// sign bits index % 4^n applied to the generator images in storage order.
CliffordTableau clifford_from_index(int n_qubits, uint64_t index);

/// Calls fn(index, frame) for every sign-free frame, in index order.
void for_each_symplectic(int n_qubits,
                         const std::function<void(uint64_t, const CliffordTableau&)>& fn);

/// Calls fn(index, frame) for every frame action including signs.
void for_each_clifford(int n_qubits,
                       const std::function<void(uint64_t, const CliffordTableau&)>& fn);

/// Uniformly random frame action (uniform over the Clifford group modulo
/// global phase). Works for any n up to kMaxQubits; draws per-pair indices
/// instead of one global index, so no overflow for large n.
CliffordTableau random_clifford(int n_qubits, Rng& rng);

}  // namespace ergo
