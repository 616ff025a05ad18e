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

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ergo {

/// Hard cap for the packed binary-symplectic encoding used below.
inline constexpr int kMaxQubits = 32;

/// Dense-vector / dense-matrix routines refuse registers larger than this.
inline constexpr int kMaxDenseQubits = 10;

// Bit conventions, used consistently everywhere:
//  * qubit 0 is the leftmost character of a Pauli word and the most
//    significant bit of a computational-basis index;
//  * masks are index-aligned, i.e. qubit j occupies bit (n-1-j), so applying
//    a string to an amplitude vector needs no bit reversal;
//  * a string is labeled by the integer (x << n) | z.
inline uint64_t qubit_bit(int n_qubits, int qubit) {
  return uint64_t{1} << (n_qubits - 1 - qubit);
}

inline int parity(uint64_t mask) { return std::popcount(mask) & 1; }

/// Signed n-qubit Pauli string sign * P(x, z) in the Hermitian convention
///   P(x, z) = i^{|x & z|} X^x Z^z,
/// where each Y factor carries its own factor of i, so P is Hermitian and
/// sign is restricted to +1 or -1.
struct PauliString {
  int n = 0;
  uint64_t x = 0;
  uint64_t z = 0;
  int sign = +1;

  PauliString() = default;
  PauliString(int n_qubits, uint64_t x_mask, uint64_t z_mask, int sgn = +1);

  static PauliString identity(int n_qubits);
  /// Parse e.g. "XIZY"; the word length sets the qubit count.
  static PauliString from_word(const std::string& word, int sgn = +1);
  static PauliString from_label(int n_qubits, uint64_t label, int sgn = +1);
  /// Single-qubit factor: op is one of 'I', 'X', 'Y', 'Z'.
  static PauliString single(int n_qubits, int qubit, char op);

  uint64_t label() const { return (x << n) | z; }
  char op_at(int qubit) const;
  std::string word() const;
  int weight() const { return std::popcount(x | z); }
  int y_count() const { return std::popcount(x & z); }
  bool is_identity() const { return x == 0 && z == 0; }

  bool operator==(const PauliString&) const = default;
};

/// Two strings commute iff their symplectic product vanishes.
bool pauli_commutes(const PauliString& p, const PauliString& q);

/// p * q written as i^k R with R an unsigned (sign = +1) string; returns
/// {R, k mod 4}. The input signs are folded into k.
std::pair<PauliString, int> pauli_product(const PauliString& p, const PauliString& q);

/// Sparse real combination of non-identity Pauli strings; the natural
/// container for a traceless Hermitian observable. Terms are keyed by label,
/// kept sorted, and merged on insertion; exact zeros are dropped.
class PauliOperator {
 public:
  /// (label, coefficient)
  using Term = std::pair<uint64_t, double>;

  explicit PauliOperator(int n_qubits);
  PauliOperator(int n_qubits, std::vector<Term> terms);

  /// Convenience constructor from words, e.g. {{"ZZ", -1.0}, {"XI", 0.5}}.
  static PauliOperator from_words(
      const std::vector<std::pair<std::string, double>>& terms);

  /// Adds coeff * p (the string's sign is folded into the coefficient).
  /// Identity terms are rejected.
  void add(const PauliString& p, double coeff);

  int n_qubits() const { return n_; }
  std::size_t num_terms() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  PauliString string_at(std::size_t k) const;

  /// Coefficient of the given label, 0 if absent.
  double coefficient(uint64_t label) const;

  /// Sum of absolute coefficients.
  double l1_norm() const;

  /// Absolute coefficients sorted in nonincreasing order.
  std::vector<double> sorted_abs_coefficients() const;

  PauliOperator negated() const;

 private:
  int n_;
  std::vector<Term> terms_;
};

}  // namespace ergo
