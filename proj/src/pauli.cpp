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

#include "ergo/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ergo {

namespace {

void check_n(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::invalid_argument("qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(n_qubits));
}

void check_sign(int sgn) {
  if (sgn != 1 && sgn != -1)
    throw std::invalid_argument("Pauli sign must be +1 or -1");
}

}  // namespace

PauliString::PauliString(int n_qubits, uint64_t x_mask, uint64_t z_mask, int sgn)
    : n(n_qubits), x(x_mask), z(z_mask), sign(sgn) {
  check_n(n_qubits);
  check_sign(sgn);
  uint64_t valid = (uint64_t{1} << n_qubits) - 1;
  if ((x_mask | z_mask) & ~valid)
    throw std::invalid_argument("Pauli mask has bits outside the register");
}

PauliString PauliString::identity(int n_qubits) {
  return PauliString(n_qubits, 0, 0, +1);
}

PauliString PauliString::from_word(const std::string& word, int sgn) {
  if (word.empty()) throw std::invalid_argument("empty Pauli word");
  int n_qubits = static_cast<int>(word.size());
  check_n(n_qubits);
  uint64_t x = 0;
  uint64_t z = 0;
  for (int q = 0; q < n_qubits; ++q) {
    uint64_t bit = qubit_bit(n_qubits, q);
    switch (word[q]) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      default:
        throw std::invalid_argument("invalid Pauli letter '" +
                                    std::string(1, word[q]) + "' in word \"" +
                                    word + "\"");
    }
  }
  return PauliString(n_qubits, x, z, sgn);
}

PauliString PauliString::from_label(int n_qubits, uint64_t label, int sgn) {
  check_n(n_qubits);
  uint64_t mask = (uint64_t{1} << n_qubits) - 1;
  if (label >> (2 * n_qubits))
    throw std::invalid_argument("Pauli label out of range");
  return PauliString(n_qubits, label >> n_qubits, label & mask, sgn);
}

PauliString PauliString::single(int n_qubits, int qubit, char op) {
  check_n(n_qubits);
  if (qubit < 0 || qubit >= n_qubits)
    throw std::invalid_argument("qubit index out of range");
  uint64_t bit = qubit_bit(n_qubits, qubit);
  switch (op) {
    case 'I':
      return PauliString(n_qubits, 0, 0);
    case 'X':
      return PauliString(n_qubits, bit, 0);
    case 'Y':
      return PauliString(n_qubits, bit, bit);
    case 'Z':
      return PauliString(n_qubits, 0, bit);
    default:
      throw std::invalid_argument("invalid Pauli letter");
  }
}

char PauliString::op_at(int qubit) const {
  uint64_t bit = qubit_bit(n, qubit);
  bool has_x = (x & bit) != 0;
  bool has_z = (z & bit) != 0;
  if (has_x && has_z) return 'Y';
  if (has_x) return 'X';
  if (has_z) return 'Z';
  return 'I';
}

std::string PauliString::word() const {
  std::string out(static_cast<std::size_t>(n), 'I');
  for (int q = 0; q < n; ++q) out[static_cast<std::size_t>(q)] = op_at(q);
  return out;
}

bool pauli_commutes(const PauliString& p, const PauliString& q) {
  if (p.n != q.n) throw std::invalid_argument("qubit count mismatch");
  return ((parity(p.x & q.z) ^ parity(p.z & q.x)) & 1) == 0;
}

std::pair<PauliString, int> pauli_product(const PauliString& p, const PauliString& q) {
  if (p.n != q.n) throw std::invalid_argument("qubit count mismatch");
  // Work in the plain X^x Z^z convention: P(x,z) = i^{|x&z|} X^x Z^z, and
  //   (X^x1 Z^z1)(X^x2 Z^z2) = (-1)^{|z1 & x2|} X^{x1^x2} Z^{z1^z2}.
  uint64_t x = p.x ^ q.x;
  uint64_t z = p.z ^ q.z;
  int k = std::popcount(p.x & p.z) + std::popcount(q.x & q.z) +
          2 * parity(p.z & q.x);
  // Convert the result back to Hermitian form: X^x Z^z = i^{-|x&z|} P(x,z).
  k -= std::popcount(x & z);
  if (p.sign < 0) k += 2;
  if (q.sign < 0) k += 2;
  return {PauliString(p.n, x, z, +1), ((k % 4) + 4) % 4};
}

PauliOperator::PauliOperator(int n_qubits) : n_(n_qubits) { check_n(n_qubits); }

PauliOperator::PauliOperator(int n_qubits, std::vector<Term> terms) : n_(n_qubits) {
  check_n(n_qubits);
  for (const auto& [label, coeff] : terms)
    add(PauliString::from_label(n_qubits, label), coeff);
}

PauliOperator PauliOperator::from_words(
    const std::vector<std::pair<std::string, double>>& terms) {
  if (terms.empty()) throw std::invalid_argument("no terms given");
  PauliOperator op(static_cast<int>(terms.front().first.size()));
  for (const auto& [word, coeff] : terms)
    op.add(PauliString::from_word(word), coeff);
  return op;
}

void PauliOperator::add(const PauliString& p, double coeff) {
  if (p.n != n_) throw std::invalid_argument("qubit count mismatch");
  if (p.is_identity())
    throw std::invalid_argument("identity terms are not representable; "
                                "strip the trace component first");
  double value = coeff * p.sign;
  if (value == 0.0) return;
  uint64_t label = p.label();
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), label,
      [](const Term& t, uint64_t l) { return t.first < l; });
  if (it != terms_.end() && it->first == label) {
    it->second += value;
    if (it->second == 0.0) terms_.erase(it);
  } else {
    terms_.insert(it, {label, value});
  }
}

PauliString PauliOperator::string_at(std::size_t k) const {
  return PauliString::from_label(n_, terms_.at(k).first);
}

double PauliOperator::coefficient(uint64_t label) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), label,
      [](const Term& t, uint64_t l) { return t.first < l; });
  return (it != terms_.end() && it->first == label) ? it->second : 0.0;
}

double PauliOperator::l1_norm() const {
  double sum = 0.0;
  for (const auto& [label, coeff] : terms_) sum += std::abs(coeff);
  return sum;
}

std::vector<double> PauliOperator::sorted_abs_coefficients() const {
  std::vector<double> out;
  out.reserve(terms_.size());
  for (const auto& [label, coeff] : terms_) out.push_back(std::abs(coeff));
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

PauliOperator PauliOperator::negated() const {
  PauliOperator out(n_);
  out.terms_ = terms_;
  for (auto& [label, coeff] : out.terms_) coeff = -coeff;
  return out;
}

}  // namespace ergo
