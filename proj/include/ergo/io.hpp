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

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ergo/pauli.hpp"
#include "ergo/state.hpp"

namespace ergo {

/// Input-file error carrying the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Hamiltonian text format: one term per line, `<coefficient> <pauli-word>`
/// (e.g. `-1.0 ZZ`); `#` starts a comment; blank lines are skipped. All
/// words must have the same length. Identity words are stripped with a
/// warning on stderr (constant energy shift).
PauliOperator read_hamiltonian(std::istream& in);
PauliOperator read_hamiltonian_file(const std::string& path);

/// State text format: one basis amplitude per line, `<re> <im>`, 2^N lines,
/// index order following the bit convention (qubit 0 = most significant
/// bit). The vector must be normalized to within 1e-6; it is renormalized
/// exactly on load so text round-tripping cannot fail the strict in-memory
/// norm check.
PureState read_state(std::istream& in);
PureState read_state_file(const std::string& path);

void write_hamiltonian(std::ostream& out, const PauliOperator& h);
void write_state(std::ostream& out, const PureState& state);

}  // namespace ergo
