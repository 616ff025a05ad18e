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

#include <sstream>

#include "ergo/io.hpp"

using namespace ergo;
using ergo_test::random_state;

TEST_SUITE_BEGIN("io");

TEST_CASE("hamiltonian parsing with comments, blanks, and merging") {
  std::istringstream in(
      "# transverse field chain\n"
      "\n"
      "-1.0 ZZ\n"
      "0.25 XI   # trailing comment\n"
      "0.25 XI\n"
      "   0.5 IX\n");
  PauliOperator h = read_hamiltonian(in);
  CHECK(h.n_qubits() == 2);
  CHECK(h.num_terms() == 3);
  CHECK(h.coefficient(PauliString::from_word("ZZ").label()) == -1.0);
  CHECK(h.coefficient(PauliString::from_word("XI").label()) == doctest::Approx(0.5));
  CHECK(h.coefficient(PauliString::from_word("IX").label()) == doctest::Approx(0.5));
}

TEST_CASE("hamiltonian parse errors carry line numbers") {
  auto expect_error = [](const std::string& text, int line) {
    std::istringstream in(text);
    try {
      read_hamiltonian(in);
      FAIL("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect_error("-1.0 ZZ\n0.5 XIZ\n", 2);        // mismatched word length
  expect_error("abc ZZ\n", 1);                  // bad coefficient
  expect_error("1.0\n", 1);                     // missing word
  expect_error("1.0 ZZ extra\n", 1);            // trailing field
  expect_error("1.0 ZQ\n", 1);                  // bad letter
  expect_error("# nothing\n\n", 2);             // no terms at all
  expect_error("1.0 II\n", 1);                  // identity-only operator
}

TEST_CASE("identity terms are stripped but others survive") {
  std::istringstream in("3.0 II\n-1.0 ZZ\n");
  PauliOperator h = read_hamiltonian(in);
  CHECK(h.num_terms() == 1);
  CHECK(h.coefficient(PauliString::from_word("ZZ").label()) == -1.0);
}

TEST_CASE("hamiltonian write/read round trip is exact") {
  Rng rng(91);
  PauliOperator h = ergo_test::random_operator(3, 10, rng);
  std::ostringstream out;
  write_hamiltonian(out, h);
  std::istringstream in(out.str());
  PauliOperator back = read_hamiltonian(in);
  REQUIRE(back.num_terms() == h.num_terms());
  for (const auto& [label, coeff] : h.terms())
    CHECK(back.coefficient(label) == coeff);
}

TEST_CASE("state write/read round trip preserves amplitudes") {
  Rng rng(92);
  PureState psi = random_state(3, rng);
  std::ostringstream out;
  write_state(out, psi);
  std::istringstream in(out.str());
  PureState back = read_state(in);
  CHECK(back.n_qubits() == 3);
  CHECK((back.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("state parsing validates count, norm, and format") {
  {
    std::istringstream in("1.0 0.0\n0.0 0.0\n0.0 0.0\n");  // 3 amplitudes
    CHECK_THROWS_AS(read_state(in), ParseError);
  }
  {
    std::istringstream in("0.9 0.0\n0.0 0.0\n");  // badly unnormalized
    CHECK_THROWS_AS(read_state(in), ParseError);
  }
  {
    std::istringstream in("1.0 junk\n0.0 0.0\n");
    try {
      read_state(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
    }
  }
  {
    // tiny norm error inside tolerance is repaired exactly
    std::istringstream in("0.9999999 0.0\n0.0 0.0\n");
    PureState psi = read_state(in);
    CHECK(std::abs(psi.amplitudes()(0)) == doctest::Approx(1.0).epsilon(1e-12));
  }
  {
    std::istringstream in("");
    CHECK_THROWS_AS(read_state(in), ParseError);
  }
}

TEST_CASE("file wrappers reject missing paths") {
  CHECK_THROWS_AS(read_hamiltonian_file("/nonexistent/definitely_missing.txt"),
                  std::invalid_argument);
  CHECK_THROWS_AS(read_state_file("/nonexistent/definitely_missing.txt"),
                  std::invalid_argument);
}

TEST_SUITE_END();
