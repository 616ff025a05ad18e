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

#include <map>
#include <set>
#include <vector>

#include "ergo/clifford_group.hpp"

using namespace ergo;

namespace {

// Hash of the full conjugation action on every nonidentity string, including
// signs. Distinct hashes certify distinct group elements (modulo phase).
uint64_t action_hash(const CliffordTableau& t) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  int n = t.n_qubits();
  for (uint64_t label = 1; label < (uint64_t{1} << (2 * n)); ++label) {
    PauliString q = t.conjugate(PauliString::from_label(n, label));
    mix(q.label());
    mix(q.sign == 1 ? 0 : 1);
  }
  return h;
}

}  // namespace

TEST_SUITE_BEGIN("clifford_group");

TEST_CASE("group orders") {
  CHECK(symplectic_count(1) == 6);
  CHECK(symplectic_count(2) == 720);
  CHECK(symplectic_count(3) == 1451520);
  CHECK(clifford_count(1) == 24);
  CHECK(clifford_count(2) == 11520);
  CHECK(clifford_count(3) == 92897280ull);
  CHECK_THROWS_AS(symplectic_count(6), std::invalid_argument);
  CHECK_THROWS_AS(clifford_count(5), std::invalid_argument);
}

TEST_CASE("single-qubit enumeration: 24 valid, distinct actions") {
  std::set<uint64_t> hashes;
  uint64_t expected_index = 0;
  for_each_clifford(1, [&](uint64_t index, const CliffordTableau& t) {
    CHECK(index == expected_index++);
    CHECK(t.symplectic_check());
    hashes.insert(action_hash(t));
  });
  CHECK(expected_index == 24);
  CHECK(hashes.size() == 24);
}

TEST_CASE("two-qubit enumeration: 11520 valid, distinct actions") {
  std::set<uint64_t> hashes;
  uint64_t count = 0;
  for_each_clifford(2, [&](uint64_t index, const CliffordTableau& t) {
    REQUIRE(index == count);
    ++count;
    if (count % 7 == 0) REQUIRE(t.symplectic_check());
    hashes.insert(action_hash(t));
  });
  CHECK(count == 11520);
  CHECK(hashes.size() == 11520);
}

TEST_CASE("indexing is a bijection onto the enumeration order") {
  for_each_clifford(1, [&](uint64_t index, const CliffordTableau& t) {
    CHECK(clifford_from_index(1, index) == t);
  });
  Rng rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    uint64_t index = rng.below(symplectic_count(2));
    CliffordTableau t = symplectic_from_index(2, index);
    CHECK(t.symplectic_check());
    // signs of a sign-free frame are all +1
    for (const PauliString& im : t.images()) CHECK(im.sign == 1);
  }
  // spot-check the sign block: index s*16 + bits
  CliffordTableau base = symplectic_from_index(2, 137);
  CHECK(clifford_from_index(2, 137 * 16 + 0b0110) == base.with_signs(0b0110));
  CHECK_THROWS_AS(clifford_from_index(1, 24), std::out_of_range);
  CHECK_THROWS_AS(symplectic_from_index(2, 720), std::out_of_range);
}

TEST_CASE("three-qubit enumeration covers the symplectic group") {
  // Counting all 92,897,280 signed frames is done in the acceptance run for
  // n <= 2; here just verify the n = 3 sign-free block structure.
  std::set<uint64_t> sample;
  uint64_t count = 0;
  for_each_symplectic(3, [&](uint64_t index, const CliffordTableau& t) {
    if (index % 10007 == 0) {
      REQUIRE(t.symplectic_check());
      sample.insert(t.frame_hash());
    }
    ++count;
  });
  CHECK(count == 1451520);
  CHECK(sample.size() == (1451520 / 10007) + 1);
}

TEST_CASE("random_clifford is deterministic per seed and valid for large n") {
  Rng a(7), b(7), c(8);
  CliffordTableau ta = random_clifford(4, a);
  CliffordTableau tb = random_clifford(4, b);
  CliffordTableau tc = random_clifford(4, c);
  CHECK(ta == tb);
  CHECK(ta != tc);
  for (int n : {1, 5, 12, 32}) {
    Rng rng(n);
    CHECK(random_clifford(n, rng).symplectic_check());
  }
}

TEST_CASE("random_clifford sampling is close to uniform over n = 1 actions") {
  std::map<uint64_t, int> counts;
  Rng rng(52);
  const int samples = 24000;
  for (int k = 0; k < samples; ++k) counts[action_hash(random_clifford(1, rng))]++;
  REQUIRE(counts.size() == 24);
  for (const auto& [hash, count] : counts) {
    CHECK(count > 1000 - 160);  // 5 sigma around the uniform mean
    CHECK(count < 1000 + 160);
  }
}

TEST_CASE("random_clifford hits no two-qubit action too often") {
  std::map<uint64_t, int> counts;
  Rng rng(53);
  const int samples = 100000;
  for (int k = 0; k < samples; ++k) counts[action_hash(random_clifford(2, rng))]++;
  int max_count = 0;
  for (const auto& [hash, count] : counts) max_count = std::max(max_count, count);
  // uniform mean is samples / 11520 ~ 8.7; a 5x excess would signal bias
  CHECK(max_count < 5 * samples / 11520);
}

TEST_SUITE_END();
