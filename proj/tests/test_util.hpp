// Copyright 2026 The sapprox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small helpers shared by the unit tests: seeded generators and subset
// shorthands. Nothing here is used as an oracle for the code it tests.

#ifndef SAPPROX_TESTS_TEST_UTIL_HPP_
#define SAPPROX_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "sapprox/approximation.hpp"
#include "sapprox/core_sets.hpp"
#include "sapprox/srelation.hpp"

namespace sapprox::testing {

inline SubsetMask mask(std::initializer_list<std::size_t> idx, std::size_t n) {
  MaskBits bits = 0;
  for (auto i : idx) bits |= MaskBits{1} << i;
  return {bits, n};
}

// Uniform random nonempty T map from m points into P*(W), |W| = n.
inline std::vector<SubsetMask> random_t(std::mt19937& rng, std::size_t m, std::size_t n) {
  std::uniform_int_distribution<MaskBits> pick(1, full_bits(n));
  std::vector<SubsetMask> t;
  for (std::size_t i = 0; i < m; ++i) t.emplace_back(pick(rng), n);
  return t;
}

inline SRelationSpec random_table(std::mt19937& rng, std::size_t n, bool with_empty, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  std::vector<std::uint8_t> cells(std::size_t{1} << (2 * n), 0);
  for (MaskBits a = 1; a <= full_bits(n); ++a) {
    for (MaskBits b = with_empty ? 0 : 1; b <= full_bits(n); ++b) {
      cells[(std::size_t{a} << n) | b] = coin(rng) ? 1 : 0;
    }
  }
  return SRelationSpec::truth_table(n, std::move(cells), with_empty);
}

inline SRelationSpec random_atom_map(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::uint8_t> atom_of(std::size_t{1} << n, 0);
  for (MaskBits a = 1; a <= full_bits(n); ++a) atom_of[a] = static_cast<std::uint8_t>(pick(rng));
  return SRelationSpec::unary_atom_map(n, std::move(atom_of));
}

}  // namespace sapprox::testing

#endif  // SAPPROX_TESTS_TEST_UTIL_HPP_
