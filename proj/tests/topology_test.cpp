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

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "sapprox/errors.hpp"
#include "sapprox/topology.hpp"
#include "test_util.hpp"

using namespace sapprox;
using sapprox::testing::mask;
using sapprox::testing::random_atom_map;
using sapprox::testing::random_t;

namespace {

SApproximationSpace atom_space(std::vector<SubsetMask> t, std::vector<std::uint8_t> atom_of, std::size_t n) {
  const std::size_t m = t.size();
  return SApproximationSpace(Universe::indexed(m, "u"), Universe::indexed(n, "w"), std::move(t),
                             SRelationSpec::unary_atom_map(n, std::move(atom_of)));
}

bool naive_axioms(const std::vector<SubsetMask>& opens, std::size_t n) {
  std::set<MaskBits> s;
  for (const auto& o : opens) s.insert(o.bits());
  if (!s.count(0) || !s.count(full_bits(n))) return false;
  for (auto a : s)
    for (auto b : s)
      if (!s.count(a | b) || !s.count(a & b)) return false;
  return true;
}

}  // namespace

TEST_CASE("build_topology examples") {
  const auto one = atom_space({mask({0}, 1)}, {0, 0}, 1);
  CHECK(build_topology(one).opens() == std::vector<SubsetMask>{SubsetMask::empty(1), SubsetMask::full(1)});

  const auto two = atom_space({mask({0}, 2), mask({1}, 2)}, {0, 0, 1, 0}, 2);
  const auto t = build_topology(two);
  CHECK(t.opens() == std::vector<SubsetMask>{mask({}, 2), mask({0}, 2), mask({1}, 2), mask({0, 1}, 2)});
  CHECK(t.axioms_verified());
  CHECK(t.clopen_verified());
  CHECK(minimal_open_containing(t, 0) == mask({0}, 2));

  for (std::uint8_t a3 : {0, 1}) {
    const auto shared = atom_space({SubsetMask::full(2), SubsetMask::full(2)}, {0, 0, 1, a3}, 2);
    const auto ts = build_topology(shared);
    CHECK(ts.opens() == std::vector<SubsetMask>{SubsetMask::empty(2), SubsetMask::full(2)});
    CHECK(minimal_open_containing(ts, 1).is_full());
  }
}

TEST_CASE("build_topology rejects spaces outside S_MC") {
  const SApproximationSpace g(Universe({"a"}), Universe({"1", "2"}), {SubsetMask::full(2)},
                              SRelationSpec::union_cover(2));
  CHECK_THROWS_AS(build_topology(g), ContractViolation);
  CHECK_THROWS_AS(upper_family(g), DomainError);
}

TEST_CASE("axioms and clopenness on hand-written families") {
  const auto u = Universe::indexed(2, "u");
  CHECK(verify_topology_axioms({SubsetMask::empty(2), SubsetMask::full(2)}, 2));
  CHECK(verify_topology_axioms({SubsetMask::empty(2), mask({0}, 2), SubsetMask::full(2)}, 2));
  CHECK_FALSE(verify_topology_axioms({SubsetMask::empty(2), mask({0}, 2), mask({1}, 2)}, 2));

  const FiniteTopology sierpinski(u, {SubsetMask::empty(2), mask({0}, 2), SubsetMask::full(2)});
  CHECK(sierpinski.axioms_verified());
  CHECK_FALSE(is_clopen_topology(sierpinski));
  CHECK(minimal_open_containing(sierpinski, 1).is_full());
  const FiniteTopology indiscrete(u, {SubsetMask::full(2), SubsetMask::empty(2), SubsetMask::full(2)});
  CHECK(indiscrete.opens().size() == 2);
  CHECK(is_clopen_topology(indiscrete));

  const FiniteTopology broken(u, {SubsetMask::empty(2), mask({0}, 2), mask({1}, 2)});
  CHECK_FALSE(broken.axioms_verified());
  CHECK_THROWS_AS(is_clopen_topology(broken), ContractViolation);
  CHECK_THROWS_AS(minimal_open_containing(broken, 0), ContractViolation);
}

TEST_CASE("discrete topology has singleton minimal opens") {
  std::vector<SubsetMask> all;
  for (auto x : enumerate_subsets(3, true)) all.push_back(x);
  const FiniteTopology discrete(Universe::indexed(3, "u"), all);
  for (std::size_t i = 0; i < 3; ++i) CHECK(minimal_open_containing(discrete, i) == SubsetMask::singleton(i, 3));
}

TEST_CASE("random S_MC spaces give clopen topologies with matching families") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t m = 1 + trial % 6;
    const SApproximationSpace g(Universe::indexed(m, "u"), Universe::indexed(n, "w"), random_t(rng, m, n),
                                random_atom_map(rng, n));
    const auto t = build_topology(g);
    CHECK(naive_axioms(t.opens(), m));
    CHECK(is_clopen_topology(t));
    auto up = upper_family(g);
    auto low = lower_family(g);
    std::sort(up.begin(), up.end());
    std::sort(low.begin(), low.end());
    up.erase(std::unique(up.begin(), up.end()), up.end());
    low.erase(std::unique(low.begin(), low.end()), low.end());
    CHECK(up == low);
    CHECK(up == t.opens());
    // minimal opens of a clopen topology partition the points
    MaskBits covered = 0;
    for (std::size_t x = 0; x < m; ++x) {
      const auto b = minimal_open_containing(t, x);
      CHECK(b.contains(x));
      for (std::size_t y = 0; y < m; ++y) {
        const auto c = minimal_open_containing(t, y);
        CHECK((b == c || (b & c).is_empty()));
      }
      covered |= b.bits();
    }
    CHECK(covered == full_bits(m));
  }
}

TEST_CASE("degree profile example") {
  // both points have atom w1
  const auto g = atom_space({mask({0}, 2), mask({0, 1}, 2)}, {0, 0, 1, 0}, 2);
  const auto p = degree_profile(g);
  CHECK(p.degree == std::vector<std::size_t>{2, 0});
  CHECK(p.wi_sizes == std::map<std::size_t, std::size_t>{{0, 1}, {2, 1}});
  CHECK(p.signature == std::vector<std::size_t>{0, 2});
  CHECK(p == profile_from_degrees({2, 0}));
}

TEST_CASE("degree profile invariants on random S_MC spaces") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const std::size_t m = 1 + trial % 7;
    const SApproximationSpace g(Universe::indexed(m, "u"), Universe::indexed(n, "w"), random_t(rng, m, n),
                                random_atom_map(rng, n));
    const auto p = degree_profile(g);
    CHECK(std::accumulate(p.degree.begin(), p.degree.end(), std::size_t{0}) == m);
    std::size_t weighted = 0, count = 0;
    for (const auto& [i, size] : p.wi_sizes) {
      CHECK(size > 0);
      weighted += i * size;
      count += size;
    }
    CHECK(weighted == m);
    CHECK(count == n);
    for (std::size_t w = 0; w < n; ++w) {
      CHECK(p.degree[w] == s_upper(g, SubsetMask::singleton(w, n)).cardinality());
    }
    CHECK(std::is_sorted(p.signature.begin(), p.signature.end()));
  }
}

TEST_CASE("degree profile needs S_MC") {
  const SApproximationSpace g(Universe({"a"}), Universe({"1", "2"}), {SubsetMask::full(2)},
                              SRelationSpec::inclusion(2));
  CHECK_THROWS_AS(degree_profile(g), ContractViolation);
}
