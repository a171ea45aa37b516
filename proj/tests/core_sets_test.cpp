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

#include <algorithm>
#include <set>

#include "sapprox/core_sets.hpp"
#include "sapprox/errors.hpp"
#include "test_util.hpp"

using namespace sapprox;
using sapprox::testing::mask;

TEST_CASE("subset basics") {
  const auto x = mask({0, 2}, 3);
  CHECK(x.contains(0));
  CHECK_FALSE(x.contains(1));
  CHECK_FALSE(x.contains(7));
  CHECK(x.cardinality() == 2);
  CHECK(x.complement() == mask({1}, 3));
  CHECK(x.elements() == std::vector<std::size_t>{0, 2});
  CHECK(SubsetMask::empty(3).is_empty());
  CHECK(SubsetMask::full(3).is_full());
  CHECK(SubsetMask::singleton(1, 3) == mask({1}, 3));
  CHECK((x | mask({1}, 3)).is_full());
  CHECK((x & mask({2}, 3)) == mask({2}, 3));
  CHECK((x - mask({2}, 3)) == mask({0}, 3));
  CHECK(is_subset(mask({2}, 3), x));
  CHECK_FALSE(is_subset(x, mask({2}, 3)));
}

TEST_CASE("subset validation") {
  CHECK_THROWS_AS(SubsetMask(0b1000, 3), DomainError);
  CHECK_THROWS_AS(SubsetMask(0, 21), CapacityError);
  CHECK_THROWS_AS(SubsetMask::singleton(3, 3), DomainError);
  CHECK_THROWS_AS(mask({0}, 2) | mask({0}, 3), DomainError);
  CHECK_THROWS_AS(is_subset(mask({0}, 2), mask({0}, 3)), DomainError);
}

TEST_CASE("universe labels") {
  Universe u({"a", "b", "c"});
  CHECK(u.size() == 3);
  CHECK(u.index_of("b") == 1);
  CHECK_FALSE(u.index_of("z").has_value());
  CHECK(format_subset(u, mask({0, 2}, 3)) == "{a,c}");
  CHECK(format_subset(u, SubsetMask::empty(3)) == "{}");
  CHECK(Universe::indexed(2, "w").labels() == std::vector<std::string>{"w1", "w2"});
  CHECK(Universe::indexed(2, "w") == Universe({"w1", "w2"}));
  CHECK_THROWS_AS(Universe({"a", "a"}), DomainError);
  CHECK_THROWS_AS(Universe(std::vector<std::string>{}), CapacityError);
  CHECK_THROWS_AS(Universe::indexed(21, "x"), CapacityError);
}

TEST_CASE("enumeration counts and order") {
  for (std::size_t n = 0; n <= 10; ++n) {
    std::size_t with = 0, without = 0;
    MaskBits prev = 0;
    bool ordered = true;
    for (auto x : enumerate_subsets(n, true)) {
      if (with > 0 && x.bits() <= prev) ordered = false;
      prev = x.bits();
      ++with;
    }
    for (auto x : enumerate_subsets(n, false)) {
      CHECK_FALSE(x.is_empty());
      ++without;
    }
    CHECK(with == (std::size_t{1} << n));
    CHECK(without == with - 1);
    CHECK(ordered);
  }
  CHECK_THROWS_AS(enumerate_subsets(21, true), CapacityError);
}

TEST_CASE("cardinality order is a permutation of the nonempty subsets sorted by size") {
  CHECK(subsets_by_cardinality(0).empty());
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto& order = subsets_by_cardinality(n);
    REQUIRE(order.size() == (std::size_t{1} << n) - 1);
    std::set<MaskBits> seen(order.begin(), order.end());
    CHECK(seen.size() == order.size());
    CHECK(std::is_sorted(order.begin(), order.end(), [](MaskBits a, MaskBits b) {
      return std::popcount(a) < std::popcount(b);
    }));
  }
}

TEST_CASE("de Morgan and complement involution over |W| <= 4") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (auto a : enumerate_subsets(n, true)) {
      CHECK(a.complement().complement() == a);
      for (auto b : enumerate_subsets(n, true)) {
        CHECK((a | b).complement() == (a.complement() & b.complement()));
        CHECK((a & b).complement() == (a.complement() | b.complement()));
        CHECK(is_subset(a, b) == is_subset(b.complement(), a.complement()));
      }
    }
  }
}
