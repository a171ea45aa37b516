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

#include <random>
#include <string>

#include "sapprox/classify.hpp"
#include "sapprox/errors.hpp"
#include "sapprox/space_document.hpp"
#include "test_util.hpp"

using namespace sapprox;
using sapprox::testing::mask;
using sapprox::testing::random_atom_map;
using sapprox::testing::random_t;
using sapprox::testing::random_table;

namespace {

const char* kUnionCover = R"(# union cover
U: a
W: 1, 2
T:
  a = {1,2}
S: union_cover
)";

std::string error_of(const std::string& text) {
  try {
    parse_space(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

void check_round_trip(const SApproximationSpace& g) {
  const auto text = format_space(g);
  const auto back = parse_space(text);
  CHECK(back.u() == g.u());
  CHECK(back.w() == g.w());
  CHECK(back.t() == g.t());
  CHECK(back.verdicts() == g.verdicts());
  for (MaskBits a = 1; a <= full_bits(g.w().size()); ++a)
    for (MaskBits b = 0; b <= full_bits(g.w().size()); ++b) {
      if (b == 0 && !g.s().is_complement_extended()) continue;
      CHECK(back.s().eval_bits(a, b) == g.s().eval_bits(a, b));
    }
  CHECK(format_space(back) == text);
}

}  // namespace

TEST_CASE("parse the union cover example") {
  const auto g = parse_space(kUnionCover);
  CHECK(g.u().labels() == std::vector<std::string>{"a"});
  CHECK(g.w().labels() == std::vector<std::string>{"1", "2"});
  CHECK(g.t(0).is_full());
  CHECK(g.s().kind() == SRelationKind::kUnionCover);
  CHECK(g.verdicts().is_s_min);
  CHECK_FALSE(g.verdicts().is_smc);
}

TEST_CASE("parse atom maps and tables") {
  const auto g = parse_space(R"(U: x, y
W: p, q
T:
  x = {p}
  y = {q, p}
S: atom_map
  {p} -> p
  {q} -> q
  {q,p} -> q
)");
  CHECK(g.t(1).is_full());
  CHECK(g.s().atom_element(0b11) == 1);
  CHECK(g.verdicts().is_smc);
  const auto h = parse_space(R"(U: x
W: p
T:
  x = {p}
S: table
  {p} {p} = 1
)");
  CHECK_FALSE(h.s().is_complement_extended());
  CHECK(h.s().eval_bits(1, 1));
}

TEST_CASE("validation errors name the problem") {
  const std::string head = "U: x\nW: p, q\nT:\n  x = {p}\nS: atom_map\n";
  const auto missing = error_of(head + "  {p} -> p\n  {q} -> q\n");
  CHECK(missing.find("{p,q}") != std::string::npos);
  CHECK_THROWS_AS(parse_space(head + "  {p} -> p\n  {q} -> q\n"), ValidationError);
  CHECK_THROWS_AS(parse_space("U: x\nW: p\nT:\n  x = {r}\nS: inclusion\n"), ValidationError);
  CHECK_THROWS_AS(parse_space("U: x\nW: p\nT:\n  x = {}\nS: inclusion\n"), ValidationError);
  CHECK_THROWS_AS(parse_space("U: x, y\nW: p\nT:\n  x = {p}\nS: inclusion\n"), ValidationError);
  CHECK_THROWS_AS(parse_space("U: x\nW: p\nT:\n  x = {p}\n  x = {p}\nS: inclusion\n"), ValidationError);
  CHECK_THROWS_AS(parse_space("U: x, x\nW: p\nT:\n  x = {p}\nS: inclusion\n"), ValidationError);
  CHECK_THROWS_AS(parse_space("U: x\nW: p\nT:\n  x = {p}\nS: mystery\n"), ParseError);
  CHECK_THROWS_AS(parse_space(head + "  {p} -> p\n  {q} -> q\n  {p,q} -> r\n"), ValidationError);
  CHECK_THROWS_AS(parse_space(head + "  {p} -> p\n  {p} -> p\n  {q} -> q\n  {p,q} -> p\n"), ValidationError);
  CHECK_THROWS_AS(parse_space("U: x\nW: p\nT:\n  x = {p}\nS: table\n  {p} {p} = 1\nU: y\n"), ParseError);
}

TEST_CASE("empty column all or nothing") {
  const std::string head = "U: x\nW: p, q\nT:\n  x = {p}\nS: table\n";
  std::string partial;
  for (const char* a : {"{p}", "{q}", "{p,q}"})
    for (const char* b : {"{p}", "{q}", "{p,q}"}) partial += std::string("  ") + a + " " + b + " = 1\n";
  CHECK_NOTHROW(parse_space(head + partial));
  CHECK_THROWS_AS(parse_space(head + partial + "  {p} {} = 0\n"), ValidationError);
}

TEST_CASE("syntax errors carry a line number") {
  const auto e1 = error_of("U: x\nW: p\nT:\n  x : {p}\nS: inclusion\n");
  CHECK(e1.rfind("line 4:", 0) == 0);
  CHECK_THROWS_AS(parse_space("U: x\nW: p\nT:\n  x : {p}\nS: inclusion\n"), ParseError);
  CHECK_THROWS_AS(parse_space("W: p\nU: x\nT:\n  x = {p}\nS: inclusion\n"), ParseError);
  CHECK_THROWS_AS(parse_space("U: x\nW: p\nT:\n  x = {p}\n"), ParseError);
  CHECK_THROWS_AS(parse_space("U: x\nW: p\nT:\n  x = {p\nS: inclusion\n"), ParseError);
  CHECK_THROWS_AS(parse_space("U: x-1\nW: p\nT:\n  x-1 = {p}\nS: inclusion\n"), ParseError);
  CHECK_THROWS_AS(parse_space("U: x\nW: p\nT:\n  x = {p}\nS: table\n  {p} {p} = 2\n"), ParseError);
}

TEST_CASE("capacity errors") {
  std::string big = "U: x\nW: ";
  for (int i = 0; i < 21; ++i) big += (i ? ", w" : "w") + std::to_string(i);
  big += "\nT:\n  x = {w0}\nS: inclusion\n";
  CHECK_THROWS_AS(parse_space(big), CapacityError);
  std::string wide = "U: x\nW: ";
  for (int i = 0; i < 11; ++i) wide += (i ? ", w" : "w") + std::to_string(i);
  wide += "\nT:\n  x = {w0}\nS: table\n";
  CHECK_THROWS_AS(parse_space(wide), CapacityError);
}

TEST_CASE("comments and blank lines are ignored") {
  const auto g = parse_space("# head\n\nU: a   # trailing\nW: 1, 2\n\nT:\n  a = {1,2}\n# between\nS: union_cover\n\n");
  CHECK(g.verdicts().is_s_min);
}

TEST_CASE("round trip through the text format") {
  check_round_trip(parse_space(kUnionCover));
  std::mt19937 rng(515);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const std::size_t m = 1 + trial % 4;
    SRelationSpec s = SRelationSpec::inclusion(n);
    switch (trial % 4) {
      case 0: s = random_atom_map(rng, n); break;
      case 1: s = random_table(rng, n, true); break;
      case 2: s = random_table(rng, n, false); break;
      default: s = trial % 8 == 3 ? SRelationSpec::inclusion(n) : SRelationSpec::union_cover(n); break;
    }
    check_round_trip(SApproximationSpace(Universe::indexed(m, "u"), Universe::indexed(n, "w"),
                                         random_t(rng, m, n), s));
  }
  for (const auto& p : enumerate_partitions(5, 3)) check_round_trip(canonical_space(p, 5, 3));
}

TEST_CASE("format is deterministic") {
  const auto g = canonical_space(IntegerPartition({2, 1}, 3), 3, 3);
  CHECK(format_space(g) == format_space(canonical_space(IntegerPartition({2, 1}, 3), 3, 3)));
  const auto text = format_space(parse_space(kUnionCover));
  CHECK(text == "U: a\nW: 1, 2\nT:\n  a = {1,2}\nS: union_cover\n");
}
