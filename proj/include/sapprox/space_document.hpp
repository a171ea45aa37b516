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

#ifndef SAPPROX_SPACE_DOCUMENT_HPP_
#define SAPPROX_SPACE_DOCUMENT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sapprox/approximation.hpp"

namespace sapprox {

// Syntax-level view of a space file. Subsets are label lists exactly as
// written; semantic checks happen in build_space.
struct SpaceDocument {
  struct Subset {
    std::vector<std::string> labels;
    std::size_t line = 0;
  };
  struct TEntry {
    std::string point;
    Subset image;
    std::size_t line = 0;
  };
  struct AtomEntry {
    Subset left;
    std::string atom;
    std::size_t line = 0;
  };
  struct TableEntry {
    Subset left;
    Subset right;
    int value = 0;
    std::size_t line = 0;
  };

  std::vector<std::string> universe_u;
  std::vector<std::string> universe_w;
  std::vector<TEntry> t_map;
  std::string s_kind;  // inclusion | union_cover | atom_map | table
  std::size_t s_line = 0;
  std::vector<AtomEntry> atom_entries;
  std::vector<TableEntry> table_entries;
};

// ParseError with a "line N:" prefix on malformed syntax.
SpaceDocument parse_document(std::string_view text);

// ValidationError on broken invariants (unknown labels, T(u) empty or
// outside W, missing or duplicate table/atom entries); CapacityError when a
// universe exceeds the cap.
SApproximationSpace build_space(const SpaceDocument& doc);

SApproximationSpace parse_space(std::string_view text);

// Canonical text: labels in universe order, entries in numeric mask order.
// parse_space(format_space(g)) reproduces g.
std::string format_space(const SApproximationSpace& g);

}  // namespace sapprox

#endif  // SAPPROX_SPACE_DOCUMENT_HPP_
