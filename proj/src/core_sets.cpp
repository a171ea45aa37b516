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

#include "sapprox/core_sets.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <unordered_set>

#include "sapprox/errors.hpp"

namespace sapprox {

namespace {

void check_capacity(std::size_t n) {
  if (n > kMaxUniverseSize) {
    throw CapacityError("universe of " + std::to_string(n) + " elements exceeds the cap of " +
                        std::to_string(kMaxUniverseSize));
  }
}

void check_same_universe(const SubsetMask& a, const SubsetMask& b) {
  if (a.universe_size() != b.universe_size()) {
    throw DomainError("subset masks over universes of size " + std::to_string(a.universe_size()) +
                      " and " + std::to_string(b.universe_size()) + " cannot be combined");
  }
}

}  // namespace

Universe::Universe(std::vector<std::string> labels)
    : labels_(std::make_shared<const std::vector<std::string>>(std::move(labels))) {
  if (labels_->empty()) throw CapacityError("universe must have at least one element");
  check_capacity(labels_->size());
  std::unordered_set<std::string> seen;
  for (const auto& label : *labels_) {
    if (!seen.insert(label).second) throw DomainError("duplicate universe label '" + label + "'");
  }
}

Universe Universe::indexed(std::size_t size, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::size_t i = 1; i <= size; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return Universe(std::move(labels));
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
  auto it = std::find(labels_->begin(), labels_->end(), label);
  if (it == labels_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_->begin());
}

SubsetMask::SubsetMask(MaskBits bits, std::size_t universe_size)
    : bits_(bits), size_(static_cast<std::uint8_t>(universe_size)) {
  check_capacity(universe_size);
  if ((bits & ~full_bits(universe_size)) != 0) {
    throw DomainError("subset mask has bits outside a universe of size " + std::to_string(universe_size));
  }
}

SubsetMask SubsetMask::singleton(std::size_t index, std::size_t universe_size) {
  if (index >= universe_size) throw DomainError("element index out of range");
  return {MaskBits{1} << index, universe_size};
}

std::vector<std::size_t> SubsetMask::elements() const {
  std::vector<std::size_t> out;
  out.reserve(cardinality());
  for (MaskBits b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

SubsetMask operator|(const SubsetMask& a, const SubsetMask& b) {
  check_same_universe(a, b);
  return {a.bits_ | b.bits_, a.size_, SubsetMask::Unchecked{}};
}

SubsetMask operator&(const SubsetMask& a, const SubsetMask& b) {
  check_same_universe(a, b);
  return {a.bits_ & b.bits_, a.size_, SubsetMask::Unchecked{}};
}

SubsetMask operator-(const SubsetMask& a, const SubsetMask& b) {
  check_same_universe(a, b);
  return {a.bits_ & ~b.bits_, a.size_, SubsetMask::Unchecked{}};
}

bool is_subset(const SubsetMask& a, const SubsetMask& b) {
  check_same_universe(a, b);
  return (a.bits() & ~b.bits()) == 0;
}

SubsetRange enumerate_subsets(std::size_t universe_size, bool include_empty) {
  check_capacity(universe_size);
  return SubsetRange(universe_size, include_empty);
}

const std::vector<MaskBits>& subsets_by_cardinality(std::size_t universe_size) {
  check_capacity(universe_size);
  static std::array<std::once_flag, kMaxUniverseSize + 1> once;
  static std::array<std::vector<MaskBits>, kMaxUniverseSize + 1> orders;
  std::call_once(once[universe_size], [universe_size] {
    auto& out = orders[universe_size];
    out.reserve(full_bits(universe_size));
    for (MaskBits x = 1; x <= full_bits(universe_size); ++x) out.push_back(x);
    std::stable_sort(out.begin(), out.end(),
                     [](MaskBits a, MaskBits b) { return std::popcount(a) < std::popcount(b); });
  });
  return orders[universe_size];
}

std::string format_subset(const Universe& u, const SubsetMask& x) {
  if (x.universe_size() != u.size()) throw DomainError("subset does not belong to this universe");
  std::string out = "{";
  bool first = true;
  for (auto i : x.elements()) {
    if (!first) out += ',';
    out += u.label(i);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace sapprox
