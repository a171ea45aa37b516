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

#ifndef SAPPROX_CORE_SETS_HPP_
#define SAPPROX_CORE_SETS_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sapprox {

// Full-powerset work is O(2^n); beyond this size it stops being a desk job.
inline constexpr std::size_t kMaxUniverseSize = 20;

// Raw bit encoding of a subset, position 0 least significant.
using MaskBits = std::uint32_t;

inline constexpr MaskBits full_bits(std::size_t n) {
  return n >= 32 ? ~MaskBits{0} : (MaskBits{1} << n) - 1;
}

// An ordered list of distinct element names. Elements are identified by
// position everywhere except at the I/O boundary. Copies share the labels.
class Universe {
 public:
  // Throws CapacityError when empty or larger than kMaxUniverseSize,
  // DomainError on duplicate labels.
  explicit Universe(std::vector<std::string> labels);

  // Labels prefix1..prefixN.
  static Universe indexed(std::size_t size, std::string_view prefix);

  std::size_t size() const { return labels_->size(); }
  const std::string& label(std::size_t index) const { return labels_->at(index); }
  const std::vector<std::string>& labels() const { return *labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool operator==(const Universe& other) const {
    return labels_ == other.labels_ || *labels_ == *other.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

// A subset of a finite universe of `universe_size` elements.
class SubsetMask {
 public:
  SubsetMask() = default;
  // Throws DomainError if a bit is set at or above universe_size, and
  // CapacityError if universe_size exceeds kMaxUniverseSize.
  SubsetMask(MaskBits bits, std::size_t universe_size);

  static SubsetMask empty(std::size_t universe_size) { return {0, universe_size}; }
  static SubsetMask full(std::size_t universe_size) {
    return {full_bits(universe_size), universe_size};
  }
  static SubsetMask singleton(std::size_t index, std::size_t universe_size);

  MaskBits bits() const { return bits_; }
  std::size_t universe_size() const { return size_; }

  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == full_bits(size_); }
  bool contains(std::size_t index) const {
    return index < size_ && ((bits_ >> index) & 1U) != 0;
  }
  std::size_t cardinality() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  SubsetMask complement() const { return {~bits_ & full_bits(size_), size_, Unchecked{}}; }

  // Element positions in ascending order.
  std::vector<std::size_t> elements() const;

  // Equality requires the same universe size; ordering is numeric on bits
  // and only meaningful within one universe.
  bool operator==(const SubsetMask&) const = default;
  std::strong_ordering operator<=>(const SubsetMask& other) const {
    if (auto c = size_ <=> other.size_; c != 0) return c;
    return bits_ <=> other.bits_;
  }

 private:
  struct Unchecked {};
  SubsetMask(MaskBits bits, std::size_t size, Unchecked) : bits_(bits), size_(static_cast<std::uint8_t>(size)) {}

  friend SubsetMask operator|(const SubsetMask&, const SubsetMask&);
  friend SubsetMask operator&(const SubsetMask&, const SubsetMask&);
  friend SubsetMask operator-(const SubsetMask&, const SubsetMask&);

  MaskBits bits_ = 0;
  std::uint8_t size_ = 0;
};

// Set algebra. All binary forms throw DomainError on mixed universe sizes.
SubsetMask operator|(const SubsetMask& a, const SubsetMask& b);
SubsetMask operator&(const SubsetMask& a, const SubsetMask& b);
SubsetMask operator-(const SubsetMask& a, const SubsetMask& b);
inline SubsetMask set_union(const SubsetMask& a, const SubsetMask& b) { return a | b; }
inline SubsetMask set_intersection(const SubsetMask& a, const SubsetMask& b) { return a & b; }
inline SubsetMask complement(const SubsetMask& a) { return a.complement(); }
bool is_subset(const SubsetMask& a, const SubsetMask& b);
inline std::size_t cardinality(const SubsetMask& a) { return a.cardinality(); }

// Forward range over all subsets of an n-element universe in ascending
// numeric order of the bit encoding.
class SubsetRange {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = SubsetMask;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = SubsetMask;

    iterator() = default;
    iterator(std::uint64_t value, std::size_t n) : value_(value), n_(n) {}
    SubsetMask operator*() const { return {static_cast<MaskBits>(value_), n_}; }
    iterator& operator++() {
      ++value_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++value_;
      return copy;
    }
    bool operator==(const iterator& other) const { return value_ == other.value_; }

   private:
    std::uint64_t value_ = 0;
    std::size_t n_ = 0;
  };

  SubsetRange(std::size_t n, bool include_empty)
      : n_(n), first_(include_empty ? 0 : 1), last_(std::uint64_t{1} << n) {}

  iterator begin() const { return {first_, n_}; }
  iterator end() const { return {last_, n_}; }
  std::size_t size() const { return static_cast<std::size_t>(last_ - first_); }

 private:
  std::size_t n_;
  std::uint64_t first_;
  std::uint64_t last_;
};

// Throws CapacityError when n exceeds kMaxUniverseSize.
SubsetRange enumerate_subsets(std::size_t universe_size, bool include_empty);
inline SubsetRange enumerate_subsets(const Universe& u, bool include_empty) {
  return enumerate_subsets(u.size(), include_empty);
}

// Nonempty subsets ordered by cardinality, then numerically. Computed once
// per size.
const std::vector<MaskBits>& subsets_by_cardinality(std::size_t universe_size);

// "{a,b}" with labels in universe order.
std::string format_subset(const Universe& u, const SubsetMask& x);

}  // namespace sapprox

#endif  // SAPPROX_CORE_SETS_HPP_
