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

#ifndef SAPPROX_SRELATION_HPP_
#define SAPPROX_SRELATION_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sapprox/core_sets.hpp"

namespace sapprox {

// A truth table holds 4^n cells; past this it is no longer a sensible
// representation.
inline constexpr std::size_t kMaxTruthTableUniverse = 10;

// Above this |W| the S-min brute-force route (8^n triples) is not run.
inline constexpr std::size_t kMaxBruteForceSMin = 7;

// Above this |W| is_minimizing switches from the defining identity (4^n
// pairs) to the structural characterization (2^n).
inline constexpr std::size_t kMaxDefinitionalMinimizing = 6;

enum class SRelationKind { kInclusion, kUnionCover, kTruthTable, kUnaryAtomMap };

// A relation S : P*(W) x P*(W) -> {0,1}, optionally extended to an empty
// right argument ("complement-extended"). Only TruthTables carrying an empty
// column and UnaryAtomMaps are extended; for the latter S(A, {}) = 0.
class SRelationSpec {
 public:
  // S(A,B) = [A is a subset of B].
  static SRelationSpec inclusion(std::size_t w_size);
  // S(A,B) = [A union B = W].
  static SRelationSpec union_cover(std::size_t w_size);
  // `cells` is row-major with 2^n columns: cells[A * 2^n + B]. Row 0 is
  // ignored; column 0 is ignored unless has_empty_column.
  static SRelationSpec truth_table(std::size_t w_size, std::vector<std::uint8_t> cells,
                                   bool has_empty_column);
  // `atom_of[A]` is the element a(f_A) for every nonempty A; entry 0 is
  // ignored. S(A,B) = [atom_of[A] is in B].
  static SRelationSpec unary_atom_map(std::size_t w_size, std::vector<std::uint8_t> atom_of);

  SRelationKind kind() const { return kind_; }
  std::size_t w_size() const { return w_size_; }
  bool is_complement_extended() const { return extended_; }

  // Unchecked evaluation for hot loops. Callers guarantee a != 0 and that
  // b != 0 unless the relation is extended.
  bool eval_bits(MaskBits a, MaskBits b) const {
    switch (kind_) {
      case SRelationKind::kInclusion:
        return (a & ~b) == 0;
      case SRelationKind::kUnionCover:
        return (a | b) == full_bits(w_size_);
      case SRelationKind::kTruthTable:
        return data_[(static_cast<std::size_t>(a) << w_size_) | b] != 0;
      case SRelationKind::kUnaryAtomMap:
        return ((b >> data_[a]) & 1U) != 0;
    }
    return false;
  }

  // UnaryAtomMap only: the element index a(f_A).
  std::size_t atom_element(MaskBits a) const;
  // UnaryAtomMap: atom per left mask. TruthTable: the cells.
  const std::vector<std::uint8_t>& data() const { return data_; }

  // Compiles any kind to the canonical TruthTable form. Throws CapacityError
  // above kMaxTruthTableUniverse.
  SRelationSpec to_truth_table() const;

  bool operator==(const SRelationSpec&) const = default;

 private:
  SRelationSpec(SRelationKind kind, std::size_t w_size, std::vector<std::uint8_t> data, bool extended)
      : kind_(kind), w_size_(w_size), data_(std::move(data)), extended_(extended) {}

  SRelationKind kind_;
  std::size_t w_size_;
  std::vector<std::uint8_t> data_;
  bool extended_;
};

const char* kind_name(SRelationKind kind);

// Checked evaluation. DomainError on an empty left argument, on an empty
// right argument of a non-extended relation, or on a universe mismatch.
bool eval_s(const SRelationSpec& s, const SubsetMask& a, const SubsetMask& b);

// A function f : P*(W) -> {0,1}, optionally extended with a value at the
// empty set. Stored as a truth vector indexed by mask bits.
class MinimizingFunctionView {
 public:
  // `truth` has 2^n entries; truth[0] is only meaningful when extended.
  MinimizingFunctionView(std::size_t w_size, std::vector<std::uint8_t> truth, bool extended,
                         std::optional<SubsetMask> left_argument = std::nullopt);

  std::size_t w_size() const { return w_size_; }
  bool extended() const { return extended_; }
  const std::optional<SubsetMask>& left_argument() const { return left_; }
  bool operator()(MaskBits b) const { return truth_[b] != 0; }
  bool at(const SubsetMask& b) const;
  const std::vector<std::uint8_t>& truth() const { return truth_; }

 private:
  std::size_t w_size_;
  std::vector<std::uint8_t> truth_;
  bool extended_;
  std::optional<SubsetMask> left_;
};

// f_A(B) = S(A,B). No claim that the result is minimizing.
MinimizingFunctionView derive_minimizing_function(const SRelationSpec& s, const SubsetMask& a);

// f(A n B) = min(f(A), f(B)) for nonempty A, B. Pairs with empty
// intersection are skipped unless f is extended, in which case f({}) is used.
bool is_minimizing(const MinimizingFunctionView& f);
// The identity checked pair by pair, O(4^n).
bool is_minimizing_by_definition(const MinimizingFunctionView& f);
// Equivalent O(2^n) test: f is 0, is 1 on every nonempty set, or is the
// indicator of containing one fixed nonempty set; plus the constraints the
// extended value imposes on disjoint pairs.
bool is_minimizing_by_structure(const MinimizingFunctionView& f);

enum class AtomShape { kNoAtoms, kSingleAtom, kAllSingletons };

const char* shape_name(AtomShape shape);

struct AtomFamily {
  std::vector<SubsetMask> atoms;  // ascending cardinality, then numeric
  AtomShape shape = AtomShape::kNoAtoms;

  // The single atom has exactly one element.
  bool single_unary() const {
    return shape == AtomShape::kSingleAtom && atoms.front().cardinality() == 1;
  }
};

// Inclusion-minimal nonempty sets on which f is 1. Throws ContractViolation
// if f is not minimizing.
AtomFamily atoms(const MinimizingFunctionView& f);

// f(X) = 1 iff some atom is contained in X, for every nonempty X.
bool check_atom_structure(const MinimizingFunctionView& f, const AtomFamily& fam);

enum class Route { kAuto, kBruteForce, kAtoms };

// S(A, B n C) = min(S(A,B), S(A,C)). kAuto runs both routes when
// |W| <= kMaxBruteForceSMin and throws InternalConsistencyError if they differ.
bool is_s_min(const SRelationSpec& s, Route route = Route::kAuto);
bool is_s_min(const SRelationSpec& s, const Universe& w, Route route = Route::kAuto);

// S(A, B^c) = 1 - S(A,B) for all B (including {}) and S(A, {}) = 0. A
// relation that does not define S(A, {}) is never complement closed.
bool is_complement_closed(const SRelationSpec& s);
bool is_complement_closed(const SRelationSpec& s, const Universe& w);

// kBruteForce: S-min and complement closed. kAtoms: every slice f_A is
// minimizing, vanishes at {}, and has a single one-element atom. kAuto runs
// both and throws InternalConsistencyError on disagreement.
bool is_smc(const SRelationSpec& s, Route route = Route::kAuto);
bool is_smc(const SRelationSpec& s, const Universe& w, Route route = Route::kAuto);

// n^(2^n - 1). DomainError for n = 0, CapacityError above kMaxUniverseSize.
mpz_class count_smc_relations(std::size_t n);

// Largest |W| enumerated without an explicit override (2187 relations).
inline constexpr std::size_t kMaxSmcEnumeration = 3;

// Visits every UnaryAtomMap over an n-element W once, lexicographic in the
// sequence (atom of {w1}, atom of {w2}, atom of {w1,w2}, ...). CapacityError
// above kMaxSmcEnumeration unless allow_over_cap.
void for_each_smc_relation(std::size_t n, const std::function<void(const SRelationSpec&)>& visit,
                           bool allow_over_cap = false);
std::vector<SRelationSpec> enumerate_smc_relations(const Universe& w, bool allow_over_cap = false);

}  // namespace sapprox

#endif  // SAPPROX_SRELATION_HPP_
