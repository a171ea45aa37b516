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

#ifndef SAPPROX_APPROXIMATION_HPP_
#define SAPPROX_APPROXIMATION_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sapprox/core_sets.hpp"
#include "sapprox/srelation.hpp"

namespace sapprox {

// An equivalence relation stored as the partition it induces.
class EquivalenceRelation {
 public:
  // class_of[x] is an arbitrary block id. Throws DomainError on size mismatch.
  EquivalenceRelation(Universe universe, const std::vector<std::size_t>& class_of);
  // Blocks must be nonempty, pairwise disjoint and cover the universe.
  static EquivalenceRelation from_blocks(Universe universe, const std::vector<SubsetMask>& blocks);

  const Universe& universe() const { return universe_; }
  // [x]_R
  const SubsetMask& block_of(std::size_t x) const { return block_of_.at(x); }
  std::vector<SubsetMask> blocks() const;

 private:
  Universe universe_;
  std::vector<SubsetMask> block_of_;
};

// An arbitrary relation R on U stored as successor sets R(x).
class BinaryRelation {
 public:
  BinaryRelation(Universe universe, std::vector<SubsetMask> successors);
  static BinaryRelation from_equivalence(const EquivalenceRelation& r);

  const Universe& universe() const { return universe_; }
  const SubsetMask& successors(std::size_t x) const { return successors_.at(x); }

 private:
  Universe universe_;
  std::vector<SubsetMask> successors_;
};

SubsetMask pawlak_lower(const EquivalenceRelation& r, const SubsetMask& x);
SubsetMask pawlak_upper(const EquivalenceRelation& r, const SubsetMask& x);

// Lower: R(y) within X. Upper: R(y) meets X.
SubsetMask yao_lower(const BinaryRelation& r, const SubsetMask& x);
SubsetMask yao_upper(const BinaryRelation& r, const SubsetMask& x);

struct Verdicts {
  bool is_s_min = false;
  bool is_complement_closed = false;
  bool is_smc = false;

  bool operator==(const Verdicts&) const = default;
};

Verdicts classify_relation(const SRelationSpec& s);

// G = (U, W, T, S) with the relation's class verdicts cached.
class SApproximationSpace {
 public:
  // Validates T (total over U, every T(u) nonempty and over W) and computes
  // the verdicts.
  SApproximationSpace(Universe u, Universe w, std::vector<SubsetMask> t, SRelationSpec s);
  SApproximationSpace(Universe u, Universe w, std::vector<SubsetMask> t,
                      std::shared_ptr<const SRelationSpec> s);
  // Bulk construction for census loops: the caller supplies verdicts
  // previously obtained from classify_relation on the same relation.
  SApproximationSpace(Universe u, Universe w, std::vector<SubsetMask> t,
                      std::shared_ptr<const SRelationSpec> s, const Verdicts& verdicts);

  const Universe& u() const { return u_; }
  const Universe& w() const { return w_; }
  const std::vector<SubsetMask>& t() const { return t_; }
  const SubsetMask& t(std::size_t point) const { return t_.at(point); }
  const SRelationSpec& s() const { return *s_; }
  const std::shared_ptr<const SRelationSpec>& s_ptr() const { return s_; }
  const Verdicts& verdicts() const { return verdicts_; }
  Verdicts recompute_verdicts() const { return classify_relation(*s_); }

 private:
  void validate() const;

  Universe u_;
  Universe w_;
  std::vector<SubsetMask> t_;
  std::shared_ptr<const SRelationSpec> s_;
  Verdicts verdicts_;
};

// {u : S(T(u), X) = 1}
SubsetMask s_lower(const SApproximationSpace& g, const SubsetMask& x);
// {u : S(T(u), X^c) = 0}
SubsetMask s_upper(const SApproximationSpace& g, const SubsetMask& x);

// Hot-path variants without argument checks.
MaskBits s_lower_bits(const SApproximationSpace& g, MaskBits x);
MaskBits s_upper_bits(const SApproximationSpace& g, MaskBits x);

// Outcome of one numbered property over every admissible argument pair.
struct PropertyItem {
  int item = 0;
  std::string statement;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string first_violation;  // empty when none

  bool passed() const { return violations == 0; }
};

struct PropertyReport {
  std::array<PropertyItem, 9> items;
  // lower(X) within upper(X) for every admissible X. Not one of the nine
  // items; recorded because it can fail for S_M spaces.
  bool lower_within_upper = true;

  bool all_passed() const;
  std::size_t total_violations() const;
};

// The nine classical rough-set properties, exhaustively over X, Y within U.
PropertyReport verify_pawlak_properties(const EquivalenceRelation& r);
// Same nine properties for Yao's operators; on non-reflexive or non-serial
// relations items 1 and 2 can fail, and the report says so.
PropertyReport verify_yao_properties(const BinaryRelation& r);

// The nine S_M-approximation properties, exhaustively over A, B within W.
// Pairs where an expression is undefined (empty argument of a
// non-extended relation) are skipped. Violations are reported, not thrown.
PropertyReport verify_sm_properties(const SApproximationSpace& g);

}  // namespace sapprox

#endif  // SAPPROX_APPROXIMATION_HPP_
