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

#ifndef SAPPROX_TOPOLOGY_HPP_
#define SAPPROX_TOPOLOGY_HPP_

#include <cstddef>
#include <map>
#include <vector>

#include "sapprox/approximation.hpp"
#include "sapprox/core_sets.hpp"

namespace sapprox {

// A family of subsets of a finite carrier, deduplicated and kept in numeric
// mask order. The flags record whether the family was verified to be a
// topology and, if so, a clopen one.
class FiniteTopology {
 public:
  FiniteTopology(Universe points, std::vector<SubsetMask> opens);

  const Universe& points() const { return points_; }
  const std::vector<SubsetMask>& opens() const { return opens_; }
  bool contains(const SubsetMask& x) const;
  bool axioms_verified() const { return axioms_verified_; }
  bool clopen_verified() const { return clopen_verified_; }

  // Same carrier size and the same open family.
  bool same_opens(const FiniteTopology& other) const { return opens_ == other.opens_; }

 private:
  Universe points_;
  std::vector<SubsetMask> opens_;
  bool axioms_verified_ = false;
  bool clopen_verified_ = false;
};

// {upper(A) : A within W}. Throws ContractViolation naming the failed
// condition unless the space is S_MC.
FiniteTopology build_topology(const SApproximationSpace& g);

// The two families of approximations over all A within W, deduplicated and
// sorted. Requires a complement-extended relation.
std::vector<SubsetMask> upper_family(const SApproximationSpace& g);
std::vector<SubsetMask> lower_family(const SApproximationSpace& g);

// Empty set and carrier are open; opens closed under pairwise union and
// intersection.
bool verify_topology_axioms(const FiniteTopology& t);
bool verify_topology_axioms(const std::vector<SubsetMask>& opens, std::size_t carrier_size);

// Every open set is closed. ContractViolation if t is not a topology.
bool is_clopen_topology(const FiniteTopology& t);

// Intersection of every open set containing `point`. ContractViolation if t
// is not a topology.
SubsetMask minimal_open_containing(const FiniteTopology& t, std::size_t point);

struct DegreeProfile {
  std::vector<std::size_t> degree;             // per element of W
  std::map<std::size_t, std::size_t> wi_sizes;  // degree i -> |W_i|, only nonempty W_i
  std::vector<std::size_t> signature;          // degrees sorted ascending

  bool operator==(const DegreeProfile&) const = default;
};

// Degrees counted from the atoms of f_T(u) and, independently, as
// |upper({w})|. InternalConsistencyError if the two disagree or if the
// degrees do not sum to |U|. ContractViolation unless S_MC.
DegreeProfile degree_profile(const SApproximationSpace& g);

// Buckets a degree vector into W_i sizes and the sorted signature.
DegreeProfile profile_from_degrees(std::vector<std::size_t> degree);

}  // namespace sapprox

#endif  // SAPPROX_TOPOLOGY_HPP_
