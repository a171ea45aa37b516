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

#ifndef SAPPROX_CLASSIFY_HPP_
#define SAPPROX_CLASSIFY_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sapprox/approximation.hpp"
#include "sapprox/topology.hpp"

namespace sapprox {

// Parts in non-increasing order, all positive, at most n_cap of them.
class IntegerPartition {
 public:
  IntegerPartition(std::vector<std::size_t> parts, std::size_t n_cap);

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t m() const { return m_; }
  std::size_t n_cap() const { return n_cap_; }

  bool operator==(const IntegerPartition&) const = default;

 private:
  std::vector<std::size_t> parts_;
  std::size_t m_ = 0;
  std::size_t n_cap_ = 0;
};

// A permutation of {0..n-1}.
class Bijection {
 public:
  explicit Bijection(std::vector<std::size_t> forward);

  std::size_t operator()(std::size_t x) const { return forward_.at(x); }
  std::size_t size() const { return forward_.size(); }
  const std::vector<std::size_t>& forward() const { return forward_; }
  Bijection inverse() const;
  SubsetMask image(const SubsetMask& x) const;

  bool operator==(const Bijection&) const = default;

 private:
  std::vector<std::size_t> forward_;
};

// Carrier cap for the factorial bijection search.
inline constexpr std::size_t kMaxBruteForceHomeo = 8;

// Homeomorphism of S_MC topologies by equal |W_i| for every i.
// HypothesisNotMet if |U| or |W| differ; ContractViolation unless both S_MC.
bool homeo_by_profile(const SApproximationSpace& g1, const SApproximationSpace& g2);

// First bijection in lexicographic order that carries opens1 onto opens2, if
// any. CapacityError above kMaxBruteForceHomeo points.
std::optional<Bijection> homeo_bruteforce(const FiniteTopology& t1, const FiniteTopology& t2);

// Partitions of m into at most n positive parts.
mpz_class partition_count(std::size_t m, std::size_t n);

// Reverse-lexicographic: [3], [2,1], [1,1,1]. DomainError if n = 0.
void for_each_partition(std::size_t m, std::size_t n,
                        const std::function<void(const IntegerPartition&)>& visit);
std::vector<IntegerPartition> enumerate_partitions(std::size_t m, std::size_t n);

// S_MC space over U = {u1..um}, W = {w1..wn} whose degree of w_j is the
// j-th part (0 beyond the last part).
SApproximationSpace canonical_space(const IntegerPartition& p, std::size_t m, std::size_t n);

// Visits every T : U -> P*(W) with |U| = m, |W| = n as the vector of image
// masks; the first point varies slowest.
void for_each_t_map(std::size_t m, std::size_t n,
                    const std::function<void(const std::vector<MaskBits>&)>& visit);

// Exhaustive tier limits.
inline constexpr std::size_t kMaxCensusPoints = 5;
inline constexpr std::size_t kMaxCensusW = 3;

struct CensusOptions {
  std::optional<std::size_t> sample_size;  // required above the exhaustive tier
  std::uint64_t seed = 20151215;
};

struct CensusReport {
  std::size_t m = 0;
  std::size_t n = 0;
  bool exhaustive = false;
  std::uint64_t spaces_generated = 0;
  std::size_t distinct_topologies = 0;
  std::optional<std::size_t> classes_by_bruteforce;  // exhaustive tier only
  std::size_t classes_by_signature = 0;
  mpz_class expected_classes;  // p(m, n)
  // Exhaustive: both bucketings are the same partition of the distinct
  // topologies and the class count equals p(m,n). Sampled: every observed
  // signature is a partition of m into at most n parts and the count does
  // not exceed p(m,n).
  bool agreement = false;
};

// Generates S_MC spaces with |U| = m, |W| = n and buckets their topologies.
// The exhaustive tier (m <= kMaxCensusPoints, n <= kMaxCensusW) crosses every
// UnaryAtomMap with every T map; otherwise `sample_size` random spaces are
// drawn, or CapacityError is thrown when none was given.
CensusReport census(std::size_t m, std::size_t n, const CensusOptions& options = {});

}  // namespace sapprox

#endif  // SAPPROX_CLASSIFY_HPP_
