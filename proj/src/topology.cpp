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

#include "sapprox/topology.hpp"

#include <algorithm>
#include <numeric>

#include "sapprox/errors.hpp"
#include "sapprox/srelation.hpp"

namespace sapprox {

namespace {

void require_smc(const SApproximationSpace& g, const char* op) {
  const auto& v = g.verdicts();
  if (v.is_smc) return;
  std::string why;
  if (!v.is_s_min) why = "S-min condition fails";
  if (!v.is_complement_closed) {
    if (!why.empty()) why += "; ";
    why += g.s().is_complement_extended() ? "complement condition fails"
                                          : "relation is not defined on the empty set";
  }
  throw ContractViolation(std::string(op) + " requires an S_MC space: " + why);
}

std::vector<SubsetMask> canonical(std::vector<MaskBits> bits, std::size_t n) {
  std::sort(bits.begin(), bits.end());
  bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
  std::vector<SubsetMask> out;
  out.reserve(bits.size());
  for (auto b : bits) out.emplace_back(b, n);
  return out;
}

void require_extended(const SApproximationSpace& g) {
  if (!g.s().is_complement_extended()) {
    throw DomainError("approximation families over all of P(W) need a complement-extended relation");
  }
}

}  // namespace

FiniteTopology::FiniteTopology(Universe points, std::vector<SubsetMask> opens) : points_(std::move(points)) {
  std::vector<MaskBits> bits;
  bits.reserve(opens.size());
  for (const auto& o : opens) {
    if (o.universe_size() != points_.size()) throw DomainError("open set is not over the carrier");
    bits.push_back(o.bits());
  }
  opens_ = canonical(std::move(bits), points_.size());
  axioms_verified_ = verify_topology_axioms(opens_, points_.size());
  if (axioms_verified_) {
    clopen_verified_ = std::all_of(opens_.begin(), opens_.end(),
                                   [this](const SubsetMask& o) { return contains(o.complement()); });
  }
}

bool FiniteTopology::contains(const SubsetMask& x) const {
  return std::binary_search(opens_.begin(), opens_.end(), x);
}

std::vector<SubsetMask> upper_family(const SApproximationSpace& g) {
  require_extended(g);
  std::vector<MaskBits> bits;
  for (MaskBits a = 0; a <= full_bits(g.w().size()); ++a) bits.push_back(s_upper_bits(g, a));
  return canonical(std::move(bits), g.u().size());
}

std::vector<SubsetMask> lower_family(const SApproximationSpace& g) {
  require_extended(g);
  std::vector<MaskBits> bits;
  for (MaskBits a = 0; a <= full_bits(g.w().size()); ++a) bits.push_back(s_lower_bits(g, a));
  return canonical(std::move(bits), g.u().size());
}

FiniteTopology build_topology(const SApproximationSpace& g) {
  require_smc(g, "build_topology");
  return FiniteTopology(g.u(), upper_family(g));
}

bool verify_topology_axioms(const std::vector<SubsetMask>& opens, std::size_t carrier_size) {
  std::vector<MaskBits> sorted;
  sorted.reserve(opens.size());
  for (const auto& o : opens) {
    if (o.universe_size() != carrier_size) return false;
    sorted.push_back(o.bits());
  }
  std::sort(sorted.begin(), sorted.end());
  const auto has = [&](MaskBits x) { return std::binary_search(sorted.begin(), sorted.end(), x); };
  if (!has(0) || !has(full_bits(carrier_size))) return false;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (!has(sorted[i] | sorted[j]) || !has(sorted[i] & sorted[j])) return false;
    }
  }
  return true;
}

bool verify_topology_axioms(const FiniteTopology& t) {
  return verify_topology_axioms(t.opens(), t.points().size());
}

bool is_clopen_topology(const FiniteTopology& t) {
  if (!verify_topology_axioms(t)) throw ContractViolation("is_clopen_topology requires a topology");
  return std::all_of(t.opens().begin(), t.opens().end(),
                     [&](const SubsetMask& o) { return t.contains(o.complement()); });
}

SubsetMask minimal_open_containing(const FiniteTopology& t, std::size_t point) {
  if (point >= t.points().size()) throw DomainError("point index out of range");
  if (!verify_topology_axioms(t)) throw ContractViolation("minimal_open_containing requires a topology");
  SubsetMask meet = SubsetMask::full(t.points().size());
  for (const auto& o : t.opens()) {
    if (o.contains(point)) meet = meet & o;
  }
  return meet;
}

DegreeProfile profile_from_degrees(std::vector<std::size_t> degree) {
  DegreeProfile p;
  p.degree = std::move(degree);
  for (auto d : p.degree) ++p.wi_sizes[d];
  p.signature = p.degree;
  std::sort(p.signature.begin(), p.signature.end());
  return p;
}

DegreeProfile degree_profile(const SApproximationSpace& g) {
  require_smc(g, "degree_profile");
  const std::size_t n = g.w().size();
  std::vector<std::size_t> by_atoms(n, 0);
  for (const auto& tu : g.t()) {
    const auto fam = atoms(derive_minimizing_function(g.s(), tu));
    if (!fam.single_unary()) {
      throw InternalConsistencyError("slice of an S_MC relation without a single one-element atom");
    }
    ++by_atoms[fam.atoms.front().elements().front()];
  }
  for (std::size_t w = 0; w < n; ++w) {
    const auto via_upper = static_cast<std::size_t>(std::popcount(s_upper_bits(g, MaskBits{1} << w)));
    if (via_upper != by_atoms[w]) {
      throw InternalConsistencyError("degree of " + g.w().label(w) + " is " + std::to_string(by_atoms[w]) +
                                     " by atoms but " + std::to_string(via_upper) + " by |upper({w})|");
    }
  }
  if (std::accumulate(by_atoms.begin(), by_atoms.end(), std::size_t{0}) != g.u().size()) {
    throw InternalConsistencyError("degrees do not sum to |U|");
  }
  return profile_from_degrees(std::move(by_atoms));
}

}  // namespace sapprox
