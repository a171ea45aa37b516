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

#include "sapprox/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "sapprox/errors.hpp"
#include "sapprox/srelation.hpp"

namespace sapprox {

namespace {

// Largest |W| for which constructions re-derive the verdicts of a
// UnaryAtomMap instead of taking S_MC membership from its shape.
constexpr std::size_t kMaxReclassifiedW = 6;

Verdicts atom_map_verdicts(const SRelationSpec& s) {
  if (s.w_size() <= kMaxReclassifiedW) return classify_relation(s);
  return {true, true, true};
}

std::vector<MaskBits> open_bits(const FiniteTopology& t) {
  std::vector<MaskBits> out;
  out.reserve(t.opens().size());
  for (const auto& o : t.opens()) out.push_back(o.bits());
  return out;
}

// Degree per element as |upper({w})|.
std::vector<std::size_t> upper_degrees(const SApproximationSpace& g) {
  std::vector<std::size_t> deg(g.w().size());
  for (std::size_t w = 0; w < deg.size(); ++w) {
    deg[w] = static_cast<std::size_t>(std::popcount(s_upper_bits(g, MaskBits{1} << w)));
  }
  return deg;
}

std::vector<std::size_t> sorted_signature(std::vector<std::size_t> deg) {
  std::sort(deg.begin(), deg.end());
  return deg;
}

bool is_partition_signature(const std::vector<std::size_t>& signature, std::size_t m, std::size_t n) {
  return signature.size() == n && std::accumulate(signature.begin(), signature.end(), std::size_t{0}) == m;
}

std::vector<SubsetMask> to_t(const std::vector<MaskBits>& digits, std::size_t n) {
  std::vector<SubsetMask> t;
  t.reserve(digits.size());
  for (auto d : digits) t.emplace_back(d, n);
  return t;
}

// Groups topologies into homeomorphism classes; returns class id per entry.
std::vector<std::size_t> bucket_by_bruteforce(const std::vector<FiniteTopology>& tops) {
  std::vector<std::size_t> class_of(tops.size());
  std::vector<std::size_t> representatives;
  for (std::size_t i = 0; i < tops.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < representatives.size() && !placed; ++c) {
      if (homeo_bruteforce(tops[representatives[c]], tops[i])) {
        class_of[i] = c;
        placed = true;
      }
    }
    if (!placed) {
      class_of[i] = representatives.size();
      representatives.push_back(i);
    }
  }
  return class_of;
}

}  // namespace

IntegerPartition::IntegerPartition(std::vector<std::size_t> parts, std::size_t n_cap)
    : parts_(std::move(parts)), n_cap_(n_cap) {
  if (parts_.size() > n_cap_) {
    throw DomainError("partition has " + std::to_string(parts_.size()) + " parts but at most " +
                      std::to_string(n_cap_) + " are allowed");
  }
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be non-increasing");
    m_ += parts_[i];
  }
}

Bijection::Bijection(std::vector<std::size_t> forward) : forward_(std::move(forward)) {
  std::vector<bool> hit(forward_.size(), false);
  for (auto y : forward_) {
    if (y >= forward_.size() || hit[y]) throw DomainError("map is not a bijection");
    hit[y] = true;
  }
}

Bijection Bijection::inverse() const {
  std::vector<std::size_t> back(forward_.size());
  for (std::size_t x = 0; x < forward_.size(); ++x) back[forward_[x]] = x;
  return Bijection(std::move(back));
}

SubsetMask Bijection::image(const SubsetMask& x) const {
  if (x.universe_size() != forward_.size()) throw DomainError("subset is not over the bijection's domain");
  MaskBits out = 0;
  for (auto e : x.elements()) out |= MaskBits{1} << forward_[e];
  return {out, x.universe_size()};
}

bool homeo_by_profile(const SApproximationSpace& g1, const SApproximationSpace& g2) {
  if (g1.u().size() != g2.u().size() || g1.w().size() != g2.w().size()) {
    throw HypothesisNotMet("degree criterion needs |U| = |U'| and |W| = |W'| (got " +
                           std::to_string(g1.u().size()) + "/" + std::to_string(g2.u().size()) + " and " +
                           std::to_string(g1.w().size()) + "/" + std::to_string(g2.w().size()) + ")");
  }
  return degree_profile(g1).wi_sizes == degree_profile(g2).wi_sizes;
}

std::optional<Bijection> homeo_bruteforce(const FiniteTopology& t1, const FiniteTopology& t2) {
  const std::size_t n = t1.points().size();
  if (n != t2.points().size()) return std::nullopt;
  if (n > kMaxBruteForceHomeo) {
    throw CapacityError("bijection search is limited to " + std::to_string(kMaxBruteForceHomeo) + " points");
  }
  if (t1.opens().size() != t2.opens().size()) return std::nullopt;
  const auto source = open_bits(t1);
  const auto target = open_bits(t2);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const bool carries = std::all_of(source.begin(), source.end(), [&](MaskBits o) {
      MaskBits img = 0;
      for (MaskBits b = o; b != 0; b &= b - 1) img |= MaskBits{1} << perm[std::countr_zero(b)];
      return std::binary_search(target.begin(), target.end(), img);
    });
    if (carries) return Bijection(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

mpz_class partition_count(std::size_t m, std::size_t n) {
  n = std::min(n, m);
  // table[i][j] = p(i, j)
  std::vector<std::vector<mpz_class>> table(m + 1, std::vector<mpz_class>(n + 1, 0));
  for (std::size_t j = 0; j <= n; ++j) table[0][j] = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      table[i][j] = table[i][j - 1];
      if (i >= j) table[i][j] += table[i - j][j];
    }
  }
  return table[m][n];
}

void for_each_partition(std::size_t m, std::size_t n,
                        const std::function<void(const IntegerPartition&)>& visit) {
  if (n == 0) throw DomainError("partitions need room for at least one part");
  std::vector<std::size_t> parts;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t remaining, std::size_t largest) {
    if (remaining == 0) {
      visit(IntegerPartition(parts, n));
      return;
    }
    if (parts.size() == n) return;
    for (std::size_t k = std::min(remaining, largest); k >= 1; --k) {
      parts.push_back(k);
      extend(remaining - k, k);
      parts.pop_back();
    }
  };
  extend(m, m);
}

std::vector<IntegerPartition> enumerate_partitions(std::size_t m, std::size_t n) {
  std::vector<IntegerPartition> out;
  for_each_partition(m, n, [&](const IntegerPartition& p) { out.push_back(p); });
  return out;
}

SApproximationSpace canonical_space(const IntegerPartition& p, std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw DomainError("canonical space needs m >= 1 and n >= 1");
  if (p.m() != m) throw DomainError("partition sums to " + std::to_string(p.m()) + ", not " + std::to_string(m));
  if (p.parts().size() > n) throw DomainError("partition has more parts than |W|");
  Universe u = Universe::indexed(m, "u");
  Universe w = Universe::indexed(n, "w");
  std::vector<SubsetMask> t;
  t.reserve(m);
  for (std::size_t j = 0; j < p.parts().size(); ++j) {
    for (std::size_t k = 0; k < p.parts()[j]; ++k) t.push_back(SubsetMask::singleton(j, n));
  }
  std::vector<std::uint8_t> atom_of(std::size_t{1} << n, 0);
  for (std::size_t j = 0; j < p.parts().size(); ++j) atom_of[MaskBits{1} << j] = static_cast<std::uint8_t>(j);
  auto s = std::make_shared<const SRelationSpec>(SRelationSpec::unary_atom_map(n, std::move(atom_of)));
  const Verdicts v = atom_map_verdicts(*s);
  return SApproximationSpace(std::move(u), std::move(w), std::move(t), s, v);
}

void for_each_t_map(std::size_t m, std::size_t n,
                    const std::function<void(const std::vector<MaskBits>&)>& visit) {
  if (m == 0 || n == 0) throw DomainError("T maps need nonempty U and W");
  if (m > kMaxUniverseSize || n > kMaxUniverseSize) throw CapacityError("universe exceeds the cap");
  const MaskBits full = full_bits(n);
  std::vector<MaskBits> digits(m, 1);
  while (true) {
    visit(digits);
    std::size_t pos = m;
    while (pos > 0 && digits[pos - 1] == full) {
      digits[pos - 1] = 1;
      --pos;
    }
    if (pos == 0) return;
    ++digits[pos - 1];
  }
}

CensusReport census(std::size_t m, std::size_t n, const CensusOptions& options) {
  if (m == 0 || n == 0) throw DomainError("census needs m >= 1 and n >= 1");
  CensusReport report;
  report.m = m;
  report.n = n;
  report.expected_classes = partition_count(m, n);
  report.exhaustive = m <= kMaxCensusPoints && n <= kMaxCensusW;
  if (!report.exhaustive && !options.sample_size) {
    throw CapacityError("census(" + std::to_string(m) + ", " + std::to_string(n) +
                        ") is above the exhaustive tier; pass a sample size");
  }
  const Universe u = Universe::indexed(m, "u");
  const Universe w = Universe::indexed(n, "w");

  // Distinct topologies (literal open families) and every signature seen
  // for each of them.
  std::map<std::vector<MaskBits>, std::set<std::vector<std::size_t>>> seen;
  std::map<std::vector<MaskBits>, std::vector<std::size_t>> profile_signature;

  const auto record = [&](const SApproximationSpace& g) {
    ++report.spaces_generated;
    const FiniteTopology top = build_topology(g);
    auto [it, inserted] = seen.try_emplace(open_bits(top));
    it->second.insert(sorted_signature(upper_degrees(g)));
    if (inserted) profile_signature[it->first] = degree_profile(g).signature;
  };

  if (report.exhaustive) {
    for_each_smc_relation(n, [&](const SRelationSpec& rel) {
      auto s = std::make_shared<const SRelationSpec>(rel);
      const Verdicts v = classify_relation(*s);
      for_each_t_map(m, n, [&](const std::vector<MaskBits>& digits) {
        record(SApproximationSpace(u, w, to_t(digits, n), s, v));
      });
    });
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> element(0, n - 1);
    std::uniform_int_distribution<MaskBits> subset(1, full_bits(n));
    for (std::size_t k = 0; k < *options.sample_size; ++k) {
      std::vector<std::uint8_t> atom_of(std::size_t{1} << n, 0);
      for (std::size_t a = 1; a < atom_of.size(); ++a) atom_of[a] = static_cast<std::uint8_t>(element(rng));
      std::vector<MaskBits> digits(m);
      for (auto& d : digits) d = subset(rng);
      auto s = std::make_shared<const SRelationSpec>(SRelationSpec::unary_atom_map(n, std::move(atom_of)));
      const Verdicts v = atom_map_verdicts(*s);
      record(SApproximationSpace(u, w, to_t(digits, n), s, v));
    }
  }

  report.distinct_topologies = seen.size();
  bool consistent = true;
  std::map<std::vector<std::size_t>, std::size_t> signature_class;
  std::vector<std::size_t> by_signature;
  std::vector<FiniteTopology> tops;
  for (const auto& [opens, signatures] : seen) {
    const auto& sig = profile_signature.at(opens);
    consistent = consistent && signatures.size() == 1 && *signatures.begin() == sig;
    consistent = consistent && is_partition_signature(sig, m, n);
    by_signature.push_back(signature_class.try_emplace(sig, signature_class.size()).first->second);
    if (report.exhaustive) {
      std::vector<SubsetMask> masks;
      for (auto b : opens) masks.emplace_back(b, m);
      tops.emplace_back(u, std::move(masks));
    }
  }
  report.classes_by_signature = signature_class.size();

  if (report.exhaustive) {
    const auto by_bruteforce = bucket_by_bruteforce(tops);
    std::set<std::size_t> classes(by_bruteforce.begin(), by_bruteforce.end());
    report.classes_by_bruteforce = classes.size();
    // Same partition of the topologies: the class-id pairs form a bijection.
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < tops.size(); ++i) pairs.emplace(by_bruteforce[i], by_signature[i]);
    const bool same_partition = pairs.size() == classes.size() && pairs.size() == signature_class.size();
    report.agreement = consistent && same_partition &&
                       report.expected_classes == static_cast<unsigned long>(classes.size());
  } else {
    report.agreement = consistent && report.expected_classes >= static_cast<unsigned long>(signature_class.size());
  }
  return report;
}

}  // namespace sapprox
