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

#include "sapprox/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "sapprox/approximation.hpp"
#include "sapprox/classify.hpp"
#include "sapprox/errors.hpp"
#include "sapprox/srelation.hpp"
#include "sapprox/topology.hpp"

namespace sapprox::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool correct = false;
  std::string detail;
};

std::vector<SubsetMask> t_from_bits(const std::vector<MaskBits>& digits, std::size_t n) {
  std::vector<SubsetMask> t;
  t.reserve(digits.size());
  for (auto d : digits) t.emplace_back(d, n);
  return t;
}

SApproximationSpace union_cover_example() {
  return SApproximationSpace(Universe({"a"}), Universe({"1", "2"}), {SubsetMask::full(2)},
                             SRelationSpec::union_cover(2));
}

// Every S_MC space with |U| = m, |W| = n built from a UnaryAtomMap.
template <typename Visit>
void for_each_atom_map_space(std::size_t m, std::size_t n, Visit&& visit) {
  const Universe u = Universe::indexed(m, "u");
  const Universe w = Universe::indexed(n, "w");
  for_each_smc_relation(n, [&](const SRelationSpec& rel) {
    auto s = std::make_shared<const SRelationSpec>(rel);
    const Verdicts v = classify_relation(*s);
    for_each_t_map(m, n, [&](const std::vector<MaskBits>& digits) {
      visit(SApproximationSpace(u, w, t_from_bits(digits, n), s, v));
    });
  });
}

Outcome counterexample() {
  const auto g = union_cover_example();
  const auto x = SubsetMask(0b01, 2);
  const auto lower = s_lower(g, x);
  const auto upper = s_upper(g, x);
  Outcome out;
  out.correct = lower == SubsetMask(0b1, 1) && upper == SubsetMask(0b0, 1);
  out.detail = "lower({1}) = " + format_subset(g.u(), lower) + ", upper({1}) = " + format_subset(g.u(), upper);
  return out;
}

Outcome pawlak_suite() {
  std::mt19937 rng(2101);
  std::size_t violations = 0;
  std::size_t checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    std::vector<std::size_t> class_of(n);
    for (auto& c : class_of) c = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    const auto report = verify_pawlak_properties(EquivalenceRelation(Universe::indexed(n, "x"), class_of));
    violations += report.total_violations();
    for (const auto& item : report.items) checked += item.checked;
  }
  return {violations == 0, "200 relations, " + std::to_string(checked) + " property instances, " +
                               std::to_string(violations) + " violations"};
}

Outcome sm_suite() {
  std::mt19937 rng(2702);
  std::size_t spaces = 0;
  std::size_t violations = 0;
  std::size_t not_sm = 0;
  const auto check = [&](const SApproximationSpace& g) {
    ++spaces;
    if (!g.verdicts().is_s_min) ++not_sm;
    violations += verify_sm_properties(g).total_violations();
  };
  for (std::size_t n = 1; n <= 3; ++n) {
    const Universe w = Universe::indexed(n, "w");
    for_each_smc_relation(n, [&](const SRelationSpec& rel) {
      auto s = std::make_shared<const SRelationSpec>(rel);
      const Verdicts v = classify_relation(*s);
      for (int k = 0; k < 50; ++k) {
        const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        std::vector<SubsetMask> t;
        for (std::size_t i = 0; i < m; ++i) {
          t.emplace_back(std::uniform_int_distribution<MaskBits>(1, full_bits(n))(rng), n);
        }
        check(SApproximationSpace(Universe::indexed(m, "u"), w, std::move(t), s, v));
      }
    });
  }
  check(union_cover_example());
  return {violations == 0 && not_sm == 0, std::to_string(spaces) + " spaces, " + std::to_string(not_sm) +
                                             " not S_M, " + std::to_string(violations) + " violations"};
}

struct TopologyTier {
  std::size_t spaces = 0;
  std::size_t topology_violations = 0;
  std::size_t degree_violations = 0;
  std::string first_problem;
  double seconds = 0.0;
};

const TopologyTier& topology_tier() {
  static const TopologyTier tier = [] {
    TopologyTier r;
    const auto start = Clock::now();
    const auto note = [&](const std::string& what) {
      if (r.first_problem.empty()) r.first_problem = what;
    };
    for (std::size_t m = 1; m <= 4; ++m) {
      for (std::size_t n = 1; n <= 3; ++n) {
        for_each_atom_map_space(m, n, [&](const SApproximationSpace& g) {
          ++r.spaces;
          try {
            const auto top = build_topology(g);
            bool ok = top.axioms_verified() && verify_topology_axioms(top) && is_clopen_topology(top);
            ok = ok && lower_family(g) == top.opens();
            for (MaskBits a = 0; a <= full_bits(n) && ok; ++a) ok = s_lower_bits(g, a) == s_upper_bits(g, a);
            if (!ok) {
              ++r.topology_violations;
              note("topology check fails on a space with |U|=" + std::to_string(m));
            }
          } catch (const Error& e) {
            ++r.topology_violations;
            note(e.what());
          }
          try {
            const auto profile = degree_profile(g);
            std::size_t total = 0;
            for (auto d : profile.degree) total += d;
            if (total != m) {
              ++r.degree_violations;
              note("degrees do not sum to |U|");
            }
          } catch (const Error& e) {
            ++r.degree_violations;
            note(e.what());
          }
        });
      }
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
  }();
  return tier;
}

Outcome clopen_topologies() {
  const auto& tier = topology_tier();
  std::string detail = std::to_string(tier.spaces) + " S_MC spaces, " +
                       std::to_string(tier.topology_violations) + " violations";
  if (!tier.first_problem.empty()) detail += " (" + tier.first_problem + ")";
  return {tier.topology_violations == 0, detail};
}

Outcome degree_consistency() {
  const auto& tier = topology_tier();
  return {tier.degree_violations == 0,
          std::to_string(tier.spaces) + " spaces, " + std::to_string(tier.degree_violations) + " disagreements"};
}

Outcome homeomorphism_oracle() {
  std::map<std::vector<SubsetMask>, std::size_t> index;
  std::vector<SApproximationSpace> spaces;
  std::vector<FiniteTopology> tops;
  std::size_t generated = 0;
  for_each_atom_map_space(4, 3, [&](const SApproximationSpace& g) {
    ++generated;
    auto top = build_topology(g);
    if (index.try_emplace(top.opens(), spaces.size()).second) {
      spaces.push_back(g);
      tops.push_back(std::move(top));
    }
  });
  std::size_t pairs = 0;
  std::size_t disagreements = 0;
  std::size_t homeomorphic = 0;
  std::size_t bad_witnesses = 0;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    for (std::size_t j = i; j < spaces.size(); ++j) {
      ++pairs;
      const bool by_profile = homeo_by_profile(spaces[i], spaces[j]);
      const auto witness = homeo_bruteforce(tops[i], tops[j]);
      if (by_profile != witness.has_value()) ++disagreements;
      if (!witness) continue;
      ++homeomorphic;
      for (std::size_t p = 0; p < 4; ++p) {
        const auto here = minimal_open_containing(tops[i], p);
        const auto there = minimal_open_containing(tops[j], (*witness)(p));
        if (witness->image(here) != there || here.cardinality() != there.cardinality()) ++bad_witnesses;
      }
    }
  }
  return {disagreements == 0 && bad_witnesses == 0,
          std::to_string(generated) + " spaces, " + std::to_string(spaces.size()) + " distinct topologies, " +
              std::to_string(pairs) + " pairs (" + std::to_string(homeomorphic) + " homeomorphic), " +
              std::to_string(disagreements) + " disagreements, " + std::to_string(bad_witnesses) +
              " bad witnesses"};
}

Outcome counting() {
  const unsigned long expected[] = {1, 8, 2187};
  bool ok = true;
  std::ostringstream detail;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto count = count_smc_relations(n);
    std::set<std::vector<std::uint8_t>> distinct;
    std::size_t streamed = 0;
    for_each_smc_relation(n, [&](const SRelationSpec& s) {
      ++streamed;
      distinct.insert(s.data());
    });
    ok = ok && count == expected[n - 1] && count == static_cast<unsigned long>(streamed) &&
         distinct.size() == streamed;
    detail << (n > 1 ? ", " : "") << "n=" << n << ": " << count.get_str() << " counted, " << streamed
           << " streamed";
  }
  return {ok, detail.str()};
}

Outcome census_suite() {
  const std::pair<std::size_t, std::size_t> cases[] = {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {4, 2}, {3, 3}, {5, 3}};
  bool ok = true;
  std::ostringstream detail;
  for (const auto& [m, n] : cases) {
    const auto report = census(m, n);
    const bool good = report.agreement && report.classes_by_bruteforce &&
                      report.expected_classes == static_cast<unsigned long>(*report.classes_by_bruteforce);
    ok = ok && good;
    detail << "(" << m << "," << n << ")=" << (report.classes_by_bruteforce ? *report.classes_by_bruteforce : 0)
           << "/" << report.expected_classes.get_str() << " ";
  }
  std::size_t oracle_mismatches = 0;
  for (unsigned m = 0; m <= 12; ++m) {
    for (unsigned n = 0; n <= 12; ++n) {
      if (partition_count(m, n) != static_cast<unsigned long>(partition_count_by_compositions(m, n))) {
        ++oracle_mismatches;
      }
    }
  }
  ok = ok && oracle_mismatches == 0;
  detail << "; p(m,n) vs composition oracle for m,n <= 12: " << oracle_mismatches << " mismatches";
  return {ok, detail.str()};
}

Outcome atom_theory() {
  std::size_t minimizing = 0;
  std::size_t extended_minimizing = 0;
  std::size_t violations = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const MaskBits full = full_bits(n);
    const std::size_t side = std::size_t{1} << n;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << full); ++code) {
      std::vector<std::uint8_t> truth(side, 0);
      for (MaskBits x = 1; x <= full; ++x) truth[x] = static_cast<std::uint8_t>((code >> (x - 1)) & 1U);
      const MinimizingFunctionView f(n, truth, false);
      if (!is_minimizing(f)) continue;
      ++minimizing;
      const auto fam = atoms(f);
      bool ok = true;
      for (std::size_t i = 0; i < fam.atoms.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.atoms.size(); ++j) {
          ok = ok && (fam.atoms[i].bits() & fam.atoms[j].bits()) == 0;
        }
      }
      ok = ok && check_atom_structure(f, fam);
      const bool all_singletons =
          n >= 2 && fam.atoms.size() == n &&
          std::all_of(fam.atoms.begin(), fam.atoms.end(), [](const SubsetMask& a) { return a.cardinality() == 1; });
      ok = ok && (fam.atoms.size() <= 1 || all_singletons);
      ok = ok && (fam.shape == AtomShape::kNoAtoms) == fam.atoms.empty();
      ok = ok && (fam.shape == AtomShape::kAllSingletons) == all_singletons;

      bool complement_leq = true;
      for (MaskBits a = 1; a < full; ++a) complement_leq = complement_leq && (!f(a) || !f(full & ~a));
      ok = ok && complement_leq == (fam.shape != AtomShape::kAllSingletons);

      const MinimizingFunctionView g(n, truth, true);
      if (is_minimizing(g)) {
        ++extended_minimizing;
        bool complement_eq = true;
        for (MaskBits a = 0; a <= full; ++a) complement_eq = complement_eq && g(full & ~a) != g(a);
        ok = ok && complement_eq == atoms(g).single_unary();
      }
      if (!ok) ++violations;
    }
  }
  return {violations == 0, std::to_string(minimizing) + " minimizing functions, " +
                               std::to_string(extended_minimizing) + " extended, " + std::to_string(violations) +
                               " violations"};
}

struct Criterion {
  const char* title;
  double budget_seconds;
  Outcome (*run)();
  bool shares_topology_tier;
};

const Criterion kCriteria[kCriterionCount] = {
    {"union-cover counterexample", 0.001, counterexample, false},
    {"Pawlak properties", 10.0, pawlak_suite, false},
    {"S_M properties", 30.0, sm_suite, false},
    {"clopen topologies", 120.0, clopen_topologies, true},
    {"degree consistency", 120.0, degree_consistency, true},
    {"degree criterion vs bijection oracle", 300.0, homeomorphism_oracle, false},
    {"S_MC relation counting", 1.0, counting, false},
    {"homeomorphism class census", 600.0, census_suite, false},
    {"atom theory", 60.0, atom_theory, false},
};

}  // namespace

unsigned long long partition_count_by_compositions(unsigned m, unsigned n) {
  if (m == 0) return 1;
  std::set<std::vector<unsigned>> partitions;
  for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (m - 1)); ++cuts) {
    std::vector<unsigned> parts;
    unsigned run = 1;
    for (unsigned i = 0; i + 1 < m; ++i) {
      if ((cuts >> i) & 1U) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    if (parts.size() > n) continue;
    std::sort(parts.rbegin(), parts.rend());
    partitions.insert(parts);
  }
  return partitions.size();
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw DomainError("no acceptance criterion " + std::to_string(id));
  const auto& c = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = c.title;
  r.budget_seconds = c.budget_seconds;
  const auto start = Clock::now();
  try {
    const auto out = c.run();
    r.correct = out.correct;
    r.detail = out.detail;
  } catch (const std::exception& e) {
    r.correct = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  // Criteria 4 and 5 share one pass over the tier and one budget.
  if (c.shares_topology_tier) r.seconds = topology_tier().seconds;
  return r;
}

std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char timing[96];
  if (r.budget_seconds < 1.0) {
    std::snprintf(timing, sizeof timing, "%.3f ms / %.0f ms", r.seconds * 1e3, r.budget_seconds * 1e3);
  } else {
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", r.seconds, r.budget_seconds);
  }
  return std::string(r.passed() ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.title + " (" + timing +
         "): " + r.detail;
}

}  // namespace sapprox::acceptance
