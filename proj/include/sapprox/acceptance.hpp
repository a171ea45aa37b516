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

#ifndef SAPPROX_ACCEPTANCE_HPP_
#define SAPPROX_ACCEPTANCE_HPP_

#include <functional>
#include <string>
#include <vector>

namespace sapprox::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool correct = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;

  bool passed() const { return correct && seconds <= budget_seconds; }
};

inline constexpr int kCriterionCount = 9;

// Runs one criterion. Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id);

// Runs every criterion in order, reporting each as it finishes.
std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_result = {});

// "[PASS] 4 clopen topologies (12.3 s / 120 s): detail"
std::string format_result(const CriterionResult& r);

// Number of partitions of m into at most n parts, by listing every
// composition of m and canonicalizing it. Independent of the recurrence.
unsigned long long partition_count_by_compositions(unsigned m, unsigned n);

}  // namespace sapprox::acceptance

#endif  // SAPPROX_ACCEPTANCE_HPP_
