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

// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Optional arguments select criteria by number.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "sapprox/acceptance.hpp"

int main(int argc, char** argv) {
  namespace acc = sapprox::acceptance;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) {
    for (int id = 1; id <= acc::kCriterionCount; ++id) ids.push_back(id);
  }
  int failures = 0;
  for (int id : ids) {
    const auto r = acc::run_criterion(id);
    std::printf("%s\n", acc::format_result(r).c_str());
    std::fflush(stdout);
    if (!r.passed()) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(ids.size()) - failures, ids.size());
  return failures == 0 ? 0 : 1;
}
