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

// Command-line front end. Every subcommand delegates to one library
// operation; exit codes: 0 success, 1 verification-negative, 2 input error,
// 3 capacity error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sapprox/acceptance.hpp"
#include "sapprox/approximation.hpp"
#include "sapprox/classify.hpp"
#include "sapprox/errors.hpp"
#include "sapprox/space_document.hpp"
#include "sapprox/srelation.hpp"
#include "sapprox/topology.hpp"

namespace {

using namespace sapprox;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kCapacityError = 3;

bool porcelain = false;

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* true_false(bool b) { return b ? "true" : "false"; }

SApproximationSpace load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_space(text.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

// "[a,b]" from a subset, labels in universe order.
std::string label_list(const Universe& u, const SubsetMask& x) {
  std::string out = "[";
  bool first = true;
  for (auto i : x.elements()) {
    out += (first ? "" : ",") + u.label(i);
    first = false;
  }
  return out + "]";
}

SubsetMask parse_label_set(const Universe& w, const std::string& text) {
  MaskBits bits = 0;
  std::stringstream in(text);
  std::string label;
  while (std::getline(in, label, ',')) {
    label.erase(0, label.find_first_not_of(" \t"));
    label.erase(label.find_last_not_of(" \t") + 1);
    if (label.empty()) continue;
    auto idx = w.index_of(label);
    if (!idx) throw ValidationError("'" + label + "' is not in W");
    bits |= MaskBits{1} << *idx;
  }
  return {bits, w.size()};
}

int require_smc(const SApproximationSpace& g, const std::string& what) {
  if (g.verdicts().is_smc) return kOk;
  std::cerr << what << ": space is not S_MC (S_M: " << yes_no(g.verdicts().is_s_min)
            << ", complement closed: " << yes_no(g.verdicts().is_complement_closed) << ")\n";
  return kNegative;
}

int cmd_check(const std::string& file) {
  const auto g = load(file);
  const auto& s = g.s();
  const std::size_t n = g.w().size();
  if (!porcelain) std::cout << "relation: " << kind_name(s.kind()) << " over |W| = " << n << "\n";
  if (!porcelain) std::cout << "minimizing slices:\n";
  for (auto a : enumerate_subsets(n, false)) {
    const bool ok = is_minimizing(derive_minimizing_function(s, a));
    if (porcelain) {
      std::cout << "minimizing " << format_subset(g.w(), a) << ' ' << true_false(ok) << '\n';
    } else {
      std::cout << "  f_" << format_subset(g.w(), a) << ": " << yes_no(ok) << '\n';
    }
  }
  const auto& v = g.verdicts();
  const auto report = verify_sm_properties(g);
  if (porcelain) {
    std::cout << "s_min " << true_false(v.is_s_min) << "\ncomplement_closed " << true_false(v.is_complement_closed)
              << "\nsmc " << true_false(v.is_smc) << '\n';
    for (const auto& item : report.items) {
      std::cout << "property " << item.item << ' ' << (item.passed() ? "pass" : "fail") << ' ' << item.checked << ' '
                << item.violations << '\n';
    }
    std::cout << "lower_within_upper " << true_false(report.lower_within_upper) << '\n';
  } else {
    std::cout << "S_M: " << yes_no(v.is_s_min) << "\ncomplement closed: " << yes_no(v.is_complement_closed)
              << "\nS_MC: " << yes_no(v.is_smc) << "\nproperties:\n";
    for (const auto& item : report.items) {
      std::cout << "  " << item.item << ' ' << (item.passed() ? "pass" : "FAIL") << "  " << item.statement
                << "  (" << item.checked << " checked";
      if (!item.passed()) std::cout << ", " << item.violations << " violations, first at " << item.first_violation;
      std::cout << ")\n";
    }
    std::cout << "lower within upper: " << yes_no(report.lower_within_upper) << '\n';
  }
  return kOk;
}

int cmd_approx(const std::string& file, const std::string& set) {
  const auto g = load(file);
  const auto x = parse_label_set(g.w(), set);
  const auto lower = s_lower(g, x);
  const auto upper = s_upper(g, x);
  const char* sep = porcelain ? " " : ": ";
  std::cout << "lower" << sep << label_list(g.u(), lower) << "\nupper" << sep << label_list(g.u(), upper) << '\n';
  return kOk;
}

int cmd_topology(const std::string& file) {
  const auto g = load(file);
  if (int rc = require_smc(g, "topology")) return rc;
  const auto t = build_topology(g);
  const bool axioms = verify_topology_axioms(t);
  const bool clopen = axioms && is_clopen_topology(t);
  if (porcelain) {
    for (const auto& o : t.opens()) std::cout << "open " << format_subset(g.u(), o) << '\n';
    std::cout << "axioms " << true_false(axioms) << "\nclopen " << true_false(clopen) << '\n';
  } else {
    std::cout << "open sets (" << t.opens().size() << "):\n";
    for (const auto& o : t.opens()) std::cout << "  " << format_subset(g.u(), o) << '\n';
    std::cout << "axioms: " << yes_no(axioms) << "\nclopen: " << yes_no(clopen) << '\n';
  }
  return axioms && clopen ? kOk : kNegative;
}

std::string join_counts(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

int cmd_profile(const std::string& file) {
  const auto g = load(file);
  if (int rc = require_smc(g, "profile")) return rc;
  const auto p = degree_profile(g);
  if (porcelain) {
    for (std::size_t w = 0; w < p.degree.size(); ++w) std::cout << "degree " << g.w().label(w) << ' ' << p.degree[w] << '\n';
    for (const auto& [i, size] : p.wi_sizes) std::cout << "wi " << i << ' ' << size << '\n';
    std::cout << "signature " << join_counts(p.signature) << '\n';
  } else {
    std::cout << "degree:\n";
    for (std::size_t w = 0; w < p.degree.size(); ++w) std::cout << "  " << g.w().label(w) << "  " << p.degree[w] << '\n';
    std::cout << "W_i:\n";
    for (const auto& [i, size] : p.wi_sizes) std::cout << "  i=" << i << "  |W_i|=" << size << '\n';
    std::cout << "signature: [" << join_counts(p.signature) << "]\n";
  }
  return kOk;
}

int cmd_homeo(const std::string& file1, const std::string& file2, bool oracle) {
  const auto g1 = load(file1);
  const auto g2 = load(file2);
  if (int rc = require_smc(g1, file1)) return rc;
  if (int rc = require_smc(g2, file2)) return rc;
  const bool by_profile = homeo_by_profile(g1, g2);
  std::cout << (porcelain ? "profile_verdict " : "homeomorphic (degree criterion): ")
            << (porcelain ? true_false(by_profile) : yes_no(by_profile)) << '\n';
  if (!oracle) return kOk;
  const auto witness = homeo_bruteforce(build_topology(g1), build_topology(g2));
  std::string text = "none";
  if (witness) {
    text.clear();
    for (std::size_t i = 0; i < witness->size(); ++i) {
      text += (i ? "," : "") + g1.u().label(i) + "->" + g2.u().label((*witness)(i));
    }
  }
  if (porcelain) {
    std::cout << "oracle_verdict " << true_false(witness.has_value()) << "\nwitness " << text << '\n';
  } else {
    std::cout << "homeomorphic (bijection search): " << yes_no(witness.has_value()) << "\nwitness: " << text << '\n';
  }
  if (witness.has_value() != by_profile) {
    std::cerr << "homeo: degree criterion and bijection search disagree\n";
    return kNegative;
  }
  return kOk;
}

int cmd_enumerate(std::size_t m, std::size_t n) {
  bool first = true;
  for_each_partition(m, n, [&](const IntegerPartition& p) {
    std::string parts;
    for (std::size_t i = 0; i < p.parts().size(); ++i) parts += (i ? "+" : "") + std::to_string(p.parts()[i]);
    if (!first) std::cout << '\n';
    first = false;
    std::cout << "# partition " << parts << '\n' << format_space(canonical_space(p, m, n));
  });
  return kOk;
}

int cmd_census(std::size_t m, std::size_t n, std::optional<std::size_t> sample, std::uint64_t seed) {
  CensusOptions options;
  options.sample_size = sample;
  options.seed = seed;
  const auto r = census(m, n, options);
  const std::string brute = r.classes_by_bruteforce ? std::to_string(*r.classes_by_bruteforce) : "n/a";
  if (porcelain) {
    std::cout << "m " << r.m << "\nn " << r.n << "\ntier " << (r.exhaustive ? "exhaustive" : "sampled")
              << "\nspaces " << r.spaces_generated << "\ntopologies " << r.distinct_topologies
              << "\nclasses_bruteforce " << brute << "\nclasses_signature " << r.classes_by_signature
              << "\np " << r.expected_classes.get_str() << "\nagreement " << true_false(r.agreement) << '\n';
  } else {
    std::cout << "census m=" << r.m << " n=" << r.n << " (" << (r.exhaustive ? "exhaustive" : "sampled") << ")\n"
              << "  spaces generated:        " << r.spaces_generated << "\n"
              << "  distinct topologies:     " << r.distinct_topologies << "\n"
              << "  classes (bijection):     " << brute << "\n"
              << "  classes (degree):        " << r.classes_by_signature << "\n"
              << "  p(m,n):                  " << r.expected_classes.get_str() << "\n"
              << "  agreement:               " << yes_no(r.agreement) << '\n';
  }
  return r.agreement ? kOk : kNegative;
}

int cmd_selftest(const std::vector<int>& ids) {
  namespace acc = sapprox::acceptance;
  std::vector<int> which = ids;
  if (which.empty()) {
    for (int id = 1; id <= acc::kCriterionCount; ++id) which.push_back(id);
  }
  int failures = 0;
  for (int id : which) {
    const auto r = acc::run_criterion(id);
    if (porcelain) {
      std::cout << "criterion " << r.id << ' ' << (r.passed() ? "pass" : "fail") << ' ' << r.seconds << '\n';
    } else {
      std::cout << acc::format_result(r) << std::endl;
    }
    if (!r.passed()) ++failures;
  }
  return failures == 0 ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-approximation spaces: approximations, S_MC topologies and their homeomorphism classes"};
  app.require_subcommand(1);
  app.add_flag("--porcelain", porcelain, "One machine-readable record per line");

  std::string file, file2, set;
  bool oracle = false;
  std::size_t m = 0, n = 0;
  std::optional<std::size_t> sample;
  std::uint64_t seed = CensusOptions{}.seed;
  std::vector<int> ids;

  auto* check = app.add_subcommand("check", "Relation verdicts and the S_M property report");
  check->add_option("file", file, "Space document")->required();
  auto* approx = app.add_subcommand("approx", "Lower and upper approximation of a subset of W");
  approx->add_option("file", file, "Space document")->required();
  approx->add_option("--set", set, "Comma-separated W labels (empty for the empty set)")->required();
  auto* topology = app.add_subcommand("topology", "Open sets of the induced topology");
  topology->add_option("file", file, "Space document")->required();
  auto* profile = app.add_subcommand("profile", "Degrees, W_i sizes and signature");
  profile->add_option("file", file, "Space document")->required();
  auto* homeo = app.add_subcommand("homeo", "Decide whether two induced topologies are homeomorphic");
  homeo->add_option("file1", file, "First space document")->required();
  homeo->add_option("file2", file2, "Second space document")->required();
  homeo->add_flag("--oracle", oracle, "Also run the exhaustive bijection search");
  auto* count_classes = app.add_subcommand("count-classes", "p(M,N): partitions of M into at most N parts");
  count_classes->add_option("M", m)->required();
  count_classes->add_option("N", n)->required();
  auto* count_s = app.add_subcommand("count-s", "Number of S_MC relations over |W| = N");
  count_s->add_option("N", n)->required();
  auto* enumerate = app.add_subcommand("enumerate", "One canonical space document per partition of M into <= N parts");
  enumerate->add_option("M", m)->required();
  enumerate->add_option("N", n)->required();
  auto* census_cmd = app.add_subcommand("census", "Count homeomorphism classes of generated topologies");
  census_cmd->add_option("M", m)->required();
  census_cmd->add_option("N", n)->required();
  census_cmd->add_option("--sample", sample, "Random spaces to draw above the exhaustive tier");
  census_cmd->add_option("--seed", seed, "Seed for the sampled tier");
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("criteria", ids, "Criterion numbers (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check) return cmd_check(file);
    if (*approx) return cmd_approx(file, set);
    if (*topology) return cmd_topology(file);
    if (*profile) return cmd_profile(file);
    if (*homeo) return cmd_homeo(file, file2, oracle);
    if (*count_classes) {
      std::cout << partition_count(m, n).get_str() << '\n';
      return kOk;
    }
    if (*count_s) {
      std::cout << count_smc_relations(n).get_str() << '\n';
      return kOk;
    }
    if (*enumerate) return cmd_enumerate(m, n);
    if (*census_cmd) return cmd_census(m, n, sample, seed);
    if (*selftest) return cmd_selftest(ids);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const ContractViolation& e) {
    std::cerr << e.what() << '\n';
    return kNegative;
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kNegative;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
