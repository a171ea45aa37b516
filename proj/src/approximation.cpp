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

#include "sapprox/approximation.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "sapprox/errors.hpp"

namespace sapprox {

namespace {

void check_over(const Universe& u, const SubsetMask& x, const char* what) {
  if (x.universe_size() != u.size()) {
    throw DomainError(std::string(what) + " is not a subset of a universe of size " + std::to_string(u.size()));
  }
}

bool subset_bits(MaskBits a, MaskBits b) { return (a & ~b) == 0; }

class ItemRecorder {
 public:
  ItemRecorder(PropertyItem& item, const Universe& args) : item_(item), args_(args) {}

  void record(bool ok, MaskBits a, MaskBits b) {
    ++item_.checked;
    if (ok) return;
    if (item_.violations++ == 0) {
      item_.first_violation = "A=" + format_subset(args_, SubsetMask(a, args_.size())) +
                              " B=" + format_subset(args_, SubsetMask(b, args_.size()));
    }
  }

 private:
  PropertyItem& item_;
  const Universe& args_;
};

PropertyReport empty_report(const std::array<const char*, 9>& statements) {
  PropertyReport report;
  for (int i = 0; i < 9; ++i) {
    report.items[i].item = i + 1;
    report.items[i].statement = statements[i];
  }
  return report;
}

constexpr std::array<const char*, 9> kRoughStatements = {
    "lower(X) within X within upper(X)",
    "lower(U) = upper(U) = U and lower({}) = upper({}) = {}",
    "upper(X u Y) = upper(X) u upper(Y)",
    "lower(X n Y) = lower(X) n lower(Y)",
    "X within Y implies lower(X) within lower(Y)",
    "X within Y implies upper(X) within upper(Y)",
    "lower(X) u lower(Y) within lower(X u Y)",
    "upper(X n Y) within upper(X) n upper(Y)",
    "lower(X) = upper(X^c)^c and upper(X) = lower(X^c)^c",
};

constexpr std::array<const char*, 9> kSmStatements = {
    "A within B implies S(X, B^c) <= S(X, A^c)",
    "max(S(T(x), A), S(T(x), B)) <= S(T(x), A u B)",
    "upper(A u B) = upper(A) u upper(B)",
    "lower(A n B) = lower(A) n lower(B)",
    "A within B implies lower(A) within lower(B)",
    "A within B implies upper(A) within upper(B)",
    "lower(A) u lower(B) within lower(A u B)",
    "upper(A n B) within upper(A) n upper(B)",
    "lower(A) = upper(A^c)^c and upper(A) = lower(A^c)^c",
};

// Rough-set operators on U where every X has both approximations.
PropertyReport verify_rough(const Universe& u, const std::vector<MaskBits>& lower,
                            const std::vector<MaskBits>& upper) {
  PropertyReport report = empty_report(kRoughStatements);
  const MaskBits full = full_bits(u.size());
  {
    ItemRecorder rec(report.items[1], u);
    rec.record(lower[full] == full && upper[full] == full && lower[0] == 0 && upper[0] == 0, full, 0);
  }
  for (MaskBits x = 0; x <= full; ++x) {
    ItemRecorder(report.items[0], u).record(subset_bits(lower[x], x) && subset_bits(x, upper[x]), x, x);
    ItemRecorder(report.items[8], u)
        .record(lower[x] == (full & ~upper[full & ~x]) && upper[x] == (full & ~lower[full & ~x]), x, x);
    if (!subset_bits(lower[x], upper[x])) report.lower_within_upper = false;
    for (MaskBits y = 0; y <= full; ++y) {
      ItemRecorder(report.items[2], u).record(upper[x | y] == (upper[x] | upper[y]), x, y);
      ItemRecorder(report.items[3], u).record(lower[x & y] == (lower[x] & lower[y]), x, y);
      if (subset_bits(x, y)) {
        ItemRecorder(report.items[4], u).record(subset_bits(lower[x], lower[y]), x, y);
        ItemRecorder(report.items[5], u).record(subset_bits(upper[x], upper[y]), x, y);
      }
      ItemRecorder(report.items[6], u).record(subset_bits(lower[x] | lower[y], lower[x | y]), x, y);
      ItemRecorder(report.items[7], u).record(subset_bits(upper[x & y], upper[x] & upper[y]), x, y);
    }
  }
  return report;
}

}  // namespace

EquivalenceRelation::EquivalenceRelation(Universe universe, const std::vector<std::size_t>& class_of)
    : universe_(std::move(universe)) {
  const std::size_t n = universe_.size();
  if (class_of.size() != n) throw DomainError("class_of must assign a block to every element");
  std::unordered_map<std::size_t, MaskBits> blocks;
  for (std::size_t x = 0; x < n; ++x) blocks[class_of[x]] |= MaskBits{1} << x;
  block_of_.reserve(n);
  for (std::size_t x = 0; x < n; ++x) block_of_.emplace_back(blocks[class_of[x]], n);
}

EquivalenceRelation EquivalenceRelation::from_blocks(Universe universe, const std::vector<SubsetMask>& blocks) {
  const std::size_t n = universe.size();
  std::vector<std::size_t> class_of(n, 0);
  MaskBits seen = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    check_over(universe, blocks[i], "block");
    if (blocks[i].is_empty()) throw DomainError("equivalence blocks must be nonempty");
    if ((seen & blocks[i].bits()) != 0) throw DomainError("equivalence blocks must be disjoint");
    seen |= blocks[i].bits();
    for (auto x : blocks[i].elements()) class_of[x] = i;
  }
  if (seen != full_bits(n)) throw DomainError("equivalence blocks must cover the universe");
  return EquivalenceRelation(std::move(universe), class_of);
}

std::vector<SubsetMask> EquivalenceRelation::blocks() const {
  std::vector<SubsetMask> out;
  for (std::size_t x = 0; x < universe_.size(); ++x) {
    // Report each block once, at its lowest element.
    if (static_cast<std::size_t>(std::countr_zero(block_of_[x].bits())) == x) out.push_back(block_of_[x]);
  }
  return out;
}

BinaryRelation::BinaryRelation(Universe universe, std::vector<SubsetMask> successors)
    : universe_(std::move(universe)), successors_(std::move(successors)) {
  if (successors_.size() != universe_.size()) throw DomainError("successor sets must be total over U");
  for (const auto& s : successors_) check_over(universe_, s, "successor set");
}

BinaryRelation BinaryRelation::from_equivalence(const EquivalenceRelation& r) {
  std::vector<SubsetMask> successors;
  for (std::size_t x = 0; x < r.universe().size(); ++x) successors.push_back(r.block_of(x));
  return BinaryRelation(r.universe(), std::move(successors));
}

SubsetMask pawlak_lower(const EquivalenceRelation& r, const SubsetMask& x) {
  check_over(r.universe(), x, "X");
  MaskBits out = 0;
  for (std::size_t y = 0; y < r.universe().size(); ++y) {
    if (subset_bits(r.block_of(y).bits(), x.bits())) out |= MaskBits{1} << y;
  }
  return {out, x.universe_size()};
}

SubsetMask pawlak_upper(const EquivalenceRelation& r, const SubsetMask& x) {
  check_over(r.universe(), x, "X");
  MaskBits out = 0;
  for (std::size_t y = 0; y < r.universe().size(); ++y) {
    if ((r.block_of(y).bits() & x.bits()) != 0) out |= MaskBits{1} << y;
  }
  return {out, x.universe_size()};
}

SubsetMask yao_lower(const BinaryRelation& r, const SubsetMask& x) {
  check_over(r.universe(), x, "X");
  MaskBits out = 0;
  for (std::size_t y = 0; y < r.universe().size(); ++y) {
    if (subset_bits(r.successors(y).bits(), x.bits())) out |= MaskBits{1} << y;
  }
  return {out, x.universe_size()};
}

SubsetMask yao_upper(const BinaryRelation& r, const SubsetMask& x) {
  check_over(r.universe(), x, "X");
  MaskBits out = 0;
  for (std::size_t y = 0; y < r.universe().size(); ++y) {
    if ((r.successors(y).bits() & x.bits()) != 0) out |= MaskBits{1} << y;
  }
  return {out, x.universe_size()};
}

Verdicts classify_relation(const SRelationSpec& s) {
  Verdicts v;
  v.is_s_min = is_s_min(s);
  v.is_complement_closed = is_complement_closed(s);
  v.is_smc = is_smc(s);
  if (v.is_smc != (v.is_s_min && v.is_complement_closed)) {
    throw InternalConsistencyError("S_MC verdict differs from S-min and complement closure");
  }
  return v;
}

SApproximationSpace::SApproximationSpace(Universe u, Universe w, std::vector<SubsetMask> t, SRelationSpec s)
    : SApproximationSpace(std::move(u), std::move(w), std::move(t),
                          std::make_shared<const SRelationSpec>(std::move(s))) {}

SApproximationSpace::SApproximationSpace(Universe u, Universe w, std::vector<SubsetMask> t,
                                         std::shared_ptr<const SRelationSpec> s)
    : u_(std::move(u)), w_(std::move(w)), t_(std::move(t)), s_(std::move(s)) {
  validate();
  verdicts_ = classify_relation(*s_);
}

SApproximationSpace::SApproximationSpace(Universe u, Universe w, std::vector<SubsetMask> t,
                                         std::shared_ptr<const SRelationSpec> s, const Verdicts& verdicts)
    : u_(std::move(u)), w_(std::move(w)), t_(std::move(t)), s_(std::move(s)), verdicts_(verdicts) {
  validate();
}

void SApproximationSpace::validate() const {
  if (!s_) throw DomainError("S relation is missing");
  if (s_->w_size() != w_.size()) throw DomainError("S relation is defined over a different W");
  if (t_.size() != u_.size()) throw DomainError("T must assign a subset of W to every point of U");
  for (std::size_t i = 0; i < t_.size(); ++i) {
    check_over(w_, t_[i], "T(u)");
    if (t_[i].is_empty()) throw DomainError("T(" + u_.label(i) + ") must be nonempty");
  }
}

MaskBits s_lower_bits(const SApproximationSpace& g, MaskBits x) {
  MaskBits out = 0;
  const auto& s = g.s();
  for (std::size_t i = 0; i < g.t().size(); ++i) {
    if (s.eval_bits(g.t()[i].bits(), x)) out |= MaskBits{1} << i;
  }
  return out;
}

MaskBits s_upper_bits(const SApproximationSpace& g, MaskBits x) {
  MaskBits out = 0;
  const auto& s = g.s();
  const MaskBits xc = full_bits(g.w().size()) & ~x;
  for (std::size_t i = 0; i < g.t().size(); ++i) {
    if (!s.eval_bits(g.t()[i].bits(), xc)) out |= MaskBits{1} << i;
  }
  return out;
}

SubsetMask s_lower(const SApproximationSpace& g, const SubsetMask& x) {
  check_over(g.w(), x, "X");
  if (x.is_empty() && !g.s().is_complement_extended()) {
    throw DomainError("lower approximation of the empty set needs a complement-extended relation");
  }
  return {s_lower_bits(g, x.bits()), g.u().size()};
}

SubsetMask s_upper(const SApproximationSpace& g, const SubsetMask& x) {
  check_over(g.w(), x, "X");
  if (x.is_full() && !g.s().is_complement_extended()) {
    throw DomainError("upper approximation of W needs a complement-extended relation");
  }
  return {s_upper_bits(g, x.bits()), g.u().size()};
}

bool PropertyReport::all_passed() const {
  return std::all_of(items.begin(), items.end(), [](const PropertyItem& i) { return i.passed(); });
}

std::size_t PropertyReport::total_violations() const {
  std::size_t total = 0;
  for (const auto& i : items) total += i.violations;
  return total;
}

PropertyReport verify_pawlak_properties(const EquivalenceRelation& r) {
  const std::size_t n = r.universe().size();
  std::vector<MaskBits> lower(std::size_t{1} << n), upper(std::size_t{1} << n);
  for (auto x : enumerate_subsets(n, true)) {
    lower[x.bits()] = pawlak_lower(r, x).bits();
    upper[x.bits()] = pawlak_upper(r, x).bits();
  }
  return verify_rough(r.universe(), lower, upper);
}

PropertyReport verify_yao_properties(const BinaryRelation& r) {
  const std::size_t n = r.universe().size();
  std::vector<MaskBits> lower(std::size_t{1} << n), upper(std::size_t{1} << n);
  for (auto x : enumerate_subsets(n, true)) {
    lower[x.bits()] = yao_lower(r, x).bits();
    upper[x.bits()] = yao_upper(r, x).bits();
  }
  return verify_rough(r.universe(), lower, upper);
}

PropertyReport verify_sm_properties(const SApproximationSpace& g) {
  PropertyReport report = empty_report(kSmStatements);
  const auto& s = g.s();
  const auto& w = g.w();
  const MaskBits full = full_bits(w.size());
  const bool ext = s.is_complement_extended();
  const auto has_lower = [&](MaskBits x) { return ext || x != 0; };
  const auto has_upper = [&](MaskBits x) { return ext || x != full; };

  std::vector<MaskBits> lower(std::size_t{1} << w.size()), upper(std::size_t{1} << w.size());
  for (MaskBits x = 0; x <= full; ++x) {
    if (has_lower(x)) lower[x] = s_lower_bits(g, x);
    if (has_upper(x)) upper[x] = s_upper_bits(g, x);
    if (has_lower(x) && has_upper(x) && !subset_bits(lower[x], upper[x])) report.lower_within_upper = false;
  }

  for (MaskBits a = 0; a <= full; ++a) {
    const MaskBits ac = full & ~a;
    if (has_lower(a) && has_upper(ac) && has_upper(a) && has_lower(ac)) {
      ItemRecorder(report.items[8], w)
          .record(lower[a] == (full_bits(g.u().size()) & ~upper[ac]) &&
                      upper[a] == (full_bits(g.u().size()) & ~lower[ac]),
                  a, a);
    }
    for (MaskBits b = 0; b <= full; ++b) {
      const MaskBits bc = full & ~b;
      const bool a_in_b = subset_bits(a, b);
      if (a_in_b && has_lower(bc) && has_lower(ac)) {
        bool ok = true;
        for (MaskBits x = 1; x <= full && ok; ++x) ok = s.eval_bits(x, bc) <= s.eval_bits(x, ac);
        ItemRecorder(report.items[0], w).record(ok, a, b);
      }
      if (has_lower(a) && has_lower(b)) {
        bool ok = true;
        for (const auto& tx : g.t()) {
          ok = ok && std::max(s.eval_bits(tx.bits(), a), s.eval_bits(tx.bits(), b)) <=
                         s.eval_bits(tx.bits(), a | b);
        }
        ItemRecorder(report.items[1], w).record(ok, a, b);
      }
      if (has_upper(a) && has_upper(b) && has_upper(a | b)) {
        ItemRecorder(report.items[2], w).record(upper[a | b] == (upper[a] | upper[b]), a, b);
      }
      if (has_lower(a) && has_lower(b) && has_lower(a & b)) {
        ItemRecorder(report.items[3], w).record(lower[a & b] == (lower[a] & lower[b]), a, b);
      }
      if (a_in_b && has_lower(a) && has_lower(b)) {
        ItemRecorder(report.items[4], w).record(subset_bits(lower[a], lower[b]), a, b);
      }
      if (a_in_b && has_upper(a) && has_upper(b)) {
        ItemRecorder(report.items[5], w).record(subset_bits(upper[a], upper[b]), a, b);
      }
      if (has_lower(a) && has_lower(b)) {
        ItemRecorder(report.items[6], w).record(subset_bits(lower[a] | lower[b], lower[a | b]), a, b);
      }
      if (has_upper(a) && has_upper(b) && has_upper(a & b)) {
        ItemRecorder(report.items[7], w).record(subset_bits(upper[a & b], upper[a] & upper[b]), a, b);
      }
    }
  }
  return report;
}

}  // namespace sapprox
