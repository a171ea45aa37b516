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

#include "sapprox/srelation.hpp"

#include <bit>
#include <string>

#include "sapprox/errors.hpp"

namespace sapprox {

namespace {

void check_w_size(std::size_t n) {
  if (n == 0) throw DomainError("W must be nonempty");
  if (n > kMaxUniverseSize) {
    throw CapacityError("|W| = " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(kMaxUniverseSize));
  }
}

void check_universe(const SRelationSpec& s, const Universe& w) {
  if (w.size() != s.w_size()) {
    throw DomainError("relation is defined over |W| = " + std::to_string(s.w_size()) +
                      " but the universe has " + std::to_string(w.size()) + " elements");
  }
}

bool s_min_brute_force(const SRelationSpec& s) {
  // S-min only speaks about nonempty B n C, even when S(A, {}) is defined.
  const MaskBits full = full_bits(s.w_size());
  for (MaskBits a = 1; a <= full; ++a) {
    for (MaskBits b = 1; b <= full; ++b) {
      const bool sb = s.eval_bits(a, b);
      for (MaskBits c = 1; c <= full; ++c) {
        const MaskBits bc = b & c;
        if (bc == 0) continue;
        if (s.eval_bits(a, bc) != (sb && s.eval_bits(a, c))) return false;
      }
    }
  }
  return true;
}

bool s_min_by_atoms(const SRelationSpec& s) {
  const std::size_t n = s.w_size();
  for (MaskBits a = 1; a <= full_bits(n); ++a) {
    const auto f = derive_minimizing_function(s, SubsetMask(a, n));
    // restrict to P*(W), matching the brute-force route
    if (!is_minimizing(MinimizingFunctionView(n, f.truth(), false, f.left_argument()))) return false;
  }
  return true;
}

bool smc_direct(const SRelationSpec& s) { return is_s_min(s, Route::kBruteForce) && is_complement_closed(s); }

bool smc_by_atoms(const SRelationSpec& s) {
  if (!s.is_complement_extended()) return false;
  const std::size_t n = s.w_size();
  for (MaskBits a = 1; a <= full_bits(n); ++a) {
    auto f = derive_minimizing_function(s, SubsetMask(a, n));
    if (f(0) || !is_minimizing(f)) return false;
    if (!atoms(f).single_unary()) return false;
  }
  return true;
}

}  // namespace

SRelationSpec SRelationSpec::inclusion(std::size_t w_size) {
  check_w_size(w_size);
  return {SRelationKind::kInclusion, w_size, {}, false};
}

SRelationSpec SRelationSpec::union_cover(std::size_t w_size) {
  check_w_size(w_size);
  return {SRelationKind::kUnionCover, w_size, {}, false};
}

SRelationSpec SRelationSpec::truth_table(std::size_t w_size, std::vector<std::uint8_t> cells,
                                         bool has_empty_column) {
  check_w_size(w_size);
  if (w_size > kMaxTruthTableUniverse) {
    throw CapacityError("truth tables are limited to |W| <= " + std::to_string(kMaxTruthTableUniverse));
  }
  const std::size_t side = std::size_t{1} << w_size;
  if (cells.size() != side * side) {
    throw DomainError("truth table must have " + std::to_string(side * side) + " cells, got " +
                      std::to_string(cells.size()));
  }
  for (auto& c : cells) {
    if (c > 1) throw DomainError("truth table cells must be 0 or 1");
  }
  // Canonicalize the cells nobody may read so that equality is semantic.
  for (std::size_t b = 0; b < side; ++b) cells[b] = 0;
  if (!has_empty_column) {
    for (std::size_t a = 0; a < side; ++a) cells[a * side] = 0;
  }
  return {SRelationKind::kTruthTable, w_size, std::move(cells), has_empty_column};
}

SRelationSpec SRelationSpec::unary_atom_map(std::size_t w_size, std::vector<std::uint8_t> atom_of) {
  check_w_size(w_size);
  const std::size_t side = std::size_t{1} << w_size;
  if (atom_of.size() != side) {
    throw DomainError("atom map must have one entry per subset (" + std::to_string(side) + "), got " +
                      std::to_string(atom_of.size()));
  }
  atom_of[0] = 0;
  for (std::size_t a = 1; a < side; ++a) {
    if (atom_of[a] >= w_size) throw DomainError("atom map value outside W");
  }
  return {SRelationKind::kUnaryAtomMap, w_size, std::move(atom_of), true};
}

std::size_t SRelationSpec::atom_element(MaskBits a) const {
  if (kind_ != SRelationKind::kUnaryAtomMap) throw DomainError("atom_element needs a unary atom map");
  if (a == 0 || a > full_bits(w_size_)) throw DomainError("left argument must be a nonempty subset of W");
  return data_[a];
}

SRelationSpec SRelationSpec::to_truth_table() const {
  if (kind_ == SRelationKind::kTruthTable) return *this;
  if (w_size_ > kMaxTruthTableUniverse) {
    throw CapacityError("truth tables are limited to |W| <= " + std::to_string(kMaxTruthTableUniverse));
  }
  const std::size_t side = std::size_t{1} << w_size_;
  std::vector<std::uint8_t> cells(side * side, 0);
  for (std::size_t a = 1; a < side; ++a) {
    for (std::size_t b = extended_ ? 0 : 1; b < side; ++b) {
      cells[a * side + b] = eval_bits(static_cast<MaskBits>(a), static_cast<MaskBits>(b)) ? 1 : 0;
    }
  }
  return truth_table(w_size_, std::move(cells), extended_);
}

const char* kind_name(SRelationKind kind) {
  switch (kind) {
    case SRelationKind::kInclusion:
      return "inclusion";
    case SRelationKind::kUnionCover:
      return "union_cover";
    case SRelationKind::kTruthTable:
      return "table";
    case SRelationKind::kUnaryAtomMap:
      return "atom_map";
  }
  return "?";
}

bool eval_s(const SRelationSpec& s, const SubsetMask& a, const SubsetMask& b) {
  if (a.universe_size() != s.w_size() || b.universe_size() != s.w_size()) {
    throw DomainError("subset does not belong to the relation's W");
  }
  if (a.is_empty()) throw DomainError("S is undefined for an empty left argument");
  if (b.is_empty() && !s.is_complement_extended()) {
    throw DomainError(std::string("S is undefined for an empty right argument (") + kind_name(s.kind()) +
                      " relation is not complement-extended)");
  }
  return s.eval_bits(a.bits(), b.bits());
}

MinimizingFunctionView::MinimizingFunctionView(std::size_t w_size, std::vector<std::uint8_t> truth,
                                               bool extended, std::optional<SubsetMask> left_argument)
    : w_size_(w_size), truth_(std::move(truth)), extended_(extended), left_(std::move(left_argument)) {
  check_w_size(w_size);
  if (truth_.size() != (std::size_t{1} << w_size)) throw DomainError("truth vector must have 2^|W| entries");
  for (auto& v : truth_) {
    if (v > 1) throw DomainError("truth values must be 0 or 1");
  }
  if (!extended_) truth_[0] = 0;
}

bool MinimizingFunctionView::at(const SubsetMask& b) const {
  if (b.universe_size() != w_size_) throw DomainError("subset does not belong to the function's W");
  if (b.is_empty() && !extended_) throw DomainError("function is undefined at the empty set");
  return (*this)(b.bits());
}

MinimizingFunctionView derive_minimizing_function(const SRelationSpec& s, const SubsetMask& a) {
  if (a.universe_size() != s.w_size()) throw DomainError("left argument does not belong to W");
  if (a.is_empty()) throw DomainError("S is undefined for an empty left argument");
  const std::size_t side = std::size_t{1} << s.w_size();
  std::vector<std::uint8_t> truth(side, 0);
  const bool extended = s.is_complement_extended();
  for (std::size_t b = extended ? 0 : 1; b < side; ++b) {
    truth[b] = s.eval_bits(a.bits(), static_cast<MaskBits>(b)) ? 1 : 0;
  }
  return {s.w_size(), std::move(truth), extended, a};
}

bool is_minimizing(const MinimizingFunctionView& f) {
  return f.w_size() <= kMaxDefinitionalMinimizing ? is_minimizing_by_definition(f)
                                                   : is_minimizing_by_structure(f);
}

bool is_minimizing_by_definition(const MinimizingFunctionView& f) {
  const MaskBits full = full_bits(f.w_size());
  for (MaskBits a = 1; a <= full; ++a) {
    for (MaskBits b = a; b <= full; ++b) {
      const MaskBits ab = a & b;
      if (ab == 0 && !f.extended()) continue;
      if (f(ab) != (f(a) && f(b))) return false;
    }
  }
  return true;
}

bool is_minimizing_by_structure(const MinimizingFunctionView& f) {
  const std::size_t n = f.w_size();
  const MaskBits full = full_bits(n);
  std::size_t ones = 0;
  MaskBits meet = full;
  for (MaskBits x = 1; x <= full; ++x) {
    if (f(x)) {
      ++ones;
      meet &= x;
    }
  }
  const bool all_ones = ones == full;
  if (ones != 0 && !all_ones) {
    if (meet == 0) return false;
    for (MaskBits x = 1; x <= full; ++x) {
      if (f(x) != ((meet & ~x) == 0)) return false;
    }
  }
  if (!f.extended()) return true;
  // Disjoint nonempty pairs exist only when n >= 2. Under the shapes above,
  // two disjoint 1-sets exist iff f is 1 everywhere; a disjoint pair with a
  // 0 exists iff f is not 1 everywhere.
  if (n < 2) return true;
  return f(0) ? all_ones : !all_ones;
}

const char* shape_name(AtomShape shape) {
  switch (shape) {
    case AtomShape::kNoAtoms:
      return "no_atoms";
    case AtomShape::kSingleAtom:
      return "single_atom";
    case AtomShape::kAllSingletons:
      return "all_singletons";
  }
  return "?";
}

AtomFamily atoms(const MinimizingFunctionView& f) {
  if (!is_minimizing(f)) throw ContractViolation("atoms() requires a minimizing function");
  const std::size_t n = f.w_size();
  AtomFamily fam;
  std::vector<MaskBits> found;
  for (MaskBits x : subsets_by_cardinality(n)) {
    if (!f(x)) continue;
    bool covers_atom = false;
    for (MaskBits atom : found) {
      if ((atom & ~x) == 0) {
        covers_atom = true;
        break;
      }
    }
    if (covers_atom) continue;
    found.push_back(x);
    fam.atoms.emplace_back(x, n);
  }
  if (fam.atoms.empty()) {
    fam.shape = AtomShape::kNoAtoms;
  } else if (fam.atoms.size() == 1) {
    fam.shape = AtomShape::kSingleAtom;
  } else {
    bool singletons = fam.atoms.size() == n;
    for (const auto& atom : fam.atoms) singletons = singletons && atom.cardinality() == 1;
    if (!singletons) {
      throw InternalConsistencyError("minimizing function with " + std::to_string(fam.atoms.size()) +
                                     " atoms that are not all singletons");
    }
    fam.shape = AtomShape::kAllSingletons;
  }
  return fam;
}

bool check_atom_structure(const MinimizingFunctionView& f, const AtomFamily& fam) {
  const MaskBits full = full_bits(f.w_size());
  for (MaskBits x = 1; x <= full; ++x) {
    bool contains_atom = false;
    for (const auto& atom : fam.atoms) {
      if ((atom.bits() & ~x) == 0) {
        contains_atom = true;
        break;
      }
    }
    if (f(x) != contains_atom) return false;
  }
  return true;
}

bool is_s_min(const SRelationSpec& s, Route route) {
  switch (route) {
    case Route::kBruteForce:
      if (s.w_size() > kMaxBruteForceSMin) {
        throw CapacityError("brute-force S-min check is limited to |W| <= " +
                            std::to_string(kMaxBruteForceSMin));
      }
      return s_min_brute_force(s);
    case Route::kAtoms:
      return s_min_by_atoms(s);
    case Route::kAuto:
      break;
  }
  const bool by_atoms = s_min_by_atoms(s);
  if (s.w_size() <= kMaxBruteForceSMin && s_min_brute_force(s) != by_atoms) {
    throw InternalConsistencyError("S-min routes disagree");
  }
  return by_atoms;
}

bool is_s_min(const SRelationSpec& s, const Universe& w, Route route) {
  check_universe(s, w);
  return is_s_min(s, route);
}

bool is_complement_closed(const SRelationSpec& s) {
  if (!s.is_complement_extended()) return false;
  const MaskBits full = full_bits(s.w_size());
  for (MaskBits a = 1; a <= full; ++a) {
    if (s.eval_bits(a, 0)) return false;
    for (MaskBits b = 0; b <= full; ++b) {
      if (s.eval_bits(a, full & ~b) == s.eval_bits(a, b)) return false;
    }
  }
  return true;
}

bool is_complement_closed(const SRelationSpec& s, const Universe& w) {
  check_universe(s, w);
  return is_complement_closed(s);
}

bool is_smc(const SRelationSpec& s, Route route) {
  switch (route) {
    case Route::kBruteForce:
      return smc_direct(s);
    case Route::kAtoms:
      return smc_by_atoms(s);
    case Route::kAuto:
      break;
  }
  const bool by_atoms = smc_by_atoms(s);
  if (s.w_size() <= kMaxBruteForceSMin && smc_direct(s) != by_atoms) {
    throw InternalConsistencyError("S_MC routes disagree");
  }
  return by_atoms;
}

bool is_smc(const SRelationSpec& s, const Universe& w, Route route) {
  check_universe(s, w);
  return is_smc(s, route);
}

mpz_class count_smc_relations(std::size_t n) {
  check_w_size(n);
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), n, (1UL << n) - 1);
  return result;
}

void for_each_smc_relation(std::size_t n, const std::function<void(const SRelationSpec&)>& visit,
                           bool allow_over_cap) {
  check_w_size(n);
  if (n > kMaxSmcEnumeration && !allow_over_cap) {
    throw CapacityError("enumerating S_MC relations over |W| = " + std::to_string(n) +
                        " needs an explicit cap override");
  }
  const std::size_t side = std::size_t{1} << n;
  std::vector<std::uint8_t> digits(side, 0);
  while (true) {
    visit(SRelationSpec::unary_atom_map(n, digits));
    // Odometer: the largest left mask is the least significant digit.
    std::size_t pos = side - 1;
    while (pos >= 1 && digits[pos] == n - 1) {
      digits[pos] = 0;
      --pos;
    }
    if (pos == 0) return;
    ++digits[pos];
  }
}

std::vector<SRelationSpec> enumerate_smc_relations(const Universe& w, bool allow_over_cap) {
  std::vector<SRelationSpec> out;
  for_each_smc_relation(w.size(), [&](const SRelationSpec& s) { out.push_back(s); }, allow_over_cap);
  return out;
}

}  // namespace sapprox
