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

#include "sapprox/space_document.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "sapprox/errors.hpp"

namespace sapprox {

namespace {

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '.';
}

std::string at_line(std::size_t line, const std::string& message) {
  return "line " + std::to_string(line) + ": " + message;
}

// Cursor over one line of the document.
class LineReader {
 public:
  LineReader(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  std::string label() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a label");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::vector<std::string> label_list() {
    std::vector<std::string> out{label()};
    while (accept(",")) out.push_back(label());
    return out;
  }
  SpaceDocument::Subset subset() {
    SpaceDocument::Subset s;
    s.line = line_;
    expect("{");
    if (accept("}")) return s;
    s.labels = label_list();
    expect("}");
    return s;
  }
  void expect_end() {
    if (!done()) fail("unexpected trailing text '" + std::string(text_.substr(pos_)) + "'");
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(at_line(line_, message)); }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  std::string out(hash == std::string_view::npos ? line : line.substr(0, hash));
  while (!out.empty() && (out.back() == '\r' || out.back() == ' ' || out.back() == '\t')) out.pop_back();
  return out;
}

Universe make_universe(const std::vector<std::string>& labels, const char* name) {
  if (labels.size() > kMaxUniverseSize) {
    throw CapacityError(std::string(name) + " has " + std::to_string(labels.size()) +
                        " elements; the cap is " + std::to_string(kMaxUniverseSize));
  }
  try {
    return Universe(labels);
  } catch (const DomainError& e) {
    throw ValidationError(std::string(name) + ": " + e.what());
  }
}

SubsetMask resolve(const Universe& w, const SpaceDocument::Subset& s, const char* what) {
  MaskBits bits = 0;
  for (const auto& label : s.labels) {
    auto idx = w.index_of(label);
    if (!idx) throw ValidationError(at_line(s.line, std::string(what) + " mentions '" + label + "' which is not in W"));
    const MaskBits bit = MaskBits{1} << *idx;
    if ((bits & bit) != 0) throw ValidationError(at_line(s.line, std::string(what) + " repeats '" + label + "'"));
    bits |= bit;
  }
  return {bits, w.size()};
}

SRelationSpec build_atom_map(const SpaceDocument& doc, const Universe& w) {
  const std::size_t side = std::size_t{1} << w.size();
  std::vector<std::uint8_t> atom_of(side, 0);
  std::vector<bool> defined(side, false);
  for (const auto& e : doc.atom_entries) {
    const auto left = resolve(w, e.left, "atom_map entry");
    if (left.is_empty()) throw ValidationError(at_line(e.line, "atom_map entries need a nonempty left subset"));
    if (defined[left.bits()]) {
      throw ValidationError(at_line(e.line, "duplicate atom_map entry for " + format_subset(w, left)));
    }
    const auto atom = w.index_of(e.atom);
    if (!atom) throw ValidationError(at_line(e.line, "atom '" + e.atom + "' is not in W"));
    defined[left.bits()] = true;
    atom_of[left.bits()] = static_cast<std::uint8_t>(*atom);
  }
  for (std::size_t a = 1; a < side; ++a) {
    if (!defined[a]) {
      throw ValidationError("atom_map is missing an entry for " +
                            format_subset(w, SubsetMask(static_cast<MaskBits>(a), w.size())));
    }
  }
  return SRelationSpec::unary_atom_map(w.size(), std::move(atom_of));
}

SRelationSpec build_table(const SpaceDocument& doc, const Universe& w) {
  if (w.size() > kMaxTruthTableUniverse) {
    throw CapacityError("table relations are limited to |W| <= " + std::to_string(kMaxTruthTableUniverse));
  }
  const std::size_t side = std::size_t{1} << w.size();
  std::vector<std::uint8_t> cells(side * side, 0);
  std::vector<bool> defined(side * side, false);
  bool any_empty_column = false;
  for (const auto& e : doc.table_entries) {
    const auto left = resolve(w, e.left, "table entry");
    const auto right = resolve(w, e.right, "table entry");
    if (left.is_empty()) throw ValidationError(at_line(e.line, "table entries need a nonempty left subset"));
    const std::size_t cell = left.bits() * side + right.bits();
    if (defined[cell]) {
      throw ValidationError(at_line(e.line, "duplicate table entry for " + format_subset(w, left) + " " +
                                                format_subset(w, right)));
    }
    defined[cell] = true;
    cells[cell] = static_cast<std::uint8_t>(e.value);
    any_empty_column = any_empty_column || right.is_empty();
  }
  for (std::size_t a = 1; a < side; ++a) {
    for (std::size_t b = any_empty_column ? 0 : 1; b < side; ++b) {
      if (!defined[a * side + b]) {
        throw ValidationError("table is missing an entry for " +
                              format_subset(w, SubsetMask(static_cast<MaskBits>(a), w.size())) + " " +
                              format_subset(w, SubsetMask(static_cast<MaskBits>(b), w.size())));
      }
    }
  }
  return SRelationSpec::truth_table(w.size(), std::move(cells), any_empty_column);
}

}  // namespace

SpaceDocument parse_document(std::string_view text) {
  SpaceDocument doc;
  enum class Section { kNone, kU, kW, kT, kS };
  Section section = Section::kNone;
  std::set<char> seen_headers;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string line = strip_comment(text.substr(start, end - start));
    start = end + 1;
    LineReader in(line, line_no);
    if (in.done()) continue;

    bool header = false;
    for (char h : {'U', 'W', 'T', 'S'}) {
      const std::string tag = std::string(1, h) + ":";
      if (line.find_first_not_of(" \t") != line.find(tag)) continue;
      if (!in.accept(tag)) continue;
      header = true;
      if (!seen_headers.insert(h).second) in.fail("section " + tag + " appears twice");
      const std::string order = "UWTS";
      if (order.find(h) != seen_headers.size() - 1) in.fail("sections must appear in the order U:, W:, T:, S:");
      switch (h) {
        case 'U':
          doc.universe_u = in.label_list();
          section = Section::kU;
          break;
        case 'W':
          doc.universe_w = in.label_list();
          section = Section::kW;
          break;
        case 'T':
          section = Section::kT;
          break;
        case 'S':
          doc.s_kind = in.label();
          doc.s_line = line_no;
          if (doc.s_kind != "inclusion" && doc.s_kind != "union_cover" && doc.s_kind != "atom_map" &&
              doc.s_kind != "table") {
            in.fail("unknown relation kind '" + doc.s_kind + "'");
          }
          section = Section::kS;
          break;
      }
      in.expect_end();
      break;
    }
    if (header) continue;

    switch (section) {
      case Section::kT: {
        SpaceDocument::TEntry e;
        e.line = line_no;
        e.point = in.label();
        in.expect("=");
        e.image = in.subset();
        in.expect_end();
        doc.t_map.push_back(std::move(e));
        break;
      }
      case Section::kS:
        if (doc.s_kind == "atom_map") {
          SpaceDocument::AtomEntry e;
          e.line = line_no;
          e.left = in.subset();
          in.expect("->");
          e.atom = in.label();
          in.expect_end();
          doc.atom_entries.push_back(std::move(e));
        } else if (doc.s_kind == "table") {
          SpaceDocument::TableEntry e;
          e.line = line_no;
          e.left = in.subset();
          e.right = in.subset();
          in.expect("=");
          if (in.accept("0")) {
            e.value = 0;
          } else if (in.accept("1")) {
            e.value = 1;
          } else {
            in.fail("table values must be 0 or 1");
          }
          in.expect_end();
          doc.table_entries.push_back(std::move(e));
        } else {
          in.fail("relation kind '" + doc.s_kind + "' takes no entries");
        }
        break;
      default:
        in.fail("content outside a T: or S: section");
    }
  }
  for (char h : {'U', 'W', 'T', 'S'}) {
    if (!seen_headers.count(h)) throw ParseError(std::string("missing section ") + h + ":");
  }
  return doc;
}

SApproximationSpace build_space(const SpaceDocument& doc) {
  Universe u = make_universe(doc.universe_u, "U");
  Universe w = make_universe(doc.universe_w, "W");
  std::vector<std::optional<SubsetMask>> t(u.size());
  for (const auto& e : doc.t_map) {
    const auto point = u.index_of(e.point);
    if (!point) throw ValidationError(at_line(e.line, "T maps '" + e.point + "' which is not in U"));
    if (t[*point]) throw ValidationError(at_line(e.line, "T(" + e.point + ") is defined twice"));
    const auto image = resolve(w, e.image, ("T(" + e.point + ")").c_str());
    if (image.is_empty()) throw ValidationError(at_line(e.line, "T(" + e.point + ") must be nonempty"));
    t[*point] = image;
  }
  std::vector<SubsetMask> t_map;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!t[i]) throw ValidationError("T is missing an entry for '" + u.label(i) + "'");
    t_map.push_back(*t[i]);
  }

  std::optional<SRelationSpec> s;
  if (doc.s_kind == "inclusion") {
    s = SRelationSpec::inclusion(w.size());
  } else if (doc.s_kind == "union_cover") {
    s = SRelationSpec::union_cover(w.size());
  } else if (doc.s_kind == "atom_map") {
    s = build_atom_map(doc, w);
  } else if (doc.s_kind == "table") {
    s = build_table(doc, w);
  } else {
    throw ValidationError("unknown relation kind '" + doc.s_kind + "'");
  }
  return SApproximationSpace(std::move(u), std::move(w), std::move(t_map), std::move(*s));
}

SApproximationSpace parse_space(std::string_view text) { return build_space(parse_document(text)); }

std::string format_space(const SApproximationSpace& g) {
  std::ostringstream out;
  const auto join = [&](const Universe& x) {
    for (std::size_t i = 0; i < x.size(); ++i) out << (i ? ", " : "") << x.label(i);
    out << '\n';
  };
  out << "U: ";
  join(g.u());
  out << "W: ";
  join(g.w());
  out << "T:\n";
  for (std::size_t i = 0; i < g.u().size(); ++i) {
    out << "  " << g.u().label(i) << " = " << format_subset(g.w(), g.t(i)) << '\n';
  }
  const auto& s = g.s();
  out << "S: " << kind_name(s.kind()) << '\n';
  const std::size_t n = g.w().size();
  const MaskBits full = full_bits(n);
  if (s.kind() == SRelationKind::kUnaryAtomMap) {
    for (MaskBits a = 1; a <= full; ++a) {
      out << "  " << format_subset(g.w(), SubsetMask(a, n)) << " -> " << g.w().label(s.atom_element(a)) << '\n';
    }
  } else if (s.kind() == SRelationKind::kTruthTable) {
    for (MaskBits a = 1; a <= full; ++a) {
      for (MaskBits b = s.is_complement_extended() ? 0 : 1; b <= full; ++b) {
        out << "  " << format_subset(g.w(), SubsetMask(a, n)) << ' ' << format_subset(g.w(), SubsetMask(b, n))
            << " = " << (s.eval_bits(a, b) ? 1 : 0) << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace sapprox
