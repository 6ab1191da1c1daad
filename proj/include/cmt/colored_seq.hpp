// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Sequences of ground elements stored as sets of (index, element) pairs, and
// their colorings.
//
// A root sequence owns the list of its elements; every subsequence keeps a
// pointer to that list, so two subsequences are comparable exactly when they
// share a root. Repeated elements stay distinguishable through their index.

#ifndef CMT_COLORED_SEQ_HPP_
#define CMT_COLORED_SEQ_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cmt/error.hpp"
#include "cmt/matroid.hpp"

namespace cmt {

struct ColorId {
  std::uint64_t value = 0;

  friend auto operator<=>(const ColorId&, const ColorId&) = default;
};

struct Entry {
  std::size_t index = 0;
  GroundElement element;

  friend auto operator<=>(const Entry&, const Entry&) = default;
};

class IndexedSequence {
 public:
  IndexedSequence() : root_(std::make_shared<const std::vector<GroundElement>>()) {}

  // The root sequence (e_0, e_1, ...) with indices 0..n-1.
  static IndexedSequence from_elements(std::vector<GroundElement> elements) {
    IndexedSequence s;
    s.entries_.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      s.entries_.push_back(Entry{i, elements[i]});
    }
    s.root_ = std::make_shared<const std::vector<GroundElement>>(
        std::move(elements));
    return s;
  }

  // Subsequence of the same root made of `entries` (any order, no repeats).
  IndexedSequence with_entries(std::vector<Entry> entries) const {
    std::sort(entries.begin(), entries.end());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const Entry& e = entries[i];
      if (e.index >= root_->size() || (*root_)[e.index] != e.element) {
        throw Error("entry (" + std::to_string(e.index) + ", " +
                    std::to_string(e.element.id) +
                    ") does not belong to the parent sequence");
      }
      if (i > 0 && entries[i - 1].index == e.index) {
        throw Error("index " + std::to_string(e.index) + " repeated");
      }
    }
    IndexedSequence s;
    s.root_ = root_;
    s.entries_ = std::move(entries);
    return s;
  }

  // Subsequence of the same root at the given root indices.
  IndexedSequence with_indices(const std::vector<std::size_t>& indices) const {
    std::vector<Entry> es;
    es.reserve(indices.size());
    for (const auto i : indices) {
      if (i >= root_->size()) {
        throw Error("index " + std::to_string(i) + " outside the sequence");
      }
      es.push_back(Entry{i, (*root_)[i]});
    }
    return with_entries(std::move(es));
  }

  template <class Pred>
  IndexedSequence filter(Pred pred) const {
    IndexedSequence s;
    s.root_ = root_;
    for (const auto& e : entries_) {
      if (pred(e)) s.entries_.push_back(e);
    }
    return s;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }

  // Length of the root sequence; colorings are indexed up to this bound.
  std::size_t root_size() const { return root_->size(); }
  bool same_parent(const IndexedSequence& other) const {
    return root_ == other.root_;
  }

  bool contains_index(std::size_t index) const {
    return std::binary_search(
        entries_.begin(), entries_.end(), Entry{index, {}},
        [](const Entry& a, const Entry& b) { return a.index < b.index; });
  }

  // Elements in sequence order, repeats kept.
  std::vector<GroundElement> elements() const {
    std::vector<GroundElement> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.element);
    return out;
  }

  // S^set: the distinct elements, sorted by id.
  std::vector<GroundElement> set_image() const {
    auto out = elements();
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.index);
    return out;
  }

  friend bool operator==(const IndexedSequence& a, const IndexedSequence& b) {
    return a.root_ == b.root_ && a.entries_ == b.entries_;
  }

 private:
  std::shared_ptr<const std::vector<GroundElement>> root_;
  std::vector<Entry> entries_;
};

namespace detail {

inline void require_same_parent(const IndexedSequence& a,
                                const IndexedSequence& b) {
  if (!a.same_parent(b)) {
    throw MixedParents("operands are subsequences of different sequences");
  }
}

}  // namespace detail

inline IndexedSequence difference(const IndexedSequence& a,
                                  const IndexedSequence& b) {
  detail::require_same_parent(a, b);
  return a.filter([&](const Entry& e) { return !b.contains_index(e.index); });
}

inline IndexedSequence intersection(const IndexedSequence& a,
                                    const IndexedSequence& b) {
  detail::require_same_parent(a, b);
  return a.filter([&](const Entry& e) { return b.contains_index(e.index); });
}

inline IndexedSequence union_of(const IndexedSequence& a,
                                const IndexedSequence& b) {
  detail::require_same_parent(a, b);
  std::vector<Entry> merged;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(merged));
  return a.with_entries(std::move(merged));
}

inline std::size_t length(const IndexedSequence& s) { return s.size(); }

inline std::vector<GroundElement> set_image(const IndexedSequence& s) {
  return s.set_image();
}

// Total map from root indices to colors, plus optionally declared colors that
// no entry uses.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<ColorId> colors,
                    std::vector<ColorId> unused = {})
      : colors_(std::move(colors)), unused_(std::move(unused)) {}

  // Every entry its own color (the color id equals the root index).
  static Coloring distinct(std::size_t n) {
    std::vector<ColorId> cs(n);
    for (std::size_t i = 0; i < n; ++i) cs[i] = ColorId{i};
    return Coloring(std::move(cs));
  }

  std::size_t size() const { return colors_.size(); }

  ColorId color(std::size_t index) const {
    if (index >= colors_.size()) {
      throw UnknownColor("index " + std::to_string(index) + " has no color");
    }
    return colors_[index];
  }
  ColorId color(const Entry& e) const { return color(e.index); }

  void set(std::size_t index, ColorId c) { colors_.at(index) = c; }

  bool covers(const IndexedSequence& s) const {
    return s.root_size() <= colors_.size();
  }

  std::set<ColorId> palette() const {
    std::set<ColorId> p(colors_.begin(), colors_.end());
    p.insert(unused_.begin(), unused_.end());
    return p;
  }

  // Smallest color id larger than every color in the palette.
  ColorId fresh_color() const {
    std::uint64_t top = 0;
    for (const auto& c : colors_) top = std::max(top, c.value + 1);
    for (const auto& c : unused_) top = std::max(top, c.value + 1);
    return ColorId{top};
  }

  const std::vector<ColorId>& assignment() const { return colors_; }

 private:
  std::vector<ColorId> colors_;
  std::vector<ColorId> unused_;
};

inline bool is_rainbow(const IndexedSequence& t, const Coloring& c) {
  std::set<ColorId> seen;
  for (const auto& e : t) {
    if (!seen.insert(c.color(e)).second) return false;
  }
  return true;
}

// c(T): the set of colors used by T.
inline std::set<ColorId> colors_of(const IndexedSequence& t,
                                   const Coloring& c) {
  std::set<ColorId> out;
  for (const auto& e : t) out.insert(c.color(e));
  return out;
}

// C_U: the entries of s whose color lies in u.
inline IndexedSequence color_class(const IndexedSequence& s, const Coloring& c,
                                   const std::set<ColorId>& u) {
  const auto pal = c.palette();
  for (const auto& col : u) {
    if (!pal.count(col)) {
      throw UnknownColor("color " + std::to_string(col.value) +
                         " is not in the palette");
    }
  }
  return s.filter([&](const Entry& e) { return u.count(c.color(e)) > 0; });
}

// Color counts of a sequence, ordered by count descending, then id ascending.
struct ColorCountProfile {
  std::map<ColorId, std::size_t> counts;
  std::vector<ColorId> ordering;

  std::size_t count(ColorId c) const {
    const auto it = counts.find(c);
    return it == counts.end() ? 0 : it->second;
  }
};

inline ColorCountProfile color_profile(const IndexedSequence& s,
                                       const Coloring& c) {
  ColorCountProfile p;
  for (const auto& e : s) ++p.counts[c.color(e)];
  for (const auto& [col, n] : p.counts) p.ordering.push_back(col);
  std::stable_sort(p.ordering.begin(), p.ordering.end(),
                   [&](ColorId a, ColorId b) {
                     return p.counts.at(a) > p.counts.at(b);
                   });
  return p;
}

// Which reading of the color thresholds to check. kAbstract bounds the first
// color by r and the others by r-1; kTheoremBody bounds them by m and m-1.
enum class ThresholdConvention { kAbstract, kTheoremBody };

struct ProfileCheck {
  bool ok = false;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

// Hypotheses of the general colorful theorem: |S| > m(r-1), at most r entries
// of the most frequent color and at most r-1 of every other color.
inline ProfileCheck check_general_profile(
    const IndexedSequence& s, const Coloring& c, std::size_t r, std::size_t m,
    ThresholdConvention conv = ThresholdConvention::kAbstract) {
  if (r == 0) return {false, "r must be at least 1"};
  if (s.size() <= m * (r - 1)) {
    return {false, "length " + std::to_string(s.size()) +
                       " does not exceed m(r-1) = " +
                       std::to_string(m * (r - 1))};
  }
  const auto prof = color_profile(s, c);
  const std::size_t first_cap = conv == ThresholdConvention::kAbstract ? r : m;
  const std::size_t other_cap =
      conv == ThresholdConvention::kAbstract ? r - 1 : (m == 0 ? 0 : m - 1);
  for (std::size_t i = 0; i < prof.ordering.size(); ++i) {
    const ColorId col = prof.ordering[i];
    const std::size_t n = prof.counts.at(col);
    const std::size_t cap = i == 0 ? first_cap : other_cap;
    if (n > cap) {
      return {false, std::string(i == 0 ? "first" : "non-first") + " color " +
                         std::to_string(col.value) + " appears " +
                         std::to_string(n) + " times, more than " +
                         std::to_string(cap)};
    }
  }
  return {true, {}};
}

// Hypotheses of the special colorful theorem: a palette of exactly m colors,
// one of them used at least r times, every other at least r-1 times. Palette
// colors beyond the used ones count as declared-but-unused (count zero).
inline ProfileCheck check_special_profile(const IndexedSequence& s,
                                          const Coloring& c, std::size_t r,
                                          std::size_t m) {
  if (r == 0) return {false, "r must be at least 1"};
  const auto prof = color_profile(s, c);
  if (prof.ordering.size() > m) {
    return {false, std::to_string(prof.ordering.size()) +
                       " colors used, more than m = " + std::to_string(m)};
  }
  if (m == 0) return {false, "m must be at least 1"};
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t n =
        i < prof.ordering.size() ? prof.counts.at(prof.ordering[i]) : 0;
    const std::size_t need = i == 0 ? r : r - 1;
    if (n < need) {
      return {false, "color rank " + std::to_string(i + 1) + " has " +
                         std::to_string(n) + " entries, fewer than " +
                         std::to_string(need)};
    }
  }
  return {true, {}};
}

}  // namespace cmt

#endif  // CMT_COLORED_SEQ_HPP_
