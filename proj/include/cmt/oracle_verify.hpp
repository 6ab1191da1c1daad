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

// Exhaustive ground truth for small instances.
//
// Nothing here calls the cycle solver. Closures are computed directly through
// the oracle and cached as bitmasks over the distinct elements involved.

#ifndef CMT_ORACLE_VERIFY_HPP_
#define CMT_ORACLE_VERIFY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cmt/colored_seq.hpp"
#include "cmt/error.hpp"
#include "cmt/matroid.hpp"
#include "cmt/solver.hpp"

namespace cmt {

struct BruteForceBudget {
  std::size_t max_entries = 12;
  std::size_t max_r = 4;
  // Cap on visited partial labelings.
  std::uint64_t max_assignments = 200'000'000;
};

struct BruteForceStats {
  std::uint64_t nodes = 0;
};

namespace detail {

// Distinct elements of a list mapped to bit positions, with memoized closure
// masks.
class MaskClosure {
 public:
  MaskClosure(const MatroidOracle& m, std::vector<GroundElement> slots)
      : m_(m), slots_(std::move(slots)) {
    if (slots_.size() > 64) {
      throw BudgetExceeded("more than 64 distinct elements");
    }
  }

  std::size_t size() const { return slots_.size(); }
  const std::vector<GroundElement>& slots() const { return slots_; }

  std::uint64_t closure(std::uint64_t mask) {
    const auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    std::vector<GroundElement> y;
    for (std::size_t j = 0; j < slots_.size(); ++j) {
      if (mask >> j & 1) y.push_back(slots_[j]);
    }
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < slots_.size(); ++j) {
      if (mask >> j & 1 || m_.in_closure(slots_[j], y)) out |= std::uint64_t{1} << j;
    }
    cache_.emplace(mask, out);
    return out;
  }

 private:
  const MatroidOracle& m_;
  std::vector<GroundElement> slots_;
  std::unordered_map<std::uint64_t, std::uint64_t> cache_;
};

class BruteSearch {
 public:
  BruteSearch(const MatroidOracle& m, const IndexedSequence& s,
              const Coloring* c, std::size_t r, const BruteForceBudget& budget,
              BruteForceStats& stats)
      : s_(s), c_(c), r_(r), budget_(budget), stats_(stats),
        closure_(m, s.set_image()) {
    const auto& slots = closure_.slots();
    for (const auto& e : s_) {
      const auto pos = static_cast<std::size_t>(
          std::lower_bound(slots.begin(), slots.end(), e.element) -
          slots.begin());
      slot_.push_back(pos);
    }
    for (std::size_t j = 0; j < slots.size(); ++j) {
      if (!is_loop(m, slots[j])) nonloop_ |= std::uint64_t{1} << j;
    }
    suffix_.assign(s_.size() + 1, 0);
    for (std::size_t i = s_.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1] | std::uint64_t{1} << slot_[i];
    }
    if (c_ != nullptr) {
      std::map<ColorId, std::size_t> dense;
      for (const auto& e : s_) {
        dense.emplace(c_->color(e), dense.size());
      }
      if (dense.size() > 64) throw BudgetExceeded("more than 64 colors");
      for (const auto& e : s_) color_.push_back(dense.at(c_->color(e)));
    }
    label_.assign(s_.size(), 0);
    part_mask_.assign(r_ + 1, 0);
    part_colors_.assign(r_ + 1, 0);
  }

  // Labels (0 = unused, 1..r = part) of the lexicographically first valid
  // assignment.
  std::optional<std::vector<std::size_t>> run() {
    if (r_ == 0) return std::nullopt;
    if (dfs(0)) return label_;
    return std::nullopt;
  }

 private:
  // Necessary condition for completing the current partial labeling: parts
  // can only grow with entries pos..n-1.
  bool feasible(std::size_t pos) {
    const std::uint64_t rest = suffix_[pos];
    if (((part_mask_[1] | rest) & nonloop_) == 0) return false;
    for (std::size_t i = 1; i < r_; ++i) {
      const std::uint64_t upper = closure_.closure(part_mask_[i + 1] | rest);
      if ((part_mask_[i] & ~upper) != 0) return false;
    }
    return true;
  }

  bool dfs(std::size_t pos) {
    if (++stats_.nodes > budget_.max_assignments) {
      throw BudgetExceeded("brute force exceeded " +
                           std::to_string(budget_.max_assignments) +
                           " labelings");
    }
    if (!feasible(pos)) return false;
    if (pos == s_.size()) return true;
    const std::uint64_t bit = std::uint64_t{1} << slot_[pos];
    for (std::size_t lab = 0; lab <= r_; ++lab) {
      label_[pos] = lab;
      if (lab == 0) {
        if (dfs(pos + 1)) return true;
        continue;
      }
      std::uint64_t cbit = 0;
      if (c_ != nullptr) {
        cbit = std::uint64_t{1} << color_[pos];
        if (part_colors_[lab] & cbit) continue;
      }
      // Repeated elements share a slot, so keep a count via a saved mask.
      const std::uint64_t saved = part_mask_[lab];
      part_mask_[lab] |= bit;
      part_colors_[lab] |= cbit;
      const bool found = dfs(pos + 1);
      part_mask_[lab] = saved;
      part_colors_[lab] &= ~cbit;
      if (found) return true;
    }
    label_[pos] = 0;
    return false;
  }

  const IndexedSequence& s_;
  const Coloring* c_;
  std::size_t r_;
  const BruteForceBudget& budget_;
  BruteForceStats& stats_;
  MaskClosure closure_;
  std::vector<std::size_t> slot_;
  std::vector<std::size_t> color_;
  std::uint64_t nonloop_ = 0;
  std::vector<std::uint64_t> suffix_;
  std::vector<std::size_t> label_;
  std::vector<std::uint64_t> part_mask_;
  std::vector<std::uint64_t> part_colors_;
};

inline std::optional<Partition> brute_impl(const MatroidOracle& m,
                                           const IndexedSequence& s,
                                           const Coloring* c, std::size_t r,
                                           const BruteForceBudget& budget,
                                           BruteForceStats* stats) {
  if (s.size() > budget.max_entries) {
    throw BudgetExceeded("sequence of length " + std::to_string(s.size()) +
                         " exceeds the budget of " +
                         std::to_string(budget.max_entries) + " entries");
  }
  if (r > budget.max_r) {
    throw BudgetExceeded("r = " + std::to_string(r) + " exceeds the budget of " +
                         std::to_string(budget.max_r));
  }
  for (const auto& e : s) {
    if (!m.contains(e.element)) {
      throw UnknownElement("sequence entry " + std::to_string(e.index) +
                           " references unknown element " +
                           std::to_string(e.element.id));
    }
  }
  BruteForceStats local;
  BruteSearch search(m, s, c, r, budget, stats ? *stats : local);
  const auto labels = search.run();
  if (!labels) return std::nullopt;

  std::vector<std::vector<Entry>> parts(r);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((*labels)[i] > 0) parts[(*labels)[i] - 1].push_back(s[i]);
  }
  Partition out;
  for (auto& p : parts) out.parts.push_back(s.with_entries(std::move(p)));
  out.certificate = certify(m, out.parts);
  const auto rep = c ? verify_partition(m, s, *c, r, out.parts)
                     : verify_partition(m, s, r, out.parts);
  if (!rep) {
    throw InternalInvariantBroken(std::string("brute-force witness fails ") +
                                  to_string(rep.failed));
  }
  return out;
}

}  // namespace detail

// First valid labeling in lexicographic order (labels none < 1 < ... < r), or
// nullopt when no labeling of S yields a Tverberg partition.
inline std::optional<Partition> brute_force_solve(
    const MatroidOracle& m, const IndexedSequence& s, const Coloring& c,
    std::size_t r, const BruteForceBudget& budget = {},
    BruteForceStats* stats = nullptr) {
  return detail::brute_impl(m, s, &c, r, budget, stats);
}

// Colorless variant.
inline std::optional<Partition> brute_force_solve(
    const MatroidOracle& m, const IndexedSequence& s, std::size_t r,
    const BruteForceBudget& budget = {}, BruteForceStats* stats = nullptr) {
  return detail::brute_impl(m, s, nullptr, r, budget, stats);
}

inline void require_basis(const MatroidOracle& m,
                          const std::vector<GroundElement>& b) {
  for (const auto& e : b) {
    if (!m.contains(e)) {
      throw NotABasis("element " + std::to_string(e.id) +
                      " is not in the ground set");
    }
  }
  if (!is_basis(m, b)) {
    throw NotABasis("the given elements are not a basis (size " +
                    std::to_string(b.size()) + ", rank " +
                    std::to_string(m.rank()) + ")");
  }
}

// e_1 repeated r-1 times, then e_2 repeated r-1 times, ..., e_m.
inline IndexedSequence tight_instance(const MatroidOracle& m,
                                      const std::vector<GroundElement>& basis,
                                      std::size_t r) {
  require_basis(m, basis);
  if (r == 0) throw PreconditionViolated("r must be at least 1");
  std::vector<GroundElement> seq;
  for (const auto& e : basis) {
    for (std::size_t i = 0; i + 1 < r; ++i) seq.push_back(e);
  }
  return IndexedSequence::from_elements(std::move(seq));
}

struct TightnessReport {
  // Every division has intersection of closures equal to cl(empty).
  bool tight = false;
  // Cross-check: the intersection of closures always equalled the closure of
  // the intersection of set images.
  bool lemma_agrees = true;
  std::uint64_t divisions = 0;
};

// Examines every division of tight_instance(basis, r) into r disjoint
// subsequences. Closures depend only on set images, so a division is
// represented by the set of parts receiving a copy of each e_j: any subset
// of {1..r} with at most r-1 members.
inline TightnessReport check_tightness(const MatroidOracle& m,
                                       const std::vector<GroundElement>& basis,
                                       std::size_t r,
                                       const BruteForceBudget& budget = {}) {
  require_basis(m, basis);
  if (r == 0) throw PreconditionViolated("r must be at least 1");
  const std::size_t mm = basis.size();
  if (mm * (r - 1) > budget.max_entries) {
    throw BudgetExceeded("tight instance of length " +
                         std::to_string(mm * (r - 1)) + " exceeds the budget");
  }
  if (r > 16 || mm > 20) throw BudgetExceeded("instance too large");

  const auto ground = m.ground();
  // Closure (over the ground set) of every subset of the basis.
  std::vector<std::vector<char>> cl(std::size_t{1} << mm);
  for (std::size_t mask = 0; mask < cl.size(); ++mask) {
    std::vector<GroundElement> y;
    for (std::size_t j = 0; j < mm; ++j) {
      if (mask >> j & 1) y.push_back(basis[j]);
    }
    cl[mask].resize(ground.size());
    for (std::size_t g = 0; g < ground.size(); ++g) {
      cl[mask][g] = m.in_closure(ground[g], y) ? 1 : 0;
    }
  }
  const std::vector<char>& loops = cl[0];

  std::vector<std::size_t> choices;  // subsets of parts with < r members
  for (std::size_t t = 0; t < (std::size_t{1} << r); ++t) {
    if (static_cast<std::size_t>(__builtin_popcountll(t)) + 1 <= r) {
      choices.push_back(t);
    }
  }

  TightnessReport rep;
  rep.tight = true;
  std::vector<std::size_t> pick(mm, 0);
  while (true) {
    ++rep.divisions;
    std::vector<std::size_t> part(r, 0);
    for (std::size_t j = 0; j < mm; ++j) {
      for (std::size_t i = 0; i < r; ++i) {
        if (choices[pick[j]] >> i & 1) part[i] |= std::size_t{1} << j;
      }
    }
    std::size_t common = cl.size() - 1;
    for (std::size_t i = 0; i < r; ++i) common &= part[i];
    for (std::size_t g = 0; g < ground.size(); ++g) {
      bool in_all = true;
      for (std::size_t i = 0; i < r && in_all; ++i) in_all = cl[part[i]][g];
      if (in_all != static_cast<bool>(loops[g])) rep.tight = false;
      if (in_all != static_cast<bool>(cl[common][g])) rep.lemma_agrees = false;
    }
    std::size_t j = 0;
    while (j < mm && ++pick[j] == choices.size()) pick[j++] = 0;
    if (j == mm) break;
  }
  return rep;
}

// cl(U) n cl(V) = cl(U n V), checked on every ground element. No hypothesis
// on U and V.
inline bool intersection_identity_holds(const MatroidOracle& m,
                                        std::vector<GroundElement> u,
                                        std::vector<GroundElement> v) {
  std::sort(u.begin(), u.end());
  std::sort(v.begin(), v.end());
  std::vector<GroundElement> both;
  std::set_intersection(u.begin(), u.end(), v.begin(), v.end(),
                        std::back_inserter(both));
  for (const auto& x : m.ground()) {
    const bool lhs = m.in_closure(x, u) && m.in_closure(x, v);
    if (lhs != m.in_closure(x, both)) return false;
  }
  return true;
}

inline bool check_intersection_lemma(const MatroidOracle& m,
                                     const std::vector<GroundElement>& basis,
                                     const std::vector<GroundElement>& u,
                                     const std::vector<GroundElement>& v) {
  require_basis(m, basis);
  auto inside = [&](const std::vector<GroundElement>& xs) {
    return std::all_of(xs.begin(), xs.end(), [&](const GroundElement& x) {
      return std::find(basis.begin(), basis.end(), x) != basis.end();
    });
  };
  if (!inside(u) || !inside(v)) {
    throw NotABasis("U and V must be subsets of the basis");
  }
  return intersection_identity_holds(m, u, v);
}

struct RotaResult {
  IndexedSequence sequence;  // the bases concatenated
  Coloring coloring;         // color i for the i-th basis
  std::optional<Partition> witness;
};

// Searches for m disjoint rainbow subsequences each spanning M, given m bases
// (one per color).
inline RotaResult rota_check(const MatroidOracle& m,
                             const std::vector<std::vector<GroundElement>>& bases,
                             const BruteForceBudget& budget = {},
                             BruteForceStats* stats = nullptr) {
  const std::size_t mm = m.rank();
  if (bases.size() != mm) {
    throw NotABasis("expected " + std::to_string(mm) + " bases, got " +
                    std::to_string(bases.size()));
  }
  if (mm * mm > budget.max_entries) {
    throw BudgetExceeded("m^2 = " + std::to_string(mm * mm) +
                         " exceeds the budget");
  }
  std::vector<GroundElement> elems;
  std::vector<ColorId> colors;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    require_basis(m, bases[i]);
    for (const auto& e : bases[i]) {
      elems.push_back(e);
      colors.push_back(ColorId{i});
    }
  }
  RotaResult res{IndexedSequence::from_elements(elems), Coloring(colors), {}};

  // Every part takes exactly one entry of each color, so the search assigns
  // each entry a part not yet holding its color, keeping parts independent.
  BruteForceStats local;
  BruteForceStats& st = stats ? *stats : local;
  std::vector<std::vector<GroundElement>> part(mm);
  std::vector<std::vector<std::size_t>> part_idx(mm);
  std::vector<std::vector<char>> has_color(mm, std::vector<char>(mm, 0));
  const std::size_t n = elems.size();

  auto dfs = [&](auto&& self, std::size_t pos) -> bool {
    if (++st.nodes > budget.max_assignments) {
      throw BudgetExceeded("rota search exceeded the labeling budget");
    }
    if (pos == n) {
      return std::all_of(part.begin(), part.end(), [&](const auto& p) {
        return rank(m, p) == mm;
      });
    }
    const std::size_t col = colors[pos].value;
    for (std::size_t i = 0; i < mm; ++i) {
      if (has_color[i][col]) continue;
      if (m.in_closure(elems[pos], part[i])) continue;
      part[i].push_back(elems[pos]);
      part_idx[i].push_back(pos);
      has_color[i][col] = 1;
      if (self(self, pos + 1)) return true;
      part[i].pop_back();
      part_idx[i].pop_back();
      has_color[i][col] = 0;
    }
    return false;
  };
  if (mm == 0 || dfs(dfs, 0)) {
    Partition w;
    for (const auto& idx : part_idx) {
      w.parts.push_back(res.sequence.with_indices(idx));
    }
    w.certificate = certify(m, w.parts);
    res.witness = std::move(w);
  }
  return res;
}

}  // namespace cmt

#endif  // CMT_ORACLE_VERIFY_HPP_
