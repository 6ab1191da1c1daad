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

// Colorful matroidal Tverberg partitions.
//
// Given a colored sequence S of non-loops in a matroid M, the solvers return r
// pairwise disjoint rainbow subsequences S_1..S_r with
//
//   cl(empty) < cl(S_1) <= cl(S_2) <= ... <= cl(S_r).
//
// solve_special handles the case of exactly m = rk(S) colors where one color
// has at least r entries and every other at least r-1. It keeps an inclusion
// maximal rainbow independent subsequence RI and, while RI does not span,
// runs a cycle over "replacement rules" (K, I, p -> I^p):
//
//   (a) every entry colored in K lies in cl(I): the problem collapses into
//       the flat cl(I), of smaller rank, after merging two colors;
//   (b) some entry p colored in K lies outside cl(RI): swapping I for I^p
//       makes RI one longer, and the cycle restarts;
//   (c) otherwise I grows to the smallest I' in RI spanning those entries,
//       and the rules are rebuilt for I'.
//
// Each (c) step strictly increases rk(I), so a cycle has at most rk(M)
// steps. When RI spans, it becomes S_r and the rest is solved for r-1.
//
// solve_general pads the instance with coloops so the special solver applies,
// and solve_noncolor gives every entry its own color.
//
// Ties are always broken by lowest sequence index.

#ifndef CMT_SOLVER_HPP_
#define CMT_SOLVER_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cmt/colored_seq.hpp"
#include "cmt/error.hpp"
#include "cmt/families.hpp"
#include "cmt/matroid.hpp"

namespace cmt {

#ifdef NDEBUG
inline constexpr bool kCheckInvariantsByDefault = false;
#else
inline constexpr bool kCheckInvariantsByDefault = true;
#endif

struct SolverOptions {
  // Assert conditions (i)-(v) of the replacement rules after every cycle
  // step, plus the augmentation and growth claims.
  bool check_invariants = kCheckInvariantsByDefault;
  bool record_trace = false;
};

struct TraceEvent {
  enum class Kind {
    kRestrict,     // dropped colors beyond rk(S)
    kBaseSingle,   // r == 1
    kBaseRankOne,  // rank 1
    kPeel,         // RI spans; S_r := RI
    kLowerRank,    // case (a)
    kAugment,      // case (b)
    kAdvance,      // case (c)
  };
  Kind kind;
  std::size_t depth = 0;
  std::size_t r = 0;
  std::size_t m = 0;
  std::size_t step = 0;     // cycle step k
  std::size_t ri_size = 0;  // |RI|
  std::size_t i_size = 0;   // |I_k| (= rk I_k)
};

// Counters for one invocation of the special solver (one (r, m) frame).
struct LevelStats {
  std::size_t depth = 0;
  std::size_t r = 0;
  std::size_t m = 0;
  std::size_t restarts = 0;
  std::size_t cycles = 0;
  std::size_t max_cycle_steps = 0;
};

struct SolveStats {
  std::uint64_t oracle_calls = 0;
  std::size_t cycle_iterations = 0;
  std::size_t restarts = 0;
  std::size_t recursion_depth = 0;
  std::size_t invariant_checks = 0;
  std::vector<LevelStats> levels;
  std::vector<TraceEvent> trace;
};

// For each part, the root indices of a maximal independent subset (which
// spans the part), and the index of a non-loop entry of S_1.
struct ChainCertificate {
  std::vector<std::vector<std::size_t>> spanning;
  std::optional<std::size_t> bottom_witness;
};

struct Partition {
  std::vector<IndexedSequence> parts;
  ChainCertificate certificate;
};

enum class Predicate {
  kNone,
  kPartCount,
  kMembership,
  kDisjointness,
  kRainbow,
  kChain,
  kStrictness,
};

inline const char* to_string(Predicate p) {
  switch (p) {
    case Predicate::kNone: return "none";
    case Predicate::kPartCount: return "part-count";
    case Predicate::kMembership: return "membership";
    case Predicate::kDisjointness: return "disjointness";
    case Predicate::kRainbow: return "rainbow";
    case Predicate::kChain: return "chain";
    case Predicate::kStrictness: return "strictness";
  }
  return "?";
}

struct VerificationReport {
  bool ok = false;
  Predicate failed = Predicate::kNone;
  std::string detail;

  explicit operator bool() const { return ok; }
};

inline ChainCertificate certify(const MatroidOracle& m,
                                const std::vector<IndexedSequence>& parts) {
  ChainCertificate cert;
  for (const auto& part : parts) {
    std::vector<std::size_t> idx;
    std::vector<GroundElement> basis;
    for (const auto& e : part) {
      if (!m.in_closure(e.element, basis)) {
        basis.push_back(e.element);
        idx.push_back(e.index);
      }
    }
    cert.spanning.push_back(std::move(idx));
  }
  if (!parts.empty() && !cert.spanning.front().empty()) {
    cert.bottom_witness = cert.spanning.front().front();
  }
  return cert;
}

namespace detail {

inline VerificationReport fail(Predicate p, std::string detail) {
  return {false, p, std::move(detail)};
}

inline VerificationReport verify_impl(const MatroidOracle& m,
                                      const IndexedSequence& s,
                                      const Coloring* coloring, std::size_t r,
                                      const std::vector<IndexedSequence>& parts) {
  if (parts.size() != r) {
    return fail(Predicate::kPartCount, "expected " + std::to_string(r) +
                                           " parts, got " +
                                           std::to_string(parts.size()));
  }
  std::set<std::size_t> used;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& e : parts[i]) {
      if (!parts[i].same_parent(s) || !s.contains_index(e.index)) {
        return fail(Predicate::kMembership,
                    "part " + std::to_string(i + 1) + " entry " +
                        std::to_string(e.index) + " is not an entry of S");
      }
      if (!used.insert(e.index).second) {
        return fail(Predicate::kDisjointness,
                    "index " + std::to_string(e.index) +
                        " appears in more than one part");
      }
    }
  }
  if (coloring != nullptr) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!is_rainbow(parts[i], *coloring)) {
        return fail(Predicate::kRainbow,
                    "part " + std::to_string(i + 1) + " repeats a color");
      }
    }
  }
  // Spanning independent subsets, then cl(S_i) <= cl(S_{i+1}) by membership
  // of the spanning subset of S_i in cl of the spanning subset of S_{i+1}.
  std::vector<std::vector<GroundElement>> spans;
  for (const auto& part : parts) {
    spans.push_back(greedy_basis(m, part.elements()));
  }
  if (r == 0) return {true, Predicate::kNone, {}};
  if (spans.front().empty()) {
    return fail(Predicate::kStrictness,
                "cl(S_1) = cl(empty): S_1 has no non-loop");
  }
  for (std::size_t i = 0; i + 1 < spans.size(); ++i) {
    for (const auto& e : spans[i]) {
      if (!m.in_closure(e, spans[i + 1])) {
        return fail(Predicate::kChain,
                    "element " + std::to_string(e.id) + " of S_" +
                        std::to_string(i + 1) + " is outside cl(S_" +
                        std::to_string(i + 2) + ")");
      }
    }
  }
  return {true, Predicate::kNone, {}};
}

}  // namespace detail

inline VerificationReport verify_partition(
    const MatroidOracle& m, const IndexedSequence& s, const Coloring& c,
    std::size_t r, const std::vector<IndexedSequence>& parts) {
  return detail::verify_impl(m, s, &c, r, parts);
}

// Colorless variant: rainbowness is not checked.
inline VerificationReport verify_partition(
    const MatroidOracle& m, const IndexedSequence& s, std::size_t r,
    const std::vector<IndexedSequence>& parts) {
  return detail::verify_impl(m, s, nullptr, r, parts);
}

namespace detail {

using Entries = std::vector<Entry>;  // sorted by index

inline std::vector<GroundElement> elems(const Entries& es) {
  std::vector<GroundElement> out;
  out.reserve(es.size());
  for (const auto& e : es) out.push_back(e.element);
  return out;
}

inline std::set<ColorId> color_set(const Entries& es, const Coloring& col) {
  std::set<ColorId> out;
  for (const auto& e : es) out.insert(col.color(e));
  return out;
}

inline Entries with_colors(const Entries& es, const Coloring& col,
                           const std::set<ColorId>& u) {
  Entries out;
  for (const auto& e : es) {
    if (u.count(col.color(e))) out.push_back(e);
  }
  return out;
}

inline bool index_less(const Entry& a, const Entry& b) {
  return a.index < b.index;
}

inline Entries minus(const Entries& a, const Entries& b) {
  Entries out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out), index_less);
  return out;
}

inline Entries unite(const Entries& a, const Entries& b) {
  Entries out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out), index_less);
  return out;
}

inline bool includes(const Entries& a, const Entries& b) {
  return std::includes(a.begin(), a.end(), b.begin(), b.end(), index_less);
}

inline bool rainbow(const Entries& es, const Coloring& col) {
  return color_set(es, col).size() == es.size();
}

// Extends a rainbow independent seed by scanning s in index order.
inline Entries extend_rainbow_independent(const MatroidOracle& m,
                                          const Entries& s,
                                          const Coloring& col, Entries seed) {
  std::set<ColorId> used = color_set(seed, col);
  std::vector<GroundElement> span = elems(seed);
  for (const auto& e : s) {
    if (std::binary_search(seed.begin(), seed.end(), e, index_less)) continue;
    if (used.count(col.color(e))) continue;
    if (m.in_closure(e.element, span)) continue;
    used.insert(col.color(e));
    span.push_back(e.element);
    seed.insert(std::upper_bound(seed.begin(), seed.end(), e, index_less), e);
  }
  return seed;
}

class CycleSolver {
 public:
  CycleSolver(const MatroidOracle& m, const SolverOptions& opt,
              SolveStats& stats)
      : m_(m), opt_(opt), stats_(stats) {}

  std::vector<Entries> solve(Entries s, const Coloring& col, std::size_t r,
                             std::size_t depth) {
    stats_.recursion_depth = std::max(stats_.recursion_depth, depth);
    if (s.empty()) broken("empty sequence at depth " + std::to_string(depth));

    // Keep the first rk(S) colors until the kept part spans as many colors
    // as its rank.
    std::size_t m = 0;
    ColorCountProfile prof;
    while (true) {
      m = rank(m_, elems(s));
      prof = profile(s, col);
      if (prof.ordering.size() <= m) break;
      const std::set<ColorId> keep(prof.ordering.begin(),
                                   prof.ordering.begin() +
                                       static_cast<std::ptrdiff_t>(m));
      s = with_colors(s, col, keep);
      trace(TraceEvent::Kind::kRestrict, depth, r, m, 0, 0, 0);
    }

    const std::size_t level = stats_.levels.size();
    stats_.levels.push_back(LevelStats{depth, r, m, 0, 0, 0});

    if (r == 1) {
      trace(TraceEvent::Kind::kBaseSingle, depth, r, m, 0, 0, 0);
      return {Entries{s.front()}};
    }
    require_profile(prof, r, m, depth);
    if (m == 1) {
      trace(TraceEvent::Kind::kBaseRankOne, depth, r, m, 0, 0, 0);
      std::vector<Entries> parts;
      for (std::size_t i = 0; i < r; ++i) parts.push_back(Entries{s[i]});
      return parts;
    }

    Entries ri = extend_rainbow_independent(m_, s, col, {});
    while (true) {
      if (ri.size() == m) {
        trace(TraceEvent::Kind::kPeel, depth, r, m, 0, ri.size(), 0);
        auto parts = solve(minus(s, ri), col, r - 1, depth + 1);
        parts.push_back(std::move(ri));
        return parts;
      }
      ++stats_.levels[level].cycles;
      auto outcome = run_cycle(s, col, r, m, depth, level, ri, prof);
      if (outcome) return std::move(*outcome);
    }
  }

 private:
  struct Rules {
    std::set<ColorId> k;
    Entries i;
    std::map<std::size_t, Entries> aug;  // keyed by the index of p
  };

  [[noreturn]] static void broken(const std::string& what) {
    throw InternalInvariantBroken(what);
  }

  static ColorCountProfile profile(const Entries& s, const Coloring& col) {
    ColorCountProfile p;
    for (const auto& e : s) ++p.counts[col.color(e)];
    for (const auto& [c, n] : p.counts) p.ordering.push_back(c);
    std::stable_sort(p.ordering.begin(), p.ordering.end(),
                     [&](ColorId a, ColorId b) {
                       return p.counts.at(a) > p.counts.at(b);
                     });
    return p;
  }

  static void require_profile(const ColorCountProfile& prof, std::size_t r,
                              std::size_t m, std::size_t depth) {
    bool ok = prof.ordering.size() == m;
    for (std::size_t i = 0; ok && i < prof.ordering.size(); ++i) {
      ok = prof.counts.at(prof.ordering[i]) >= (i == 0 ? r : r - 1);
    }
    if (!ok) {
      broken("color profile lost at depth " + std::to_string(depth) +
             " (r=" + std::to_string(r) + ", m=" + std::to_string(m) + ")");
    }
  }

  bool in_cl(const Entry& x, const Entries& y) const {
    return m_.in_closure(x.element, elems(y));
  }

  bool all_in_cl(const Entries& xs, const Entries& y) const {
    const auto span = elems(y);
    return std::all_of(xs.begin(), xs.end(), [&](const Entry& x) {
      return m_.in_closure(x.element, span);
    });
  }

  void trace(TraceEvent::Kind kind, std::size_t depth, std::size_t r,
             std::size_t m, std::size_t step, std::size_t ri_size,
             std::size_t i_size) {
    if (opt_.record_trace) {
      stats_.trace.push_back(
          TraceEvent{kind, depth, r, m, step, ri_size, i_size});
    }
  }

  // Runs one cycle. Returns the parts when case (a) finishes the job, or
  // nullopt after case (b) replaced `ri` by a longer sequence.
  std::optional<std::vector<Entries>> run_cycle(const Entries& s,
                                                const Coloring& col,
                                                std::size_t r, std::size_t m,
                                                std::size_t depth,
                                                std::size_t level, Entries& ri,
                                                const ColorCountProfile& prof) {
    Rules rules;
    const auto ri_colors = color_set(ri, col);
    for (const auto& c : prof.ordering) {
      if (!ri_colors.count(c)) rules.k.insert(c);
    }
    for (const auto& e : with_colors(s, col, rules.k)) {
      rules.aug[e.index] = Entries{e};
    }
    if (opt_.check_invariants) check_rules(s, col, ri, rules, 0);

    for (std::size_t step = 0;; ++step) {
      ++stats_.cycle_iterations;
      auto& lv = stats_.levels[level];
      lv.max_cycle_steps = std::max(lv.max_cycle_steps, step + 1);

      const Entries ck = with_colors(s, col, rules.k);

      // (a) C_K inside cl(I): recurse in the flat cl(I).
      if (all_in_cl(ck, rules.i)) {
        trace(TraceEvent::Kind::kLowerRank, depth, r, m, step, ri.size(),
              rules.i.size());
        return lower_rank(s, col, r, depth, rules, ck, prof);
      }

      // (b) some p in C_K outside cl(RI): RI' = (RI \ I) u I^p.
      const auto ri_span = elems(ri);
      const auto p_it = std::find_if(ck.begin(), ck.end(), [&](const Entry& p) {
        return !m_.in_closure(p.element, ri_span);
      });
      if (p_it != ck.end()) {
        trace(TraceEvent::Kind::kAugment, depth, r, m, step, ri.size(),
              rules.i.size());
        augment(s, col, ri, rules, *p_it);
        ++stats_.restarts;
        ++stats_.levels[level].restarts;
        return std::nullopt;
      }

      // (c) C_K inside cl(RI) but not inside cl(I).
      trace(TraceEvent::Kind::kAdvance, depth, r, m, step, ri.size(),
            rules.i.size());
      rules = advance(s, col, ri, rules, ck);
      if (opt_.check_invariants) check_rules(s, col, ri, rules, step + 1);
      if (step + 1 >= m) {
        broken("cycle exceeded " + std::to_string(m) + " steps");
      }
    }
  }

  std::vector<Entries> lower_rank(const Entries& s, const Coloring& col,
                                  std::size_t r, std::size_t depth,
                                  const Rules& rules, const Entries& ck,
                                  const ColorCountProfile& prof) {
    const auto ci = color_set(rules.i, col);
    ColorId k1{};
    bool found = false;
    for (const auto& c : prof.ordering) {
      if (ci.count(c)) {
        k1 = c;
        found = true;
        break;
      }
    }
    if (!found) broken("case (a) with empty I");
    const auto p_it = std::find_if(ck.begin(), ck.end(), [&](const Entry& e) {
      return !ci.count(col.color(e));
    });
    if (p_it == ck.end()) broken("case (a) without a point of a color outside c(I)");

    Entries sub = unite(with_colors(s, col, ci), Entries{*p_it});
    Coloring recolored = col;
    const ColorId z = col.fresh_color();
    for (const auto& e : sub) {
      if (e.index == p_it->index || col.color(e) == k1) {
        recolored.set(e.index, z);
      }
    }
    return solve(std::move(sub), recolored, r, depth + 1);
  }

  void augment(const Entries& s, const Coloring& col, Entries& ri,
               const Rules& rules, const Entry& p) {
    const auto it = rules.aug.find(p.index);
    if (it == rules.aug.end()) {
      broken("no replacement rule for entry " + std::to_string(p.index));
    }
    Entries next = unite(minus(ri, rules.i), it->second);
    if (opt_.check_invariants) {
      if (next.size() != ri.size() + 1) broken("case (b): |RI'| != |RI| + 1");
      if (!rainbow(next, col)) broken("case (b): RI' is not rainbow");
      if (!is_independent(m_, elems(next))) {
        broken("case (b): RI' is not independent");
      }
      Entries with_p = unite(ri, Entries{p});
      if (!same_closure(m_, elems(next), elems(with_p))) {
        broken("case (b): cl(RI') != cl(RI u {p})");
      }
    }
    ri = extend_rainbow_independent(m_, s, col, std::move(next));
  }

  Rules advance(const Entries& s, const Coloring& col, const Entries& ri,
                const Rules& rules, const Entries& ck) {
    // Inclusion-minimal I' inside RI with C_K in cl(I'), by deleting entries
    // in index order whenever the span condition survives.
    Entries next_i = ri;
    for (std::size_t j = 0; j < next_i.size();) {
      Entries trial = next_i;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(j));
      if (all_in_cl(ck, trial)) {
        next_i = std::move(trial);
      } else {
        ++j;
      }
    }
    if (opt_.check_invariants) {
      if (!includes(next_i, rules.i) || next_i.size() <= rules.i.size()) {
        broken("case (c): I_k is not a proper subsequence of I_{k+1}");
      }
      if (closure_subset(m_, elems(next_i), elems(rules.i))) {
        broken("case (c): cl I_{k+1} does not grow");
      }
    }

    Rules next;
    next.k = rules.k;
    for (const auto& c : color_set(next_i, col)) next.k.insert(c);
    next.i = next_i;

    // q depends only on r (the entry of I' sharing p's color).
    std::map<std::size_t, Entry> q_for_r;
    const auto next_span = elems(next_i);
    for (const auto& p : with_colors(s, col, next.k)) {
      if (m_.in_closure(p.element, next_span)) continue;
      const ColorId cp = col.color(p);
      if (rules.k.count(cp)) broken("case (c): C_K not inside cl I_{k+1}");
      const auto r_it =
          std::find_if(next_i.begin(), next_i.end(),
                       [&](const Entry& e) { return col.color(e) == cp; });
      if (r_it == next_i.end()) broken("case (c): no r with c(r) = c(p)");
      const Entry r_entry = *r_it;

      auto q_it = q_for_r.find(r_entry.index);
      if (q_it == q_for_r.end()) {
        Entries without_r = minus(next_i, Entries{r_entry});
        const auto span = elems(without_r);
        const auto q = std::find_if(ck.begin(), ck.end(), [&](const Entry& e) {
          return !m_.in_closure(e.element, span);
        });
        if (q == ck.end()) broken("case (c): no q outside cl(I_{k+1} \\ {r})");
        q_it = q_for_r.emplace(r_entry.index, *q).first;
      }
      const auto iq = rules.aug.find(q_it->second.index);
      if (iq == rules.aug.end()) broken("case (c): I_k^q undefined");

      Entries ip = minus(next_i, unite(rules.i, Entries{r_entry}));
      ip = unite(ip, iq->second);
      ip = unite(ip, Entries{p});
      next.aug[p.index] = std::move(ip);
    }
    return next;
  }

  // Conditions (i)-(v) on the rules, plus completeness of the rule map.
  void check_rules(const Entries& s, const Coloring& col, const Entries& ri,
                   const Rules& rules, std::size_t step) {
    ++stats_.invariant_checks;
    const std::string at = " at cycle step " + std::to_string(step);
    const auto ci = color_set(rules.i, col);
    const auto cri = color_set(ri, col);

    // (i) c(I) is a proper subset of K.
    if (!std::includes(rules.k.begin(), rules.k.end(), ci.begin(), ci.end()) ||
        ci.size() == rules.k.size()) {
      broken("condition (i) violated" + at);
    }

    const auto i_span = elems(rules.i);
    for (const auto& p : with_colors(s, col, rules.k)) {
      const bool eligible = !m_.in_closure(p.element, i_span);
      const auto it = rules.aug.find(p.index);
      if (eligible != (it != rules.aug.end())) {
        broken("replacement rule map out of sync for entry " +
               std::to_string(p.index) + at);
      }
    }
    for (const auto& [p_index, ip] : rules.aug) {
      const auto cip = color_set(ip, col);
      // (ii) c(I^p) = c(I) u {c^p} with c^p in K \ c(RI).
      if (cip.size() != ip.size() ||
          !std::includes(cip.begin(), cip.end(), ci.begin(), ci.end()) ||
          cip.size() != ci.size() + 1) {
        broken("condition (ii) violated for entry " + std::to_string(p_index) +
               at);
      }
      std::set<ColorId> extra;
      std::set_difference(cip.begin(), cip.end(), ci.begin(), ci.end(),
                          std::inserter(extra, extra.end()));
      const ColorId cp = *extra.begin();
      if (!rules.k.count(cp) || cri.count(cp)) {
        broken("condition (ii) violated for entry " + std::to_string(p_index) +
               at);
      }
      // (iii) |I^p| = |I| + 1.
      if (ip.size() != rules.i.size() + 1) {
        broken("condition (iii) violated for entry " +
               std::to_string(p_index) + at);
      }
      // (iv) p in I^p and cl(I^p \ {p}) = cl(I).
      const auto p_it =
          std::find_if(ip.begin(), ip.end(),
                       [&](const Entry& e) { return e.index == p_index; });
      if (p_it == ip.end()) {
        broken("condition (iv) violated for entry " + std::to_string(p_index) +
               at);
      }
      Entries rest = minus(ip, Entries{*p_it});
      if (!same_closure(m_, elems(rest), i_span)) {
        broken("condition (iv) violated for entry " + std::to_string(p_index) +
               at);
      }
    }
    // (v) RI n C_K = I and K is not inside c(RI).
    if (with_colors(ri, col, rules.k) != rules.i) {
      broken("condition (v) violated: RI n C_K != I" + at);
    }
    if (std::includes(cri.begin(), cri.end(), rules.k.begin(),
                      rules.k.end())) {
      broken("condition (v) violated: K inside c(RI)" + at);
    }
  }

  const MatroidOracle& m_;
  const SolverOptions& opt_;
  SolveStats& stats_;
};

inline void validate_input(const MatroidOracle& m, const IndexedSequence& s,
                           const Coloring* c) {
  for (const auto& e : s) {
    if (!m.contains(e.element)) {
      throw UnknownElement("sequence entry " + std::to_string(e.index) +
                           " references unknown element " +
                           std::to_string(e.element.id));
    }
  }
  if (c != nullptr && !c->covers(s)) {
    throw UnknownColor("coloring covers " + std::to_string(c->size()) +
                       " indices, sequence has " +
                       std::to_string(s.root_size()));
  }
  for (const auto& x : s.set_image()) {
    if (is_loop(m, x)) {
      throw LoopInInput("element " + std::to_string(x.id) + " is a loop");
    }
  }
}

inline Partition make_partition(const MatroidOracle& m,
                                const IndexedSequence& s,
                                const std::vector<Entries>& parts) {
  Partition out;
  for (const auto& p : parts) out.parts.push_back(s.with_entries(p));
  out.certificate = certify(m, out.parts);
  return out;
}

}  // namespace detail

// Hypotheses of solve_special, checked after restricting S to its first
// rk(S) colors.
inline ProfileCheck check_special_instance(const MatroidOracle& m,
                                           const IndexedSequence& s,
                                           const Coloring& c, std::size_t r) {
  const std::size_t rk = rank(m, s.elements());
  const auto prof = color_profile(s, c);
  std::set<ColorId> keep;
  for (std::size_t i = 0; i < prof.ordering.size() && i < rk; ++i) {
    keep.insert(prof.ordering[i]);
  }
  const auto restricted =
      s.filter([&](const Entry& e) { return keep.count(c.color(e)) > 0; });
  return check_special_profile(restricted, c, r, rk);
}

inline Partition solve_special(const MatroidOracle& m, const IndexedSequence& s,
                               const Coloring& c, std::size_t r,
                               const SolverOptions& opt = {},
                               SolveStats* stats = nullptr) {
  detail::validate_input(m, s, &c);
  if (s.empty()) throw PreconditionViolated("empty sequence");
  if (r == 0) throw PreconditionViolated("r must be at least 1");
  if (auto chk = check_special_instance(m, s, c, r); !chk) {
    throw PreconditionViolated("special profile: " + chk.diagnostic);
  }
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  const auto calls0 = m.calls();
  detail::CycleSolver solver(m, opt, st);
  const auto parts = solver.solve(s.entries(), c, r, 0);
  st.oracle_calls += m.calls() - calls0;

  Partition out = detail::make_partition(m, s, parts);
  if (auto rep = verify_partition(m, s, c, r, out.parts); !rep) {
    throw InternalInvariantBroken(std::string("output fails ") +
                                  to_string(rep.failed) + ": " + rep.detail);
  }
  return out;
}

inline Partition solve_general(const MatroidOracle& m, const IndexedSequence& s,
                               const Coloring& c, std::size_t r,
                               const SolverOptions& opt = {},
                               SolveStats* stats = nullptr) {
  detail::validate_input(m, s, &c);
  if (r == 0) throw PreconditionViolated("r must be at least 1");
  const std::size_t rk = m.rank();
  if (auto chk = check_general_profile(s, c, r, rk); !chk) {
    throw PreconditionViolated("general profile: " + chk.diagnostic);
  }
  SolveStats local;
  SolveStats& st = stats ? *stats : local;

  std::vector<detail::Entries> parts;
  if (r == 1) {
    parts.push_back(detail::Entries{s.entries().front()});
  } else {
    // Throw away entries beyond m(r-1)+1, highest index first.
    detail::Entries trimmed(
        s.begin(), s.begin() + static_cast<std::ptrdiff_t>(rk * (r - 1) + 1));
    const auto prof = color_profile(s.with_entries(trimmed), c);
    const std::size_t d = prof.ordering.size();
    if (d < rk) {
      throw InternalInvariantBroken("fewer colors than rank after trimming");
    }
    if (d == rk) {
      const auto calls0 = m.calls();
      detail::CycleSolver solver(m, opt, st);
      parts = solver.solve(trimmed, c, r, 0);
      st.oracle_calls += m.calls() - calls0;
    } else {
      // Direct sum with d - m coloops, each appended r-1 times, colored so
      // that the first color has r entries and every other r-1.
      const std::shared_ptr<const MatroidOracle> base(
          std::shared_ptr<const MatroidOracle>{}, &m);
      const auto padded = add_coloops(base, d - rk);
      std::unordered_map<std::size_t, std::size_t> position;
      const auto g = m.ground();
      for (std::size_t i = 0; i < g.size(); ++i) position[g[i].id] = i;

      const std::size_t n = s.root_size();
      std::vector<GroundElement> root(n, GroundElement{0});
      std::vector<ColorId> colors(n, ColorId{0});
      detail::Entries entries;
      for (const auto& e : trimmed) {
        root[e.index] = GroundElement{position.at(e.element.id)};
        colors[e.index] = c.color(e);
        entries.push_back(Entry{e.index, root[e.index]});
      }
      std::vector<std::size_t> deficit;
      for (std::size_t i = 0; i < d; ++i) {
        deficit.push_back((i == 0 ? r : r - 1) - prof.counts.at(prof.ordering[i]));
      }
      std::size_t color_pos = 0;
      for (std::size_t j = 0; j < d - rk; ++j) {
        for (std::size_t copy = 0; copy + 1 < r; ++copy) {
          while (deficit[color_pos] == 0) ++color_pos;
          --deficit[color_pos];
          entries.push_back(Entry{root.size(), padded->right_element(j)});
          root.push_back(padded->right_element(j));
          colors.push_back(prof.ordering[color_pos]);
        }
      }
      const Coloring padded_colors(std::move(colors));
      const auto padded_seq = IndexedSequence::from_elements(std::move(root));
      detail::CycleSolver solver(*padded, opt, st);
      auto padded_parts = solver.solve(entries, padded_colors, r, 0);
      st.oracle_calls += padded->calls();
      if (opt.check_invariants) {
        std::vector<IndexedSequence> ps;
        for (const auto& p : padded_parts) ps.push_back(padded_seq.with_entries(p));
        const auto whole = padded_seq.with_entries(entries);
        if (auto rep = verify_partition(*padded, whole, padded_colors, r, ps);
            !rep) {
          throw InternalInvariantBroken(
              std::string("padded partition fails ") + to_string(rep.failed) +
              ": " + rep.detail);
        }
      }
      // S_i := S n S'_i. Padded entries have indices >= n.
      for (const auto& p : padded_parts) {
        detail::Entries kept;
        for (const auto& e : p) {
          if (e.index >= n) continue;
          const auto it = std::lower_bound(
              trimmed.begin(), trimmed.end(), Entry{e.index, {}},
              detail::index_less);
          kept.push_back(*it);
        }
        parts.push_back(std::move(kept));
      }
    }
  }

  Partition out = detail::make_partition(m, s, parts);
  if (auto rep = verify_partition(m, s, c, r, out.parts); !rep) {
    throw InternalInvariantBroken(std::string("output fails ") +
                                  to_string(rep.failed) + ": " + rep.detail);
  }
  return out;
}

// Colorless matroidal Tverberg: every entry gets its own color.
inline Partition solve_noncolor(const MatroidOracle& m,
                                const IndexedSequence& s, std::size_t r,
                                const SolverOptions& opt = {},
                                SolveStats* stats = nullptr) {
  detail::validate_input(m, s, nullptr);
  if (r == 0) throw PreconditionViolated("r must be at least 1");
  const std::size_t rk = m.rank();
  if (s.size() <= rk * (r - 1)) {
    throw PreconditionViolated("length " + std::to_string(s.size()) +
                               " does not exceed m(r-1) = " +
                               std::to_string(rk * (r - 1)));
  }
  if (r == 1) {
    Partition out = detail::make_partition(m, s, {detail::Entries{s[0]}});
    return out;
  }
  return solve_general(m, s, Coloring::distinct(s.root_size()), r, opt, stats);
}

// Inclusion-maximal rainbow independent subsequence of s containing seed.
inline IndexedSequence max_rainbow_independent(const MatroidOracle& m,
                                               const IndexedSequence& s,
                                               const Coloring& c,
                                               const IndexedSequence& seed) {
  if (!seed.same_parent(s) && !seed.empty()) {
    throw SeedInvalid("seed is not a subsequence of S");
  }
  for (const auto& e : seed) {
    if (!s.contains_index(e.index)) {
      throw SeedInvalid("seed entry " + std::to_string(e.index) +
                        " is not in S");
    }
  }
  if (!is_rainbow(seed, c)) throw SeedInvalid("seed is not rainbow");
  if (!is_independent(m, seed.elements())) {
    throw SeedInvalid("seed is not independent");
  }
  return s.with_entries(
      detail::extend_rainbow_independent(m, s.entries(), c, seed.entries()));
}

}  // namespace cmt

#endif  // CMT_SOLVER_HPP_
