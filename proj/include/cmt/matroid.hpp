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

// Abstract finite matroid presented by a closure-membership oracle.
//
// Every algorithm in this library sees a matroid only through
// MatroidOracle::in_closure. Rank, independence, loops and coloops are derived
// from it by greedy scans. Each oracle counts its own membership queries; the
// counter is the cost measure reported by the solvers. Setting the
// environment variable CMT_DISABLE_CALL_COUNT (to anything but "0") turns the
// counter off for oracles constructed afterwards.

#ifndef CMT_MATROID_HPP_
#define CMT_MATROID_HPP_

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cmt/error.hpp"

namespace cmt {

struct GroundElement {
  std::size_t id = 0;

  friend auto operator<=>(const GroundElement&, const GroundElement&) = default;
};

inline bool call_counting_enabled_by_env() {
  const char* v = std::getenv("CMT_DISABLE_CALL_COUNT");
  return v == nullptr || std::string(v) == "0";
}

class MatroidOracle {
 public:
  MatroidOracle() : counting_(call_counting_enabled_by_env()) {}
  MatroidOracle(const MatroidOracle&) = delete;
  MatroidOracle& operator=(const MatroidOracle&) = delete;
  virtual ~MatroidOracle() = default;

  // The ground set, in stored order.
  virtual std::vector<GroundElement> ground() const = 0;
  virtual bool contains(GroundElement x) const = 0;
  virtual std::string describe() const = 0;

  // True iff x lies in the closure of y. Throws UnknownElement when x or a
  // member of y is outside the ground set.
  bool in_closure(GroundElement x, std::span<const GroundElement> y) const {
    if (!contains(x)) {
      throw UnknownElement("element " + std::to_string(x.id) +
                           " is not in the ground set of " + describe());
    }
    for (const auto& e : y) {
      if (!contains(e)) {
        throw UnknownElement("element " + std::to_string(e.id) +
                             " is not in the ground set of " + describe());
      }
    }
    if (counting_.load(std::memory_order_relaxed)) {
      calls_.fetch_add(1, std::memory_order_relaxed);
    }
    return closure_contains(x, y);
  }

  // Rank of the whole ground set.
  std::size_t rank() const {
    std::call_once(rank_once_, [this] { rank_ = compute_full_rank(); });
    return rank_;
  }

  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }
  void reset_calls() const { calls_.store(0, std::memory_order_relaxed); }
  void set_counting(bool on) const {
    counting_.store(on, std::memory_order_relaxed);
  }
  bool counting() const { return counting_.load(std::memory_order_relaxed); }

 protected:
  // Membership test proper; arguments are already validated.
  virtual bool closure_contains(GroundElement x,
                                std::span<const GroundElement> y) const = 0;

 private:
  std::size_t compute_full_rank() const;

  mutable std::atomic<std::uint64_t> calls_{0};
  mutable std::atomic<bool> counting_;
  mutable std::once_flag rank_once_;
  mutable std::size_t rank_ = 0;
};

// Size of a maximal independent subset of y, found by scanning y in order.
// Repeated elements are skipped automatically (x is in cl(Y) when x is in Y).
inline std::size_t rank(const MatroidOracle& m,
                        std::span<const GroundElement> y) {
  std::vector<GroundElement> basis;
  for (const auto& e : y) {
    if (!m.in_closure(e, basis)) basis.push_back(e);
  }
  return basis.size();
}

// The greedy maximal independent subset of y (scan order).
inline std::vector<GroundElement> greedy_basis(
    const MatroidOracle& m, std::span<const GroundElement> y) {
  std::vector<GroundElement> basis;
  for (const auto& e : y) {
    if (!m.in_closure(e, basis)) basis.push_back(e);
  }
  return basis;
}

inline std::size_t MatroidOracle::compute_full_rank() const {
  const auto g = ground();
  return cmt::rank(*this, g);
}

// Independence of a list of elements; a repeated element makes it dependent.
inline bool is_independent(const MatroidOracle& m,
                           std::span<const GroundElement> y) {
  std::vector<GroundElement> prefix;
  prefix.reserve(y.size());
  for (const auto& e : y) {
    if (m.in_closure(e, prefix)) return false;
    prefix.push_back(e);
  }
  return true;
}

inline bool is_loop(const MatroidOracle& m, GroundElement x) {
  return m.in_closure(x, {});
}

inline bool is_coloop(const MatroidOracle& m, GroundElement x) {
  std::vector<GroundElement> rest;
  for (const auto& e : m.ground()) {
    if (e != x) rest.push_back(e);
  }
  return !m.in_closure(x, rest);
}

inline bool is_basis(const MatroidOracle& m,
                     std::span<const GroundElement> b) {
  return b.size() == m.rank() && is_independent(m, b);
}

// All ground elements in cl(y), in ground order.
inline std::vector<GroundElement> closure(const MatroidOracle& m,
                                          std::span<const GroundElement> y) {
  std::vector<GroundElement> out;
  for (const auto& e : m.ground()) {
    if (m.in_closure(e, y)) out.push_back(e);
  }
  return out;
}

// cl(a) is contained in cl(b): every member of a lies in cl(b).
inline bool closure_subset(const MatroidOracle& m,
                           std::span<const GroundElement> a,
                           std::span<const GroundElement> b) {
  return std::all_of(a.begin(), a.end(),
                     [&](const GroundElement& e) { return m.in_closure(e, b); });
}

inline bool same_closure(const MatroidOracle& m,
                         std::span<const GroundElement> a,
                         std::span<const GroundElement> b) {
  return closure_subset(m, a, b) && closure_subset(m, b, a);
}

}  // namespace cmt

#endif  // CMT_MATROID_HPP_
