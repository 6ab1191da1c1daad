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

// Seeded instance generators: random matroids of a prescribed rank, random
// colored sequences meeting either solver profile, tight instances, and the
// two small affine-line examples.

#ifndef CMT_GENERATE_HPP_
#define CMT_GENERATE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cmt/error.hpp"
#include "cmt/families.hpp"
#include "cmt/instance_io.hpp"
#include "cmt/matroid.hpp"
#include "cmt/oracle_verify.hpp"

namespace cmt {

enum class Family { kGF2, kGF3, kRational, kAffine, kUniform, kGraphic };

inline constexpr Family kAllFamilies[] = {Family::kGF2,     Family::kGF3,
                                          Family::kRational, Family::kAffine,
                                          Family::kUniform,  Family::kGraphic};

inline const char* to_string(Family f) {
  switch (f) {
    case Family::kGF2: return "gf2";
    case Family::kGF3: return "gf3";
    case Family::kRational: return "rational";
    case Family::kAffine: return "affine";
    case Family::kUniform: return "uniform";
    case Family::kGraphic: return "graphic";
  }
  return "?";
}

inline std::optional<Family> family_from_string(std::string_view s) {
  for (const auto f : kAllFamilies) {
    if (s == to_string(f)) return f;
  }
  return std::nullopt;
}

enum class Profile { kGeneral, kSpecial };

namespace detail {

inline std::size_t uniform_int(std::mt19937_64& rng, std::size_t lo,
                               std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Random vectors over Z/p (p > 0) or small integers (p == 0), always
// containing a shuffled copy of the standard basis so the rank is dim.
inline std::vector<std::vector<BigRational>> random_rows(std::mt19937_64& rng,
                                                         std::size_t dim,
                                                         std::uint64_t p,
                                                         std::size_t extra) {
  std::vector<std::vector<BigRational>> rows;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<BigRational> row(dim, BigRational(0));
    row[i] = 1;
    rows.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < extra; ++k) {
    std::vector<BigRational> row(dim);
    bool nonzero = false;
    while (!nonzero) {
      for (auto& x : row) {
        const long v = p > 0 ? static_cast<long>(uniform_int(rng, 0, p - 1))
                             : static_cast<long>(uniform_int(rng, 0, 6)) - 3;
        x = v;
        nonzero = nonzero || v != 0;
      }
    }
    rows.push_back(std::move(row));
  }
  std::shuffle(rows.begin(), rows.end(), rng);
  return rows;
}

}  // namespace detail

// A random loopless matroid of rank exactly m (m >= 1).
inline MatroidFamilySpec random_matroid_spec(Family family, std::size_t m,
                                             std::mt19937_64& rng) {
  if (m == 0) throw InfeasibleRequest("rank must be at least 1");
  const std::size_t extra = detail::uniform_int(rng, 0, m + 2);
  switch (family) {
    case Family::kGF2:
      return {VectorSpec{FieldSpec::prime(2), m,
                         detail::random_rows(rng, m, 2, extra)}};
    case Family::kGF3:
      return {VectorSpec{FieldSpec::prime(3), m,
                         detail::random_rows(rng, m, 3, extra)}};
    case Family::kRational:
      return {VectorSpec{FieldSpec::rational(), m,
                         detail::random_rows(rng, m, 0, extra)}};
    case Family::kAffine: {
      // The origin plus the unit points affinely span a space of rank m.
      const std::size_t dim = m - 1;
      std::vector<std::vector<BigRational>> pts;
      pts.emplace_back(dim, BigRational(0));
      for (std::size_t i = 0; i < dim; ++i) {
        std::vector<BigRational> p(dim, BigRational(0));
        p[i] = 1;
        pts.push_back(std::move(p));
      }
      for (std::size_t k = 0; k < extra; ++k) {
        std::vector<BigRational> p(dim);
        for (auto& x : p) {
          x = BigRational(static_cast<long>(detail::uniform_int(rng, 0, 6)) - 3,
                          static_cast<long>(detail::uniform_int(rng, 1, 2)));
        }
        pts.push_back(std::move(p));
      }
      std::shuffle(pts.begin(), pts.end(), rng);
      return {AffineSpec{FieldSpec::rational(), dim, std::move(pts)}};
    }
    case Family::kUniform:
      return {UniformSpec{m, m + extra}};
    case Family::kGraphic: {
      // A random spanning tree on m+1 vertices plus extra non-loop edges.
      GraphicSpec g{m + 1, {}};
      std::vector<std::size_t> order(m + 1);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      for (std::size_t i = 1; i <= m; ++i) {
        g.edges.emplace_back(order[detail::uniform_int(rng, 0, i - 1)],
                             order[i]);
      }
      for (std::size_t k = 0; k < extra; ++k) {
        const auto u = detail::uniform_int(rng, 0, m);
        auto v = detail::uniform_int(rng, 0, m - 1);
        if (v >= u) ++v;
        g.edges.emplace_back(u, v);
      }
      std::shuffle(g.edges.begin(), g.edges.end(), rng);
      return {std::move(g)};
    }
  }
  throw InfeasibleRequest("unknown family");
}

struct RandomRequest {
  Family family = Family::kGF2;
  std::size_t m = 2;
  std::size_t r = 2;
  std::size_t target_length = 0;
  std::uint64_t seed = 0;
  Profile profile = Profile::kGeneral;
  // Number of distinct colors to use; chosen at random when unset.
  std::optional<std::size_t> colors;
};

// An instance meeting the requested profile by construction. The length is
// raised to the smallest admissible value when target_length is too short,
// and lowered when the color budget cannot fill it.
inline InstanceFile gen_random_instance(const RandomRequest& req) {
  if (req.m == 0) throw InfeasibleRequest("rank must be at least 1");
  if (req.r == 0) throw InfeasibleRequest("r must be at least 1");
  std::mt19937_64 rng(req.seed);
  const std::size_t m = req.m;
  const std::size_t r = req.r;

  InstanceFile inst;
  inst.matroid = random_matroid_spec(req.family, m, rng);
  inst.r = r;
  const auto matroid = build_matroid(inst.matroid);
  const auto ground = matroid->ground();
  const auto basis = greedy_basis(*matroid, ground);

  // counts[i] is the multiplicity of the i-th color (profile order).
  std::vector<std::size_t> counts;
  const std::size_t min_len = m * (r - 1) + 1;
  if (req.profile == Profile::kGeneral) {
    inst.mode = SolveMode::kGeneral;
    if (r == 1) {
      if (req.colors && *req.colors != 1) {
        throw InfeasibleRequest("r = 1 admits exactly one entry of one color");
      }
      counts = {1};
    } else {
      std::size_t len = std::max(req.target_length, min_len);
      // d colors hold at most r + (d-1)(r-1) entries.
      auto needed = [&](std::size_t l) { return (l - r + r - 2) / (r - 1) + 1; };
      std::size_t d;
      if (req.colors) {
        d = *req.colors;
        if (d == 0 || r + (d - 1) * (r - 1) < min_len) {
          throw InfeasibleRequest(std::to_string(d) +
                                  " colors cannot exceed m(r-1) = " +
                                  std::to_string(m * (r - 1)) + " entries");
        }
        len = std::min(len, r + (d - 1) * (r - 1));
        len = std::max(len, d);
      } else {
        const std::size_t lo = needed(len);
        d = detail::uniform_int(rng, lo, std::min(len, lo + 2));
      }
      // Start every color at one entry, then fill up to the caps.
      counts.assign(d, 1);
      std::size_t total = d;
      while (total < len) {
        const std::size_t i = detail::uniform_int(rng, 0, d - 1);
        const std::size_t cap = i == 0 ? r : r - 1;
        if (counts[i] < cap) {
          ++counts[i];
          ++total;
        }
      }
    }
  } else {
    inst.mode = SolveMode::kSpecial;
    const std::size_t d = req.colors.value_or(m);
    if (d < m) {
      throw InfeasibleRequest("special profile needs at least m = " +
                              std::to_string(m) + " colors, got " +
                              std::to_string(d));
    }
    if (d > m && r <= 2) {
      throw InfeasibleRequest(
          "colors beyond the first m need fewer than r-1 entries, "
          "impossible for r <= 2");
    }
    counts.assign(m, r - 1);
    counts[0] = r;
    std::size_t total = r + (m - 1) * (r - 1);
    // The main colors may exceed their thresholds; extra colors stay below
    // r-1 so they never enter the top m.
    const std::size_t len = std::max({req.target_length, total, m});
    for (std::size_t i = m; i < d; ++i) {
      counts.push_back(detail::uniform_int(rng, 1, r - 2));
      total += counts.back();
    }
    while (total < len) {
      ++counts[detail::uniform_int(rng, 0, m - 1)];
      ++total;
    }
  }

  // Colors ids are a random permutation; entries are shuffled.
  std::vector<std::uint64_t> ids(counts.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<std::uint64_t> colors;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    colors.insert(colors.end(), counts[i], ids[i]);
  }
  std::vector<std::size_t> elems;
  for (std::size_t k = 0; k < colors.size(); ++k) {
    elems.push_back(ground[detail::uniform_int(rng, 0, ground.size() - 1)].id);
  }
  if (req.profile == Profile::kSpecial) {
    // Make S span M so that rk(S) = m: the first m positions get a basis.
    for (std::size_t j = 0; j < basis.size(); ++j) elems[j] = basis[j].id;
  }
  std::vector<std::size_t> perm(colors.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::uint64_t> shuffled_colors;
  for (const auto i : perm) {
    inst.sequence.push_back(elems[i]);
    shuffled_colors.push_back(colors[i]);
  }
  inst.colors = std::move(shuffled_colors);
  return inst;
}

// A random matroid of the family together with the tight sequence of a
// greedy basis. Colorless (mode noncolor).
inline InstanceFile gen_tight_instance(Family family, std::size_t m,
                                       std::size_t r, std::uint64_t seed = 0) {
  if (r == 0) throw InfeasibleRequest("r must be at least 1");
  std::mt19937_64 rng(seed);
  InstanceFile inst;
  inst.matroid = random_matroid_spec(family, m, rng);
  const auto matroid = build_matroid(inst.matroid);
  const auto basis = greedy_basis(*matroid, matroid->ground());
  for (const auto& e : tight_instance(*matroid, basis, r)) {
    inst.sequence.push_back(e.element.id);
  }
  inst.r = r;
  inst.mode = SolveMode::kNoncolor;
  return inst;
}

// Points 1..n red and n+1 blue on the rational affine line, r = 3. The first
// color exceeds r when n > 3, and no Tverberg partition exists.
inline InstanceFile real_line_instance(std::size_t n = 4) {
  AffineSpec line{FieldSpec::rational(), 1, {}};
  InstanceFile inst;
  for (std::size_t i = 1; i <= n + 1; ++i) {
    line.points.push_back({BigRational(static_cast<long>(i))});
    inst.sequence.push_back(i - 1);
  }
  inst.matroid = {std::move(line)};
  inst.colors = std::vector<std::uint64_t>(n, 0);
  inst.colors->push_back(1);
  inst.r = 3;
  inst.mode = SolveMode::kGeneral;
  return inst;
}

// The affine line over GF(2): S = (0 red, 0 red, 0 red, 1 blue), r = 2.
// Three reds exceed r, yet a partition exists.
inline InstanceFile gf2_line_instance() {
  InstanceFile inst;
  inst.matroid = {AffineSpec{FieldSpec::prime(2), 1,
                             {{BigRational(0)}, {BigRational(1)}}}};
  inst.sequence = {0, 0, 0, 1};
  inst.colors = std::vector<std::uint64_t>{0, 0, 0, 1};
  inst.r = 2;
  inst.mode = SolveMode::kGeneral;
  return inst;
}

}  // namespace cmt

#endif  // CMT_GENERATE_HPP_
