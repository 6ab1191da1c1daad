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


#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "cmt/cmt.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

namespace {

using cmt::GroundElement;
using th::els;

TEST(BruteForce, TightUniformPairHasNoPartition) {
  const auto m = cmt::build_matroid(th::uniform(2, 2));
  EXPECT_FALSE(cmt::brute_force_solve(*m, th::seq({0, 1}), 2));
}

TEST(BruteForce, RealLineNoteHasNoPartition) {
  const auto inst = cmt::real_line_instance(4);
  const auto li = cmt::load(inst);
  EXPECT_FALSE(cmt::brute_force_solve(*li.matroid, li.sequence, *li.coloring, 3));
  EXPECT_FALSE(ref::partition_exists(inst.matroid, inst.sequence, *inst.colors, 3));
}

TEST(BruteForce, GF2AffineLineHasPartition) {
  const auto inst = cmt::gf2_line_instance();
  const auto li = cmt::load(inst);
  EXPECT_FALSE(cmt::check_general_profile(li.sequence, *li.coloring, 2, li.matroid->rank()));
  const auto p = cmt::brute_force_solve(*li.matroid, li.sequence, *li.coloring, 2);
  ASSERT_TRUE(p);
  EXPECT_TRUE(cmt::verify_partition(*li.matroid, li.sequence, *li.coloring, 2, p->parts));
  EXPECT_TRUE(ref::partition_exists(inst.matroid, inst.sequence, *inst.colors, 2));
  // First witness in lexicographic label order.
  EXPECT_EQ(th::indices(*p), (std::vector<std::vector<std::size_t>>{{1}, {2}}));
}

TEST(BruteForce, BudgetExceeded) {
  const auto m = cmt::build_matroid(th::uniform(2, 3));
  std::vector<std::size_t> ids(13, 0);
  const auto s = cmt::IndexedSequence::from_elements(els(ids));
  EXPECT_THROW(cmt::brute_force_solve(*m, s, 2), cmt::BudgetExceeded);
  cmt::BruteForceBudget tiny;
  tiny.max_assignments = 3;
  EXPECT_THROW(cmt::brute_force_solve(*m, th::seq({0, 1, 2, 0, 1}), 3, tiny),
               cmt::BudgetExceeded);
  EXPECT_THROW(cmt::brute_force_solve(*m, th::seq({0, 1}), 5), cmt::BudgetExceeded);
}

TEST(BruteForce, AgreesWithPlainEnumeration) {
  // Random small colored instances with no profile constraints at all.
  std::mt19937_64 rng(17);
  int with = 0;
  int without = 0;
  for (int t = 0; t < 300; ++t) {
    const auto family = cmt::kAllFamilies[rng() % 6];
    const std::size_t mm = 1 + rng() % 3;
    const auto spec = cmt::random_matroid_spec(family, mm, rng);
    const std::size_t ground = ref::size_of(spec);
    const std::size_t n = 1 + rng() % 6;
    const std::size_t r = 1 + rng() % 3;
    const std::size_t palette = 1 + rng() % 4;
    std::vector<std::size_t> seq;
    std::vector<std::uint64_t> colors;
    for (std::size_t i = 0; i < n; ++i) {
      seq.push_back(rng() % ground);
      colors.push_back(rng() % palette);
    }
    const auto m = cmt::build_matroid(spec);
    const auto s = cmt::IndexedSequence::from_elements(els(seq));
    std::vector<cmt::ColorId> cs;
    for (const auto c : colors) cs.push_back(cmt::ColorId{c});
    const auto p = cmt::brute_force_solve(*m, s, cmt::Coloring(cs), r);
    const bool exists = ref::partition_exists(spec, seq, colors, r);
    ASSERT_EQ(p.has_value(), exists) << cmt::emit_instance({spec, seq, colors, r});
    if (p) {
      EXPECT_TRUE(ref::is_tverberg_partition(spec, seq, colors, r, th::indices(*p)));
      ++with;
    } else {
      ++without;
    }
    // Colorless agreement as well.
    const auto q = cmt::brute_force_solve(*m, s, r);
    ASSERT_EQ(q.has_value(), ref::partition_exists(spec, seq, {}, r));
  }
  EXPECT_GT(with, 20);
  EXPECT_GT(without, 20);
}

TEST(TightInstance, Examples) {
  const auto u = cmt::build_matroid(th::uniform(2, 2));
  EXPECT_TRUE(cmt::tight_instance(*u, els({0, 1}), 1).empty());
  const auto t = cmt::tight_instance(*u, els({0, 1}), 3);
  EXPECT_EQ(t.elements(), els({0, 0, 1, 1}));
  const auto g = cmt::build_matroid(th::gf(2, 2, {{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(cmt::tight_instance(*g, els({0, 1}), 2).elements(), els({0, 1}));
}

TEST(TightInstance, NotABasis) {
  const auto g = cmt::build_matroid(th::gf(2, 2, {{1, 0}, {1, 0}, {0, 1}}));
  EXPECT_THROW(cmt::tight_instance(*g, els({0, 1}), 2), cmt::NotABasis);
  EXPECT_THROW(cmt::tight_instance(*g, els({0}), 2), cmt::NotABasis);
  EXPECT_THROW(cmt::tight_instance(*g, els({0, 9}), 2), cmt::NotABasis);
}

TEST(TightInstance, NoPartitionByPlainEnumeration) {
  const auto spec = th::gf(3, 2, {{1, 0}, {0, 1}, {1, 1}, {1, 2}});
  const auto m = cmt::build_matroid(spec);
  for (std::size_t r = 2; r <= 4; ++r) {
    const auto t = cmt::tight_instance(*m, els({2, 3}), r);
    std::vector<std::size_t> ids;
    for (const auto& e : t) ids.push_back(e.element.id);
    EXPECT_FALSE(ref::partition_exists(spec, ids, {}, r));
    EXPECT_FALSE(cmt::brute_force_solve(*m, t, r));
  }
}

TEST(CheckTightness, Examples) {
  const auto u = cmt::build_matroid(th::uniform(2, 2));
  EXPECT_TRUE(cmt::check_tightness(*u, els({0, 1}), 2).tight);
  const auto g = cmt::build_matroid(th::gf(3, 2, {{1, 0}, {0, 1}, {1, 1}, {1, 2}}));
  const auto rep = cmt::check_tightness(*g, els({0, 1}), 2);
  EXPECT_TRUE(rep.tight);
  EXPECT_TRUE(rep.lemma_agrees);
  EXPECT_GT(rep.divisions, 0u);
  EXPECT_TRUE(cmt::check_tightness(*g, els({2, 3}), 1).tight);
  EXPECT_THROW(cmt::check_tightness(*g, els({0, 1}), 8), cmt::BudgetExceeded);
}

TEST(IntersectionLemma, Examples) {
  const auto g = cmt::build_matroid(th::gf(
      2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}, {0, 0, 0}}));
  const auto b = els({0, 1, 2});
  EXPECT_TRUE(cmt::check_intersection_lemma(*g, b, els({0, 1}), els({0, 1})));
  EXPECT_TRUE(cmt::check_intersection_lemma(*g, b, els({0}), els({1, 2})));
  EXPECT_TRUE(cmt::check_intersection_lemma(*g, b, els({0, 1}), els({1, 2})));
  // Both sides are span{e2} together with the zero vector.
  std::vector<std::size_t> both;
  for (std::size_t x = 0; x < 8; ++x) {
    if (g->in_closure(GroundElement{x}, els({0, 1})) &&
        g->in_closure(GroundElement{x}, els({1, 2}))) {
      both.push_back(x);
    }
  }
  EXPECT_EQ(both, (std::vector<std::size_t>{1, 7}));
  EXPECT_THROW(cmt::check_intersection_lemma(*g, b, els({3}), els({1})), cmt::NotABasis);
  EXPECT_THROW(cmt::check_intersection_lemma(*g, els({0, 3}), els({0}), els({3})),
               cmt::NotABasis);
}

TEST(IntersectionLemma, CollinearPointsAreANegativeControl) {
  // Three collinear points a, b, c and a fourth point d off the line.
  // U = {a, b}, V = {c, d}: cl(U) n cl(V) contains c, but U n V is empty.
  const auto m = cmt::build_matroid(th::affine_rational(2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}}));
  EXPECT_FALSE(cmt::intersection_identity_holds(*m, els({0, 1}), els({2, 3})));
  EXPECT_THROW(cmt::check_intersection_lemma(*m, els({0, 1, 3}), els({0, 1}), els({2, 3})),
               cmt::NotABasis);
}

TEST(RotaCheck, Examples) {
  const auto one = cmt::build_matroid(th::gf(2, 1, {{1}}));
  const auto r1 = cmt::rota_check(*one, {els({0})});
  ASSERT_TRUE(r1.witness);
  EXPECT_EQ(th::indices(*r1.witness), (std::vector<std::vector<std::size_t>>{{0}}));

  const auto g = cmt::build_matroid(th::gf(2, 2, {{1, 0}, {0, 1}, {1, 1}, {1, 0}}));
  const auto r2 = cmt::rota_check(*g, {els({0, 1}), els({2, 3})});
  ASSERT_TRUE(r2.witness);
  for (const auto& part : r2.witness->parts) {
    EXPECT_TRUE(cmt::is_rainbow(part, r2.coloring));
    EXPECT_EQ(cmt::rank(*g, part.elements()), 2u);
  }
  EXPECT_THROW(cmt::rota_check(*g, {els({0, 3}), els({2, 1})}), cmt::NotABasis);
  EXPECT_THROW(cmt::rota_check(*g, {els({0, 1})}), cmt::NotABasis);
}

}  // namespace
