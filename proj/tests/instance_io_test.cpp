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
#include <string>

#include <gtest/gtest.h>

#include "cmt/cmt.hpp"
#include "helpers.hpp"

namespace {

const char* const kCanonical =
    "matroid direct_sum\n"
    "  matroid vector\n"
    "    field gf 3\n"
    "    dim 2\n"
    "    vector 1 0\n"
    "    vector 2 1\n"
    "  end\n"
    "  matroid affine\n"
    "    field rational\n"
    "    dim 1\n"
    "    point -1/2\n"
    "    point 7\n"
    "  end\n"
    "end\n"
    "sequence 0 1 2 3 3\n"
    "colors 4 0 4 1 2\n"
    "r 2\n"
    "mode special\n";

TEST(InstanceText, CanonicalTextRoundTrips) {
  const auto inst = cmt::parse_instance(kCanonical);
  EXPECT_EQ(cmt::emit_instance(inst), kCanonical);
  EXPECT_EQ(cmt::parse_instance(cmt::emit_instance(inst)), inst);
}

TEST(InstanceText, CommentsBlankLinesAndIndentationAreIgnored) {
  const std::string text =
      "# an instance\n"
      "\n"
      "matroid uniform   # U_2^3\n"
      "rank 2\n"
      "     size 3\n"
      "end\n"
      "mode noncolor\n"
      "r 2\n"
      "sequence 0 1 2\n";
  const auto inst = cmt::parse_instance(text);
  EXPECT_EQ(inst.matroid, (cmt::MatroidFamilySpec{cmt::UniformSpec{2, 3}}));
  EXPECT_FALSE(inst.colors);
  EXPECT_EQ(cmt::emit_instance(inst),
            "matroid uniform\n  rank 2\n  size 3\nend\nsequence 0 1 2\nr 2\nmode noncolor\n");
}

TEST(InstanceText, RationalsAreNormalized) {
  const auto inst = cmt::parse_instance(
      "matroid vector\n field rational\n dim 2\n vector 2/4 -6/3\nend\n"
      "sequence 0\nr 1\nmode noncolor\n");
  const auto text = cmt::emit_instance(inst);
  EXPECT_NE(text.find("vector 1/2 -2\n"), std::string::npos) << text;
}

TEST(InstanceText, BigIntegersSurvive) {
  const std::string big = "123456789012345678901234567891/1024";
  const auto inst = cmt::parse_instance(
      "matroid vector\n field rational\n dim 1\n vector " + big + "\nend\n"
      "sequence 0\nr 1\nmode noncolor\n");
  EXPECT_NE(cmt::emit_instance(inst).find(big), std::string::npos);
}

TEST(InstanceText, GraphicRoundTrip) {
  cmt::InstanceFile inst;
  inst.matroid = th::graphic(3, {{0, 1}, {1, 2}, {2, 2}});
  inst.sequence = {0, 1};
  inst.colors = std::vector<std::uint64_t>{3, 3};
  inst.r = 1;
  inst.mode = cmt::SolveMode::kGeneral;
  EXPECT_EQ(cmt::parse_instance(cmt::emit_instance(inst)), inst);
}

TEST(InstanceText, GeneratedInstancesRoundTrip) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    cmt::RandomRequest req;
    req.family = cmt::kAllFamilies[rng() % 6];
    req.m = 1 + rng() % 4;
    req.r = 1 + rng() % 4;
    req.target_length = rng() % 14;
    req.seed = rng();
    req.profile = rng() % 2 ? cmt::Profile::kGeneral : cmt::Profile::kSpecial;
    const auto inst = cmt::gen_random_instance(req);
    const auto text = cmt::emit_instance(inst);
    EXPECT_EQ(cmt::parse_instance(text), inst);
    EXPECT_EQ(cmt::emit_instance(cmt::parse_instance(text)), text);
  }
}

void expect_parse_error(const std::string& text, std::size_t line, const std::string& field) {
  try {
    cmt::parse_instance(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const cmt::ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.field(), field) << e.what();
  }
}

TEST(InstanceText, Errors) {
  const std::string u = "matroid uniform\nrank 1\nsize 2\nend\n";
  // Missing colors in general mode.
  expect_parse_error(u + "sequence 0 1\nr 2\nmode general\n", 7, "colors");
  expect_parse_error(u + "sequence 0 5\nr 2\nmode noncolor\n", 5, "sequence");
  expect_parse_error(u + "sequence 0 1\ncolors 1\nr 2\nmode general\n", 8, "colors");
  expect_parse_error(u + "sequence 0 x\nr 2\nmode noncolor\n", 5, "sequence");
  expect_parse_error(u + "sequence 0\nr 0\nmode noncolor\n", 6, "r");
  expect_parse_error(u + "sequence 0\nr 1\nmode weird\n", 7, "mode");
  expect_parse_error(u + "sequence 0\nr 1\n", 6, "mode");
  expect_parse_error(u + "sequence 0\nr 1\nmode noncolor\nfoo 1\n", 8, "foo");
  expect_parse_error("matroid uniform\nrank 3\nsize 2\nend\nsequence 0\nr 1\nmode noncolor\n", 1,
                     "rank");
  expect_parse_error("matroid vector\nfield gf 4\ndim 1\nend\n", 2, "field");
  expect_parse_error("matroid vector\nfield gf 3\ndim 1\nvector 1/2\nend\n", 4, "vector");
  expect_parse_error("matroid vector\nfield rational\ndim 2\nvector 1\nend\n", 4, "vector");
  expect_parse_error("matroid vector\nfield rational\ndim 1\nvector 1/0\nend\n", 4, "vector");
  expect_parse_error("matroid graphic\nvertices 2\nedge 0 2\nend\n", 3, "edge");
  expect_parse_error("matroid uniform\nrank 1\n", 2, "uniform");
  expect_parse_error("matroid direct_sum\n" + u + "end\n", 1, "direct_sum");
  expect_parse_error("matroid hyper\nend\n", 1, "matroid");
}

TEST(PartitionText, RoundTrip) {
  const std::vector<std::vector<std::size_t>> parts{{0, 3}, {}, {1, 2, 5}};
  const auto text = cmt::emit_partition_file(parts);
  EXPECT_EQ(text, "part 0 3\npart\npart 1 2 5\n");
  EXPECT_EQ(cmt::parse_partition_file(text), parts);
  EXPECT_THROW(cmt::parse_partition_file("bogus 1\n"), cmt::ParseError);
}

TEST(RunReport, JsonAndText) {
  cmt::RunReport rep;
  rep.outcome = cmt::RunReport::Outcome::kPartition;
  rep.parts = {{0}, {1, 2}};
  rep.certificate.spanning = {{0}, {1, 2}};
  rep.certificate.bottom_witness = 0;
  rep.oracle_calls = 12;
  const auto j = cmt::to_json(rep);
  EXPECT_EQ(j["outcome"], "partition");
  EXPECT_EQ(j["parts"][1][1], 2);
  EXPECT_EQ(j["oracle_calls"], 12);
  const auto text = cmt::to_text(rep);
  EXPECT_NE(text.find("part 2: 1 2\n"), std::string::npos);
  EXPECT_NE(text.find("oracle_calls 12\n"), std::string::npos);
}

TEST(Generator, SameSeedSameInstance) {
  cmt::RandomRequest req;
  req.family = cmt::Family::kRational;
  req.m = 3;
  req.r = 3;
  req.seed = 42;
  EXPECT_EQ(cmt::gen_random_instance(req), cmt::gen_random_instance(req));
  req.seed = 43;
  EXPECT_FALSE(cmt::gen_random_instance(req) == cmt::gen_random_instance({}));
}

TEST(Generator, ProfilesHoldByConstruction) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    cmt::RandomRequest req;
    req.family = cmt::kAllFamilies[rng() % 6];
    req.m = 1 + rng() % 4;
    req.r = 1 + rng() % 5;
    req.target_length = rng() % 20;
    req.seed = rng();
    req.profile = rng() % 2 ? cmt::Profile::kGeneral : cmt::Profile::kSpecial;
    const auto inst = cmt::gen_random_instance(req);
    const auto li = cmt::load(inst);
    EXPECT_EQ(li.matroid->rank(), req.m);
    for (const auto& e : li.sequence) EXPECT_FALSE(cmt::is_loop(*li.matroid, e.element));
    if (req.profile == cmt::Profile::kGeneral) {
      EXPECT_TRUE(cmt::check_general_profile(li.sequence, *li.coloring, req.r, req.m));
    } else {
      EXPECT_TRUE(cmt::check_special_profile(li.sequence, *li.coloring, req.r, req.m));
      EXPECT_EQ(cmt::rank(*li.matroid, li.sequence.elements()), req.m);
    }
  }
}

TEST(Generator, InfeasibleRequests) {
  cmt::RandomRequest req;
  req.m = 3;
  req.r = 2;
  req.profile = cmt::Profile::kSpecial;
  req.colors = 2;
  EXPECT_THROW(cmt::gen_random_instance(req), cmt::InfeasibleRequest);
  req.profile = cmt::Profile::kGeneral;
  req.colors = 2;  // two colors hold at most r + (r-1) = 3 entries < 4
  EXPECT_THROW(cmt::gen_random_instance(req), cmt::InfeasibleRequest);
  req.m = 0;
  EXPECT_THROW(cmt::gen_random_instance(req), cmt::InfeasibleRequest);
}

TEST(Generator, TightInstanceHasLengthMTimesRMinusOne) {
  for (const auto f : cmt::kAllFamilies) {
    const auto inst = cmt::gen_tight_instance(f, 3, 3, 1);
    EXPECT_EQ(inst.sequence.size(), 6u);
    EXPECT_EQ(inst.mode, cmt::SolveMode::kNoncolor);
  }
}

}  // namespace
