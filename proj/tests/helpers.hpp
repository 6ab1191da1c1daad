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


// Small constructors shared by the unit tests.

#ifndef CMT_TESTS_HELPERS_HPP_
#define CMT_TESTS_HELPERS_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <utility>
#include <vector>

#include "cmt/cmt.hpp"

namespace th {

inline std::vector<cmt::GroundElement> els(std::initializer_list<std::size_t> ids) {
  std::vector<cmt::GroundElement> out;
  for (const auto i : ids) out.push_back(cmt::GroundElement{i});
  return out;
}

inline std::vector<cmt::GroundElement> els(const std::vector<std::size_t>& ids) {
  std::vector<cmt::GroundElement> out;
  for (const auto i : ids) out.push_back(cmt::GroundElement{i});
  return out;
}

inline std::vector<std::vector<cmt::BigRational>> rows(
    std::initializer_list<std::initializer_list<long>> rs) {
  std::vector<std::vector<cmt::BigRational>> out;
  for (const auto& r : rs) {
    std::vector<cmt::BigRational> row;
    for (const long x : r) row.emplace_back(x);
    out.push_back(std::move(row));
  }
  return out;
}

inline cmt::MatroidFamilySpec gf(std::uint64_t p, std::size_t dim,
                                 std::initializer_list<std::initializer_list<long>> rs) {
  return {cmt::VectorSpec{cmt::FieldSpec::prime(p), dim, rows(rs)}};
}

inline cmt::MatroidFamilySpec rational(
    std::size_t dim, std::initializer_list<std::initializer_list<long>> rs) {
  return {cmt::VectorSpec{cmt::FieldSpec::rational(), dim, rows(rs)}};
}

inline cmt::MatroidFamilySpec affine_rational(
    std::size_t dim, std::initializer_list<std::initializer_list<long>> rs) {
  return {cmt::AffineSpec{cmt::FieldSpec::rational(), dim, rows(rs)}};
}

inline cmt::MatroidFamilySpec uniform(std::size_t k, std::size_t n) {
  return {cmt::UniformSpec{k, n}};
}

inline cmt::MatroidFamilySpec graphic(
    std::size_t vertices,
    std::vector<std::pair<std::size_t, std::size_t>> edges) {
  return {cmt::GraphicSpec{vertices, std::move(edges)}};
}

inline cmt::IndexedSequence seq(std::initializer_list<std::size_t> ids) {
  return cmt::IndexedSequence::from_elements(els(ids));
}

inline cmt::Coloring colors(std::initializer_list<std::uint64_t> cs) {
  std::vector<cmt::ColorId> out;
  for (const auto c : cs) out.push_back(cmt::ColorId{c});
  return cmt::Coloring(std::move(out));
}

inline std::vector<std::vector<std::size_t>> indices(const cmt::Partition& p) {
  return cmt::part_indices(p);
}

}  // namespace th

#endif  // CMT_TESTS_HELPERS_HPP_
