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

// Exact field arithmetic and incremental Gaussian elimination.
//
// Two fields are provided: the prime field GF(p) with 64-bit residues and the
// rationals with arbitrary-precision numerator and denominator. Span
// membership is decided by reducing a vector against an echelon basis; there
// is no floating point anywhere.

#ifndef CMT_FIELD_HPP_
#define CMT_FIELD_HPP_

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmt/error.hpp"

namespace cmt {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

class PrimeField {
 public:
  using Value = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) {
      throw Error("field characteristic " + std::to_string(p) +
                  " is not prime");
    }
  }

  std::uint64_t characteristic() const { return p_; }

  Value zero() const { return 0; }
  Value one() const { return 1; }
  bool is_zero(Value a) const { return a == 0; }

  Value from_integer(const BigInt& n) const {
    BigInt r = n % p_;
    if (r < 0) r += p_;
    return r.convert_to<std::uint64_t>();
  }

  Value add(Value a, Value b) const {
    const unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
    return static_cast<Value>(s % p_);
  }
  Value sub(Value a, Value b) const { return add(a, p_ - b); }
  Value mul(Value a, Value b) const {
    return static_cast<Value>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Value inv(Value a) const {
    // Fermat: a^(p-2).
    Value result = 1;
    Value base = a;
    std::uint64_t e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

 private:
  std::uint64_t p_;
};

class RationalField {
 public:
  using Value = BigRational;

  Value zero() const { return Value(0); }
  Value one() const { return Value(1); }
  bool is_zero(const Value& a) const { return a == 0; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value inv(const Value& a) const { return Value(1) / a; }
};

template <class F>
concept ExactField = requires(const F& f, const typename F::Value& a) {
  { f.zero() } -> std::convertible_to<typename F::Value>;
  { f.one() } -> std::convertible_to<typename F::Value>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.add(a, a) } -> std::convertible_to<typename F::Value>;
  { f.sub(a, a) } -> std::convertible_to<typename F::Value>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Value>;
  { f.inv(a) } -> std::convertible_to<typename F::Value>;
};

// Row-echelon basis of a subspace of F^dim, grown one vector at a time.
// Every stored row has a leading 1 in its pivot column and a zero in the
// pivot column of every earlier row.
template <ExactField F>
class EchelonBasis {
 public:
  using Value = typename F::Value;
  using Vector = std::vector<Value>;

  EchelonBasis(const F& field, std::size_t dim) : field_(field), dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  // Reduces `v` against the basis in place. Afterwards v is zero iff it lay
  // in the span.
  void reduce(Vector& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t piv = pivots_[i];
      if (field_.is_zero(v[piv])) continue;
      const Value factor = v[piv];
      for (std::size_t j = 0; j < dim_; ++j) {
        if (!field_.is_zero(rows_[i][j])) {
          v[j] = field_.sub(v[j], field_.mul(factor, rows_[i][j]));
        }
      }
    }
  }

  bool contains(Vector v) const {
    reduce(v);
    for (const auto& x : v) {
      if (!field_.is_zero(x)) return false;
    }
    return true;
  }

  // Adds v to the basis. Returns false (and leaves the basis unchanged) when
  // v is already in the span.
  bool insert(Vector v) {
    reduce(v);
    std::size_t piv = dim_;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!field_.is_zero(v[j])) {
        piv = j;
        break;
      }
    }
    if (piv == dim_) return false;
    const Value scale = field_.inv(v[piv]);
    for (auto& x : v) x = field_.mul(x, scale);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

 private:
  F field_;
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace cmt

#endif  // CMT_FIELD_HPP_
