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

// Concrete matroid families behind the MatroidOracle interface.
//
// Ground elements of every concrete family are numbered 0..n-1 in the order
// they were supplied. A direct sum numbers the left summand first.

#ifndef CMT_FAMILIES_HPP_
#define CMT_FAMILIES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cmt/error.hpp"
#include "cmt/field.hpp"
#include "cmt/matroid.hpp"

namespace cmt {

namespace detail {

inline std::vector<GroundElement> iota_ground(std::size_t n) {
  std::vector<GroundElement> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = GroundElement{i};
  return g;
}

}  // namespace detail

// Column matroid of a list of vectors over an exact field.
template <ExactField F>
class VectorMatroid final : public MatroidOracle {
 public:
  using Value = typename F::Value;
  using Vector = std::vector<Value>;

  VectorMatroid(F field, std::size_t dim, std::vector<Vector> vectors,
                std::string name = "vector matroid")
      : field_(std::move(field)),
        dim_(dim),
        vectors_(std::move(vectors)),
        name_(std::move(name)) {
    for (const auto& v : vectors_) {
      if (v.size() != dim_) {
        throw Error("vector of length " + std::to_string(v.size()) +
                    " in a matroid of dimension " + std::to_string(dim_));
      }
    }
  }

  std::vector<GroundElement> ground() const override {
    return detail::iota_ground(vectors_.size());
  }
  bool contains(GroundElement x) const override {
    return x.id < vectors_.size();
  }
  std::string describe() const override { return name_; }

  std::size_t dim() const { return dim_; }
  const Vector& vector(GroundElement x) const { return vectors_.at(x.id); }

 protected:
  bool closure_contains(GroundElement x,
                        std::span<const GroundElement> y) const override {
    EchelonBasis<F> basis(field_, dim_);
    for (const auto& e : y) {
      if (e == x) return true;
      basis.insert(vectors_[e.id]);
      if (basis.rank() == dim_) return true;
    }
    return basis.contains(vectors_[x.id]);
  }

 private:
  F field_;
  std::size_t dim_;
  std::vector<Vector> vectors_;
  std::string name_;
};

// U_k^n. Closure of Y is Y itself when Y has fewer than k distinct elements,
// otherwise everything.
class UniformMatroid final : public MatroidOracle {
 public:
  UniformMatroid(std::size_t k, std::size_t n) : k_(k), n_(n) {
    if (k > n) {
      throw Error("uniform matroid rank " + std::to_string(k) +
                  " exceeds ground size " + std::to_string(n));
    }
  }

  std::vector<GroundElement> ground() const override {
    return detail::iota_ground(n_);
  }
  bool contains(GroundElement x) const override { return x.id < n_; }
  std::string describe() const override {
    return "U_" + std::to_string(k_) + "^" + std::to_string(n_);
  }

 protected:
  bool closure_contains(GroundElement x,
                        std::span<const GroundElement> y) const override {
    if (std::find(y.begin(), y.end(), x) != y.end()) return true;
    if (y.size() < k_) return false;
    std::vector<GroundElement> distinct(y.begin(), y.end());
    std::sort(distinct.begin(), distinct.end());
    const auto n = static_cast<std::size_t>(
        std::unique(distinct.begin(), distinct.end()) - distinct.begin());
    return n >= k_;
  }

 private:
  std::size_t k_;
  std::size_t n_;
};

// Cycle matroid of a multigraph. A self-loop edge is a matroid loop.
class GraphicMatroid final : public MatroidOracle {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  GraphicMatroid(std::size_t vertices, std::vector<Edge> edges)
      : vertices_(vertices), edges_(std::move(edges)) {
    for (const auto& [u, v] : edges_) {
      if (u >= vertices_ || v >= vertices_) {
        throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") references a vertex outside 0.." +
                    std::to_string(vertices_ == 0 ? 0 : vertices_ - 1));
      }
    }
  }

  std::vector<GroundElement> ground() const override {
    return detail::iota_ground(edges_.size());
  }
  bool contains(GroundElement x) const override { return x.id < edges_.size(); }
  std::string describe() const override {
    return "graphic matroid on " + std::to_string(vertices_) + " vertices";
  }

  const Edge& edge(GroundElement x) const { return edges_.at(x.id); }

 protected:
  bool closure_contains(GroundElement x,
                        std::span<const GroundElement> y) const override {
    const auto [a, b] = edges_[x.id];
    if (a == b) return true;
    std::vector<std::size_t> parent(vertices_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    for (const auto& e : y) {
      const auto [u, v] = edges_[e.id];
      parent[find(u)] = find(v);
    }
    return find(a) == find(b);
  }

 private:
  std::size_t vertices_;
  std::vector<Edge> edges_;
};

// Direct sum. Element i < |left ground| is the i-th left ground element; the
// rest are the right ground elements in order.
class DirectSum final : public MatroidOracle {
 public:
  DirectSum(std::shared_ptr<const MatroidOracle> left,
            std::shared_ptr<const MatroidOracle> right)
      : left_(std::move(left)),
        right_(std::move(right)),
        left_ground_(left_->ground()),
        right_ground_(right_->ground()) {}

  std::vector<GroundElement> ground() const override {
    return detail::iota_ground(left_ground_.size() + right_ground_.size());
  }
  bool contains(GroundElement x) const override {
    return x.id < left_ground_.size() + right_ground_.size();
  }
  std::string describe() const override {
    return "(" + left_->describe() + ") + (" + right_->describe() + ")";
  }

  std::size_t left_size() const { return left_ground_.size(); }
  const MatroidOracle& left() const { return *left_; }
  const MatroidOracle& right() const { return *right_; }

  // Element of the direct sum standing for the i-th right ground element.
  GroundElement right_element(std::size_t i) const {
    return GroundElement{left_ground_.size() + i};
  }

 protected:
  bool closure_contains(GroundElement x,
                        std::span<const GroundElement> y) const override {
    const bool x_left = x.id < left_ground_.size();
    std::vector<GroundElement> part;
    for (const auto& e : y) {
      const bool e_left = e.id < left_ground_.size();
      if (e_left != x_left) continue;
      part.push_back(e_left ? left_ground_[e.id]
                            : right_ground_[e.id - left_ground_.size()]);
    }
    if (x_left) return left_->in_closure(left_ground_[x.id], part);
    return right_->in_closure(right_ground_[x.id - left_ground_.size()], part);
  }

 private:
  std::shared_ptr<const MatroidOracle> left_;
  std::shared_ptr<const MatroidOracle> right_;
  std::vector<GroundElement> left_ground_;
  std::vector<GroundElement> right_ground_;
};

// M with `count` fresh coloops appended (direct sum with the free matroid
// U_count^count). Old elements keep their ids.
inline std::shared_ptr<const DirectSum> add_coloops(
    std::shared_ptr<const MatroidOracle> m, std::size_t count) {
  return std::make_shared<const DirectSum>(
      std::move(m), std::make_shared<const UniformMatroid>(count, count));
}

// Restriction of a matroid to a subset of its ground set. Element ids are
// those of the parent.
class Restriction final : public MatroidOracle {
 public:
  Restriction(std::shared_ptr<const MatroidOracle> base,
              std::vector<GroundElement> subset)
      : base_(std::move(base)) {
    for (const auto& e : subset) {
      if (!base_->contains(e)) {
        throw UnknownElement("element " + std::to_string(e.id) +
                             " is not in the ground set of " +
                             base_->describe());
      }
      if (std::find(ground_.begin(), ground_.end(), e) == ground_.end()) {
        ground_.push_back(e);
      }
    }
    sorted_ = ground_;
    std::sort(sorted_.begin(), sorted_.end());
  }

  std::vector<GroundElement> ground() const override { return ground_; }
  bool contains(GroundElement x) const override {
    return std::binary_search(sorted_.begin(), sorted_.end(), x);
  }
  std::string describe() const override {
    return "restriction of " + base_->describe();
  }

 protected:
  bool closure_contains(GroundElement x,
                        std::span<const GroundElement> y) const override {
    return base_->in_closure(x, y);
  }

 private:
  std::shared_ptr<const MatroidOracle> base_;
  std::vector<GroundElement> ground_;
  std::vector<GroundElement> sorted_;
};

struct RestrictedView {
  std::shared_ptr<const Restriction> view;
  std::size_t rank = 0;
};

inline RestrictedView restrict_rank(std::shared_ptr<const MatroidOracle> m,
                                    std::span<const GroundElement> s) {
  auto view = std::make_shared<const Restriction>(
      std::move(m), std::vector<GroundElement>(s.begin(), s.end()));
  const std::size_t r = view->rank();
  return RestrictedView{std::move(view), r};
}

// ---------------------------------------------------------------------------
// Declarative description of a concrete matroid, as read from instance files.

struct FieldSpec {
  enum class Kind { kPrime, kRational };
  Kind kind = Kind::kRational;
  std::uint64_t p = 0;  // only for kPrime

  static FieldSpec prime(std::uint64_t p) { return {Kind::kPrime, p}; }
  static FieldSpec rational() { return {Kind::kRational, 0}; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct VectorSpec {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::vector<BigRational>> vectors;

  friend bool operator==(const VectorSpec&, const VectorSpec&) = default;
};

// Points of an affine space; lifted internally by appending a coordinate 1.
struct AffineSpec {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::vector<BigRational>> points;

  friend bool operator==(const AffineSpec&, const AffineSpec&) = default;
};

struct UniformSpec {
  std::size_t rank = 0;
  std::size_t size = 0;

  friend bool operator==(const UniformSpec&, const UniformSpec&) = default;
};

struct GraphicSpec {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  friend bool operator==(const GraphicSpec&, const GraphicSpec&) = default;
};

struct MatroidFamilySpec;

struct DirectSumSpec {
  // Exactly two entries: left, right.
  std::vector<MatroidFamilySpec> summands;

  friend bool operator==(const DirectSumSpec& a, const DirectSumSpec& b);
};

struct MatroidFamilySpec {
  std::variant<VectorSpec, AffineSpec, UniformSpec, GraphicSpec,
               DirectSumSpec>
      family;

  friend bool operator==(const MatroidFamilySpec& a,
                         const MatroidFamilySpec& b) {
    return a.family == b.family;
  }
};

inline bool operator==(const DirectSumSpec& a, const DirectSumSpec& b) {
  return a.summands == b.summands;
}

inline std::size_t ground_size(const MatroidFamilySpec& spec) {
  struct Visitor {
    std::size_t operator()(const VectorSpec& s) const {
      return s.vectors.size();
    }
    std::size_t operator()(const AffineSpec& s) const {
      return s.points.size();
    }
    std::size_t operator()(const UniformSpec& s) const { return s.size; }
    std::size_t operator()(const GraphicSpec& s) const {
      return s.edges.size();
    }
    std::size_t operator()(const DirectSumSpec& s) const {
      std::size_t n = 0;
      for (const auto& part : s.summands) n += ground_size(part);
      return n;
    }
  };
  return std::visit(Visitor{}, spec.family);
}

namespace detail {

inline std::vector<std::vector<PrimeField::Value>> to_residues(
    const PrimeField& f, const std::vector<std::vector<BigRational>>& rows,
    bool lift) {
  std::vector<std::vector<PrimeField::Value>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<PrimeField::Value> v;
    v.reserve(row.size() + 1);
    for (const auto& q : row) {
      if (denominator(q) != 1) {
        throw Error("coordinate " + q.str() + " is not an integer (GF(" +
                    std::to_string(f.characteristic()) + ") coordinates)");
      }
      v.push_back(f.from_integer(numerator(q)));
    }
    if (lift) v.push_back(f.one());
    out.push_back(std::move(v));
  }
  return out;
}

inline std::shared_ptr<const MatroidOracle> build_linear(
    const FieldSpec& field, std::size_t dim,
    const std::vector<std::vector<BigRational>>& rows, bool lift) {
  for (const auto& row : rows) {
    if (row.size() != dim) {
      throw Error("expected " + std::to_string(dim) + " coordinates, got " +
                  std::to_string(row.size()));
    }
  }
  const std::size_t d = lift ? dim + 1 : dim;
  const std::string kind = lift ? "affine" : "vector";
  if (field.kind == FieldSpec::Kind::kPrime) {
    PrimeField f(field.p);
    return std::make_shared<const VectorMatroid<PrimeField>>(
        f, d, to_residues(f, rows, lift),
        kind + " matroid over GF(" + std::to_string(field.p) + ")");
  }
  std::vector<std::vector<BigRational>> vs = rows;
  if (lift) {
    for (auto& v : vs) v.emplace_back(1);
  }
  return std::make_shared<const VectorMatroid<RationalField>>(
      RationalField{}, d, std::move(vs), kind + " matroid over Q");
}

}  // namespace detail

inline std::shared_ptr<const MatroidOracle> build_matroid(
    const MatroidFamilySpec& spec) {
  struct Visitor {
    std::shared_ptr<const MatroidOracle> operator()(const VectorSpec& s) const {
      return detail::build_linear(s.field, s.dim, s.vectors, false);
    }
    std::shared_ptr<const MatroidOracle> operator()(const AffineSpec& s) const {
      return detail::build_linear(s.field, s.dim, s.points, true);
    }
    std::shared_ptr<const MatroidOracle> operator()(
        const UniformSpec& s) const {
      return std::make_shared<const UniformMatroid>(s.rank, s.size);
    }
    std::shared_ptr<const MatroidOracle> operator()(
        const GraphicSpec& s) const {
      return std::make_shared<const GraphicMatroid>(s.vertices, s.edges);
    }
    std::shared_ptr<const MatroidOracle> operator()(
        const DirectSumSpec& s) const {
      if (s.summands.size() != 2) {
        throw Error("direct sum needs exactly two summands");
      }
      return std::make_shared<const DirectSum>(build_matroid(s.summands[0]),
                                               build_matroid(s.summands[1]));
    }
  };
  return std::visit(Visitor{}, spec.family);
}

}  // namespace cmt

#endif  // CMT_FAMILIES_HPP_
