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

// Line-oriented instance format. Grammar (see also README.md):
//
//   file      := block* ; blank lines and '#' comments are ignored
//   block     := matroid | "sequence" id* | "colors" color* | "r" N
//              | "mode" ("general" | "special" | "noncolor")
//   matroid   := "matroid" family NL body "end"
//   family    := vector | affine | uniform | graphic | direct_sum
//   vector    := "field" ("rational" | "gf" P) NL "dim" D NL ("vector" q^D NL)*
//   affine    := "field" ... NL "dim" D NL ("point" q^D NL)*
//   uniform   := "rank" K NL "size" N
//   graphic   := "vertices" N NL ("edge" U V NL)*
//   direct_sum:= matroid matroid
//
// Coordinates q are integers or "numerator/denominator" of arbitrary size.
// Sequence ids index the ground set of the matroid (0-based, a direct sum
// numbers its left summand first). Emission is canonical: two-space indent
// per nesting level, keys in the order above, rationals in lowest terms.

#ifndef CMT_INSTANCE_IO_HPP_
#define CMT_INSTANCE_IO_HPP_

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cmt/colored_seq.hpp"
#include "cmt/error.hpp"
#include "cmt/families.hpp"
#include "cmt/solver.hpp"

namespace cmt {

enum class SolveMode { kGeneral, kSpecial, kNoncolor };

inline const char* to_string(SolveMode m) {
  switch (m) {
    case SolveMode::kGeneral: return "general";
    case SolveMode::kSpecial: return "special";
    case SolveMode::kNoncolor: return "noncolor";
  }
  return "?";
}

struct InstanceFile {
  MatroidFamilySpec matroid;
  std::vector<std::size_t> sequence;
  std::optional<std::vector<std::uint64_t>> colors;
  std::size_t r = 1;
  SolveMode mode = SolveMode::kGeneral;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

namespace detail {

struct Line {
  std::size_t number = 0;
  std::string key;
  std::vector<std::string> args;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::istringstream words{std::string(raw)};
    Line line;
    line.number = number;
    if (!(words >> line.key)) continue;
    for (std::string w; words >> w;) line.args.push_back(w);
    out.push_back(std::move(line));
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Line> lines) : lines_(std::move(lines)) {}

  InstanceFile parse_instance() {
    InstanceFile inst;
    bool have_matroid = false;
    bool have_sequence = false;
    bool have_r = false;
    bool have_mode = false;
    std::size_t sequence_line = 0;
    while (pos_ < lines_.size()) {
      const Line& ln = lines_[pos_];
      if (ln.key == "matroid") {
        if (have_matroid) fail(ln, "matroid", "duplicate matroid block");
        inst.matroid = parse_matroid();
        have_matroid = true;
        continue;
      }
      ++pos_;
      if (ln.key == "sequence") {
        if (have_sequence) fail(ln, "sequence", "duplicate field");
        for (const auto& a : ln.args) {
          inst.sequence.push_back(to_size(ln, "sequence", a));
        }
        have_sequence = true;
        sequence_line = ln.number;
      } else if (ln.key == "colors") {
        if (inst.colors) fail(ln, "colors", "duplicate field");
        std::vector<std::uint64_t> cs;
        for (const auto& a : ln.args) cs.push_back(to_u64(ln, "colors", a));
        inst.colors = std::move(cs);
      } else if (ln.key == "r") {
        if (have_r) fail(ln, "r", "duplicate field");
        want_args(ln, 1);
        inst.r = to_size(ln, "r", ln.args[0]);
        if (inst.r == 0) fail(ln, "r", "r must be at least 1");
        have_r = true;
      } else if (ln.key == "mode") {
        if (have_mode) fail(ln, "mode", "duplicate field");
        want_args(ln, 1);
        const auto& m = ln.args[0];
        if (m == "general") {
          inst.mode = SolveMode::kGeneral;
        } else if (m == "special") {
          inst.mode = SolveMode::kSpecial;
        } else if (m == "noncolor") {
          inst.mode = SolveMode::kNoncolor;
        } else {
          fail(ln, "mode", "unknown mode '" + m + "'");
        }
        have_mode = true;
      } else {
        fail(ln, ln.key, "unknown field");
      }
    }
    const std::size_t last = lines_.empty() ? 0 : lines_.back().number;
    if (!have_matroid) throw ParseError(last, "matroid", "missing field");
    if (!have_sequence) throw ParseError(last, "sequence", "missing field");
    if (!have_r) throw ParseError(last, "r", "missing field");
    if (!have_mode) throw ParseError(last, "mode", "missing field");
    if (inst.mode != SolveMode::kNoncolor && !inst.colors) {
      throw ParseError(last, "colors",
                       std::string("missing field (required in mode ") +
                           to_string(inst.mode) + ")");
    }
    if (inst.colors && inst.colors->size() != inst.sequence.size()) {
      throw ParseError(last, "colors",
                       std::to_string(inst.colors->size()) +
                           " colors for a sequence of length " +
                           std::to_string(inst.sequence.size()));
    }
    const std::size_t n = ground_size(inst.matroid);
    for (const auto id : inst.sequence) {
      if (id >= n) {
        throw ParseError(sequence_line, "sequence",
                         "element " + std::to_string(id) +
                             " outside a ground set of size " +
                             std::to_string(n));
      }
    }
    return inst;
  }

  std::vector<std::vector<std::size_t>> parse_partition() {
    std::vector<std::vector<std::size_t>> parts;
    for (const auto& ln : lines_) {
      if (ln.key != "part") fail(ln, ln.key, "expected 'part'");
      std::vector<std::size_t> p;
      for (const auto& a : ln.args) p.push_back(to_size(ln, "part", a));
      parts.push_back(std::move(p));
    }
    return parts;
  }

 private:
  [[noreturn]] static void fail(const Line& ln, const std::string& field,
                                const std::string& what) {
    throw ParseError(ln.number, field, what);
  }

  static void want_args(const Line& ln, std::size_t n) {
    if (ln.args.size() != n) {
      fail(ln, ln.key,
           "expected " + std::to_string(n) + " value(s), got " +
               std::to_string(ln.args.size()));
    }
  }

  static std::uint64_t to_u64(const Line& ln, const std::string& field,
                              const std::string& s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      fail(ln, field, "'" + s + "' is not a non-negative integer");
    }
    return v;
  }

  static std::size_t to_size(const Line& ln, const std::string& field,
                             const std::string& s) {
    return static_cast<std::size_t>(to_u64(ln, field, s));
  }

  static BigRational to_rational(const Line& ln, const std::string& field,
                                 const std::string& s) {
    auto valid_int = [](std::string_view t) {
      if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
      if (t.empty()) return false;
      for (char ch : t) {
        if (ch < '0' || ch > '9') return false;
      }
      return true;
    };
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den =
        slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' ||
        den.front() == '+') {
      fail(ln, field, "'" + s + "' is not a rational number");
    }
    const BigInt d(den);
    if (d == 0) fail(ln, field, "zero denominator in '" + s + "'");
    return BigRational(BigInt(num[0] == '+' ? num.substr(1) : num), d);
  }

  const Line& next(const std::string& context) {
    if (pos_ >= lines_.size()) {
      throw ParseError(lines_.empty() ? 0 : lines_.back().number, context,
                       "unexpected end of input (missing 'end')");
    }
    return lines_[pos_++];
  }

  FieldSpec parse_field(const Line& ln) {
    if (ln.args.size() == 1 && ln.args[0] == "rational") {
      return FieldSpec::rational();
    }
    if (ln.args.size() == 2 && ln.args[0] == "gf") {
      const auto p = to_u64(ln, "field", ln.args[1]);
      if (!is_prime(p)) fail(ln, "field", std::to_string(p) + " is not prime");
      if (p >= (std::uint64_t{1} << 62)) fail(ln, "field", "prime too large");
      return FieldSpec::prime(p);
    }
    fail(ln, "field", "expected 'rational' or 'gf <prime>'");
  }

  // Parses a "matroid <family> ... end" block starting at the current line.
  MatroidFamilySpec parse_matroid() {
    const Line& head = next("matroid");
    want_args(head, 1);
    const std::string family = head.args[0];
    if (family == "vector" || family == "affine") {
      const bool affine = family == "affine";
      const std::string row_key = affine ? "point" : "vector";
      std::optional<FieldSpec> field;
      std::optional<std::size_t> dim;
      std::vector<std::vector<BigRational>> rows;
      while (true) {
        const Line& ln = next(family);
        if (ln.key == "end") break;
        if (ln.key == "field") {
          if (field) fail(ln, "field", "duplicate field");
          field = parse_field(ln);
        } else if (ln.key == "dim") {
          if (dim) fail(ln, "dim", "duplicate field");
          want_args(ln, 1);
          dim = to_size(ln, "dim", ln.args[0]);
        } else if (ln.key == row_key) {
          if (!field || !dim) fail(ln, row_key, "'field' and 'dim' must come first");
          if (ln.args.size() != *dim) {
            fail(ln, row_key,
                 "expected " + std::to_string(*dim) + " coordinates, got " +
                     std::to_string(ln.args.size()));
          }
          std::vector<BigRational> row;
          for (const auto& a : ln.args) {
            row.push_back(to_rational(ln, row_key, a));
            if (field->kind == FieldSpec::Kind::kPrime &&
                denominator(row.back()) != 1) {
              fail(ln, row_key, "GF(p) coordinates must be integers");
            }
          }
          rows.push_back(std::move(row));
        } else {
          fail(ln, ln.key, "unknown field in " + family + " matroid");
        }
      }
      if (!field) throw ParseError(head.number, "field", "missing field");
      if (!dim) throw ParseError(head.number, "dim", "missing field");
      if (affine) return MatroidFamilySpec{AffineSpec{*field, *dim, std::move(rows)}};
      return MatroidFamilySpec{VectorSpec{*field, *dim, std::move(rows)}};
    }
    if (family == "uniform") {
      std::optional<std::size_t> k;
      std::optional<std::size_t> n;
      while (true) {
        const Line& ln = next(family);
        if (ln.key == "end") break;
        if (ln.key == "rank" || ln.key == "size") {
          auto& slot = ln.key == "rank" ? k : n;
          if (slot) fail(ln, ln.key, "duplicate field");
          want_args(ln, 1);
          slot = to_size(ln, ln.key, ln.args[0]);
        } else {
          fail(ln, ln.key, "unknown field in uniform matroid");
        }
      }
      if (!k) throw ParseError(head.number, "rank", "missing field");
      if (!n) throw ParseError(head.number, "size", "missing field");
      if (*k > *n) throw ParseError(head.number, "rank", "rank exceeds size");
      return MatroidFamilySpec{UniformSpec{*k, *n}};
    }
    if (family == "graphic") {
      std::optional<std::size_t> vertices;
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      while (true) {
        const Line& ln = next(family);
        if (ln.key == "end") break;
        if (ln.key == "vertices") {
          if (vertices) fail(ln, "vertices", "duplicate field");
          want_args(ln, 1);
          vertices = to_size(ln, "vertices", ln.args[0]);
        } else if (ln.key == "edge") {
          if (!vertices) fail(ln, "edge", "'vertices' must come first");
          want_args(ln, 2);
          const auto u = to_size(ln, "edge", ln.args[0]);
          const auto v = to_size(ln, "edge", ln.args[1]);
          if (u >= *vertices || v >= *vertices) {
            fail(ln, "edge", "vertex out of range");
          }
          edges.emplace_back(u, v);
        } else {
          fail(ln, ln.key, "unknown field in graphic matroid");
        }
      }
      if (!vertices) throw ParseError(head.number, "vertices", "missing field");
      return MatroidFamilySpec{GraphicSpec{*vertices, std::move(edges)}};
    }
    if (family == "direct_sum") {
      DirectSumSpec sum;
      while (true) {
        if (pos_ >= lines_.size()) {
          throw ParseError(head.number, "direct_sum", "missing 'end'");
        }
        const Line& ln = lines_[pos_];
        if (ln.key == "end") {
          ++pos_;
          break;
        }
        if (ln.key != "matroid") fail(ln, ln.key, "expected a nested matroid");
        sum.summands.push_back(parse_matroid());
      }
      if (sum.summands.size() != 2) {
        throw ParseError(head.number, "direct_sum",
                         "expected exactly two summands");
      }
      return MatroidFamilySpec{std::move(sum)};
    }
    fail(head, "matroid", "unknown family '" + family + "'");
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

inline std::string field_line(const FieldSpec& f) {
  return f.kind == FieldSpec::Kind::kRational ? "field rational"
                                              : "field gf " + std::to_string(f.p);
}

inline void emit_matroid(std::ostream& os, const MatroidFamilySpec& spec,
                         const std::string& indent) {
  const std::string in = indent + "  ";
  auto rows = [&](const char* key,
                  const std::vector<std::vector<BigRational>>& rs) {
    for (const auto& row : rs) {
      os << in << key;
      for (const auto& q : row) os << ' ' << q.str();
      os << '\n';
    }
  };
  struct Visitor {
    std::ostream& os;
    const std::string& indent;
    const std::string& in;
    decltype(rows)& emit_rows;
    void operator()(const VectorSpec& s) const {
      os << indent << "matroid vector\n" << in << field_line(s.field) << '\n'
         << in << "dim " << s.dim << '\n';
      emit_rows("vector", s.vectors);
    }
    void operator()(const AffineSpec& s) const {
      os << indent << "matroid affine\n" << in << field_line(s.field) << '\n'
         << in << "dim " << s.dim << '\n';
      emit_rows("point", s.points);
    }
    void operator()(const UniformSpec& s) const {
      os << indent << "matroid uniform\n" << in << "rank " << s.rank << '\n'
         << in << "size " << s.size << '\n';
    }
    void operator()(const GraphicSpec& s) const {
      os << indent << "matroid graphic\n" << in << "vertices " << s.vertices
         << '\n';
      for (const auto& [u, v] : s.edges) os << in << "edge " << u << ' ' << v << '\n';
    }
    void operator()(const DirectSumSpec& s) const {
      os << indent << "matroid direct_sum\n";
      for (const auto& part : s.summands) emit_matroid(os, part, in);
    }
  };
  std::visit(Visitor{os, indent, in, rows}, spec.family);
  os << indent << "end\n";
}

}  // namespace detail

inline InstanceFile parse_instance(std::string_view text) {
  return detail::Parser(detail::tokenize(text)).parse_instance();
}

inline std::string emit_instance(const InstanceFile& inst) {
  std::ostringstream os;
  detail::emit_matroid(os, inst.matroid, "");
  os << "sequence";
  for (const auto id : inst.sequence) os << ' ' << id;
  os << '\n';
  if (inst.colors) {
    os << "colors";
    for (const auto c : *inst.colors) os << ' ' << c;
    os << '\n';
  }
  os << "r " << inst.r << '\n' << "mode " << to_string(inst.mode) << '\n';
  return os.str();
}

// Partition files: one "part <root index>*" line per part, S_1 first.
inline std::vector<std::vector<std::size_t>> parse_partition_file(
    std::string_view text) {
  return detail::Parser(detail::tokenize(text)).parse_partition();
}

inline std::string emit_partition_file(
    const std::vector<std::vector<std::size_t>>& parts) {
  std::ostringstream os;
  for (const auto& p : parts) {
    os << "part";
    for (const auto i : p) os << ' ' << i;
    os << '\n';
  }
  return os.str();
}

// A parsed instance turned into live objects.
struct LoadedInstance {
  std::shared_ptr<const MatroidOracle> matroid;
  IndexedSequence sequence;
  std::optional<Coloring> coloring;
  std::size_t r = 1;
  SolveMode mode = SolveMode::kGeneral;
};

inline LoadedInstance load(const InstanceFile& inst) {
  LoadedInstance out;
  out.matroid = build_matroid(inst.matroid);
  std::vector<GroundElement> seq;
  for (const auto id : inst.sequence) seq.push_back(GroundElement{id});
  out.sequence = IndexedSequence::from_elements(std::move(seq));
  if (inst.colors) {
    std::vector<ColorId> cs;
    for (const auto c : *inst.colors) cs.push_back(ColorId{c});
    out.coloring = Coloring(std::move(cs));
  }
  out.r = inst.r;
  out.mode = inst.mode;
  return out;
}

struct RunReport {
  enum class Outcome { kPartition, kNoPartition, kPreconditionViolated, kError };

  Outcome outcome = Outcome::kError;
  std::string message;
  std::vector<std::vector<std::size_t>> parts;
  ChainCertificate certificate;
  std::uint64_t oracle_calls = 0;
  std::size_t cycle_iterations = 0;
  std::size_t restarts = 0;
  std::size_t recursion_depth = 0;
  double wall_ms = 0.0;
};

inline const char* to_string(RunReport::Outcome o) {
  switch (o) {
    case RunReport::Outcome::kPartition: return "partition";
    case RunReport::Outcome::kNoPartition: return "no-partition";
    case RunReport::Outcome::kPreconditionViolated: return "precondition-violated";
    case RunReport::Outcome::kError: return "error";
  }
  return "?";
}

inline std::vector<std::vector<std::size_t>> part_indices(const Partition& p) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : p.parts) out.push_back(s.indices());
  return out;
}

inline std::string to_text(const RunReport& rep) {
  std::ostringstream os;
  os << "outcome " << to_string(rep.outcome) << '\n';
  if (!rep.message.empty()) os << "message " << rep.message << '\n';
  for (std::size_t i = 0; i < rep.parts.size(); ++i) {
    os << "part " << i + 1 << ':';
    for (const auto idx : rep.parts[i]) os << ' ' << idx;
    os << '\n';
  }
  for (std::size_t i = 0; i < rep.certificate.spanning.size(); ++i) {
    os << "spanning " << i + 1 << ':';
    for (const auto idx : rep.certificate.spanning[i]) os << ' ' << idx;
    os << '\n';
  }
  if (rep.certificate.bottom_witness) {
    os << "bottom_witness " << *rep.certificate.bottom_witness << '\n';
  }
  os << "oracle_calls " << rep.oracle_calls << '\n'
     << "cycle_iterations " << rep.cycle_iterations << '\n'
     << "restarts " << rep.restarts << '\n'
     << "recursion_depth " << rep.recursion_depth << '\n'
     << "wall_ms " << rep.wall_ms << '\n';
  return os.str();
}

inline nlohmann::json to_json(const RunReport& rep) {
  nlohmann::json j;
  j["outcome"] = to_string(rep.outcome);
  if (!rep.message.empty()) j["message"] = rep.message;
  j["parts"] = rep.parts;
  j["certificate"]["spanning"] = rep.certificate.spanning;
  if (rep.certificate.bottom_witness) {
    j["certificate"]["bottom_witness"] = *rep.certificate.bottom_witness;
  }
  j["oracle_calls"] = rep.oracle_calls;
  j["cycle_iterations"] = rep.cycle_iterations;
  j["restarts"] = rep.restarts;
  j["recursion_depth"] = rep.recursion_depth;
  j["wall_ms"] = rep.wall_ms;
  return j;
}

}  // namespace cmt

#endif  // CMT_INSTANCE_IO_HPP_
