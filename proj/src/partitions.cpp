// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#include "refkac/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "refkac/error.hpp"

namespace refkac {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw Error(ErrorCode::invalid_argument, "partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) {
      throw Error(ErrorCode::invalid_argument, "partition parts must be weakly decreasing");
    }
  }
}

Partition Partition::from_multiplicities(std::span<const unsigned> mult) {
  std::vector<unsigned> parts;
  for (std::size_t k = mult.size(); k-- > 0;) parts.insert(parts.end(), mult[k], static_cast<unsigned>(k + 1));
  return Partition(std::move(parts));
}

unsigned Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0U); }

std::vector<unsigned> multiplicity_vector(const Partition& p) {
  std::vector<unsigned> out(p.largest_part(), 0);
  for (unsigned part : p.parts()) ++out[part - 1];
  return out;
}

MultiplicityMatrix tuple_multiplicity_matrix(const PartitionTuple& t) {
  MultiplicityMatrix m;
  m.rows = t.size();
  m.cols = tuple_largest_part(t);
  m.entries.assign(m.rows * m.cols, 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (unsigned part : t[i].parts()) ++m.entries[i * m.cols + part - 1];
  }
  return m;
}

PartitionTuple tuple_from_multiplicity_matrix(const MultiplicityMatrix& m) {
  PartitionTuple out;
  out.reserve(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    out.push_back(Partition::from_multiplicities(
        std::span<const unsigned>(m.entries).subspan(i * m.cols, m.cols)));
  }
  return out;
}

unsigned tuple_weight(const PartitionTuple& t) {
  unsigned w = 0;
  for (const auto& p : t) w += p.weight();
  return w;
}

unsigned tuple_largest_part(const PartitionTuple& t) {
  unsigned r = 0;
  for (const auto& p : t) r = std::max(r, p.largest_part());
  return r;
}

DimVector tuple_weights(const PartitionTuple& t) {
  DimVector out;
  out.reserve(t.size());
  for (const auto& p : t) out.push_back(p.weight());
  return out;
}

std::vector<Partition> partitions_of(unsigned w, std::optional<unsigned> max_part) {
  std::vector<Partition> out;
  std::vector<unsigned> current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (unsigned part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(w, max_part.value_or(w));
  return out;
}

namespace {

// Cartesian product of per-component partition lists, first component varying
// slowest.
void append_products(std::span<const unsigned> weights, std::optional<unsigned> max_part,
                     std::vector<PartitionTuple>& out) {
  std::vector<std::vector<Partition>> choices;
  choices.reserve(weights.size());
  for (unsigned w : weights) {
    choices.push_back(partitions_of(w, max_part));
    if (choices.back().empty()) return;
  }
  PartitionTuple current(weights.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == weights.size()) {
      out.push_back(current);
      return;
    }
    for (const auto& p : choices[i]) {
      current[i] = p;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

std::vector<PartitionTuple> enumerate_tuples(std::size_t n, unsigned weight_bound,
                                             std::optional<unsigned> max_part) {
  std::vector<PartitionTuple> out;
  if (n == 0) return out;
  DimVector split(n, 0);
  for (unsigned w = 0; w <= weight_bound; ++w) {
    // compositions of w into n parts, earlier entries heavier first
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned remaining) {
      if (i + 1 == n) {
        split[i] = remaining;
        append_products(split, max_part, out);
        return;
      }
      for (unsigned v = remaining + 1; v-- > 0;) {
        split[i] = v;
        rec(i + 1, remaining - v);
      }
    };
    rec(0, w);
  }
  return out;
}

std::vector<PartitionTuple> lambda_fiber(std::span<const unsigned> alpha,
                                         std::optional<unsigned> max_part) {
  std::vector<PartitionTuple> out;
  append_products(alpha, max_part, out);
  return out;
}

PartitionTuple tau_m(const PartitionTuple& t, unsigned m) {
  if (m == 0) throw Error(ErrorCode::invalid_argument, "m must be positive");
  if (tuple_largest_part(t) > m) {
    throw Error(ErrorCode::invalid_argument,
                "partition tuple has a part larger than m = " + std::to_string(m));
  }
  const std::size_t n = t.size();
  PartitionTuple out(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    const auto mult = multiplicity_vector(t[i]);
    for (unsigned k = 1; k <= mult.size(); ++k) {
      out[level_major_index(n, i, k)] = Partition::ones(mult[k - 1]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// text

namespace {

class TupleParser {
public:
  explicit TupleParser(std::string_view text) : text_(text) {}

  PartitionTuple parse() {
    PartitionTuple out;
    skip_ws();
    // tolerate the table notation "([2],[0])"
    bool wrapped = false;
    if (pos_ < text_.size() && text_[pos_] == '(') {
      wrapped = true;
      ++pos_;
    }
    for (;;) {
      out.push_back(partition());
      skip_ws();
      if (pos_ < text_.size() && (text_[pos_] == ';' || (wrapped && text_[pos_] == ','))) {
        ++pos_;
        continue;
      }
      break;
    }
    if (wrapped) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
    }
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected character in partition tuple");
    return out;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Partition partition() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '[') throw ParseError(pos_, "expected '['");
    ++pos_;
    std::vector<unsigned> parts;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ']') {
      ++pos_;
      return {};
    }
    const std::size_t start = pos_;
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      unsigned long v = 0;
      bool any = false;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (v > 1'000'000) throw ParseError(at, "part too large");
        any = true;
        ++pos_;
      }
      if (!any) throw ParseError(pos_, "expected a part");
      parts.push_back(static_cast<unsigned>(v));
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < text_.size() && text_[pos_] == ']') {
        ++pos_;
        break;
      }
      throw ParseError(pos_, "expected ',' or ']'");
    }
    if (parts.size() == 1 && parts[0] == 0) return {};
    if (std::find(parts.begin(), parts.end(), 0U) != parts.end()) {
      throw ParseError(start, "zero part inside a non-empty partition");
    }
    // accept any order; partitions are multisets of parts
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join_parts(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

}  // namespace

PartitionTuple parse_partition_tuple(std::string_view text) { return TupleParser(text).parse(); }

std::string render_partition_tuple(const PartitionTuple& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ';';
    out += '[' + join_parts(t[i]) + ']';
  }
  return out;
}

std::string render_partition(const Partition& p) {
  return p.empty() ? "[0]" : "[" + join_parts(p) + "]";
}

std::string render_tuple_table(const PartitionTuple& t) {
  if (t.size() == 1) return render_partition(t[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += render_partition(t[i]);
  }
  return out + ")";
}

std::string render_multiplicity(const MultiplicityMatrix& m) {
  std::string out = "(";
  for (std::size_t k = 0; k < m.cols; ++k) {
    if (k) out += ',';
    if (m.rows == 1) {
      out += std::to_string(m.at(0, k));
      continue;
    }
    out += '(';
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i) out += ',';
      out += std::to_string(m.at(i, k));
    }
    out += ')';
  }
  return out + ")";
}

}  // namespace refkac
