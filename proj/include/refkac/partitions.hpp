// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "refkac/quiver.hpp"

namespace refkac {

// Weakly decreasing sequence of positive integers.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);

  // [1^r]
  static Partition ones(unsigned r) { return Partition(std::vector<unsigned>(r, 1)); }
  // Inverse of multiplicity_vector.
  static Partition from_multiplicities(std::span<const unsigned> mult);

  const std::vector<unsigned>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  unsigned weight() const;
  unsigned largest_part() const { return parts_.empty() ? 0 : parts_.front(); }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<unsigned> parts_;
};

using PartitionTuple = std::vector<Partition>;

// n x r matrix, entry (i, k-1) = number of parts of the i-th partition equal
// to k; r is the largest part over the whole tuple.
struct MultiplicityMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<unsigned> entries;  // row-major

  unsigned at(std::size_t i, std::size_t k) const { return entries[i * cols + k]; }
  friend bool operator==(const MultiplicityMatrix&, const MultiplicityMatrix&) = default;
};

// Entry k-1 counts parts equal to k; length is the largest part.
std::vector<unsigned> multiplicity_vector(const Partition& p);
MultiplicityMatrix tuple_multiplicity_matrix(const PartitionTuple& t);
PartitionTuple tuple_from_multiplicity_matrix(const MultiplicityMatrix& m);

unsigned tuple_weight(const PartitionTuple& t);
unsigned tuple_largest_part(const PartitionTuple& t);
DimVector tuple_weights(const PartitionTuple& t);

// Partitions of w with parts at most max_part, in reverse lexicographic order
// ([2] before [1,1]).
std::vector<Partition> partitions_of(unsigned w, std::optional<unsigned> max_part = std::nullopt);

// All n-tuples of total weight <= weight_bound with parts <= max_part. Ordered
// by total weight, then by the per-vertex weight split (earlier vertices
// heavier first), then reverse lexicographically per component.
std::vector<PartitionTuple> enumerate_tuples(std::size_t n, unsigned weight_bound,
                                             std::optional<unsigned> max_part = std::nullopt);

// Lambda_alpha: tuples whose i-th component is a partition of alpha_i.
std::vector<PartitionTuple> lambda_fiber(std::span<const unsigned> alpha,
                                         std::optional<unsigned> max_part = std::nullopt);

// Sends (l^1..l^n) with parts <= m to the n*m tuple ([1^{mult_k(l^i)}]) in
// level-major order, matching gamma_m's vertex order.
PartitionTuple tau_m(const PartitionTuple& t, unsigned m);

// CLI syntax: components separated by ';', e.g. "[2,1];[1]"; "[]" or "[0]"
// is the empty partition.
PartitionTuple parse_partition_tuple(std::string_view text);
std::string render_partition_tuple(const PartitionTuple& t);

// Table notation: "[2,1]" for one component, "([2],[0])" for several; empty
// partitions print as "[0]".
std::string render_partition(const Partition& p);
std::string render_tuple_table(const PartitionTuple& t);
// "(2,1)" for a single vertex, "((0,1),(1,0))" listing columns otherwise.
std::string render_multiplicity(const MultiplicityMatrix& m);

}  // namespace refkac
