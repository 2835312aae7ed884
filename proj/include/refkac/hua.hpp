// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "refkac/partitions.hpp"
#include "refkac/qfield.hpp"
#include "refkac/quiver.hpp"
#include "refkac/series.hpp"

namespace refkac {

// prod_k q^{<a^k,a^k> - <b^k,b^k>} |R(a^k)| / |GL(a^k)| with b^k = sum_{j>=k} a^j.
RationalFunction hua_term(const Quiver& quiver, std::span<const DimVector> alphas);

// 1 + sum over tuples (a^1..a^r) of hua_term * X^{sum_k k a^k}, graded by total
// dimension and truncated at weight_bound.
TruncatedSeries p_series(const Quiver& quiver, unsigned weight_bound);

// Refined series truncated to levels k <= max_level. Variables are X_{ik} in
// level-major order (index (k-1)*n + i) with weight k; the exponent stored for
// X_{ik} is the multiplicity a^k_i, so keys are multiplicity matrices laid out
// column by column. Levels beyond the weight bound cannot contribute and are
// not materialized.
TruncatedSeries q_series(const Quiver& quiver, unsigned weight_bound,
                         std::optional<unsigned> max_level = std::nullopt);

// Number of levels q_series materializes for the given bounds.
unsigned q_series_levels(unsigned weight_bound, std::optional<unsigned> max_level);

class KacTable {
public:
  KacTable(Quiver quiver, unsigned weight_bound, std::map<DimVector, RationalFunction> entries);

  const Quiver& quiver() const { return quiver_; }
  unsigned weight_bound() const { return weight_bound_; }
  // Nonzero entries only.
  const std::map<DimVector, RationalFunction>& entries() const { return entries_; }
  // Explicit zero for in-bound keys that are absent; throws out_of_range for
  // keys of weight 0 or above the bound.
  RationalFunction at(std::span<const unsigned> alpha) const;
  // Every in-bound dimension vector, graded order, zeros included.
  std::vector<DimVector> keys() const;

private:
  Quiver quiver_;
  unsigned weight_bound_;
  std::map<DimVector, RationalFunction> entries_;
};

class RefinedKacTable {
public:
  RefinedKacTable(Quiver quiver, unsigned weight_bound, std::optional<unsigned> max_part,
                  std::map<PartitionTuple, RationalFunction> entries);

  const Quiver& quiver() const { return quiver_; }
  unsigned weight_bound() const { return weight_bound_; }
  std::optional<unsigned> max_part() const { return max_part_; }
  const std::map<PartitionTuple, RationalFunction>& entries() const { return entries_; }
  RationalFunction at(const PartitionTuple& lambda) const;
  std::vector<PartitionTuple> keys() const;

private:
  Quiver quiver_;
  unsigned weight_bound_;
  std::optional<unsigned> max_part_;
  std::map<PartitionTuple, RationalFunction> entries_;
};

// (q - 1) Log(P) read off coefficientwise.
KacTable kac_table(const Quiver& quiver, unsigned weight_bound);
// (q - 1) Log(Q^m) read off coefficientwise, keys mapped to partition tuples.
RefinedKacTable refined_kac_table(const Quiver& quiver, unsigned weight_bound,
                                  std::optional<unsigned> max_part = std::nullopt);

// Dimension vectors of total 1..weight_bound, by total then lexicographically.
std::vector<DimVector> dimension_vectors(std::size_t n, unsigned weight_bound);

// Worker threads used by series construction. Reads REFKAC_WORKERS; defaults
// to 1.
unsigned worker_count();

}  // namespace refkac
