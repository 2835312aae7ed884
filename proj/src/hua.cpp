// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#include "refkac/hua.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <thread>

#include "refkac/error.hpp"

namespace refkac {

namespace {

unsigned total(std::span<const unsigned> v) { return std::accumulate(v.begin(), v.end(), 0U); }

// Dimension vectors of total size <= bound with their per-vector factors
// memoized: the same vectors recur across many level tuples.
class DimCache {
public:
  DimCache(const Quiver& quiver, unsigned bound) : quiver_(quiver) {
    const std::size_t n = quiver.vertex_count();
    DimVector v(n, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
      if (i == n) {
        add(v);
        return;
      }
      for (unsigned a = 0; a <= left; ++a) {
        v[i] = a;
        rec(i + 1, left - a);
      }
    };
    rec(0, bound);
    by_total_.resize(bound + 1);
    for (std::size_t idx = 0; idx < dims_.size(); ++idx) by_total_[total(dims_[idx])].push_back(idx);
  }

  std::size_t size() const { return dims_.size(); }
  const DimVector& dim(std::size_t idx) const { return dims_[idx]; }
  std::size_t index_of(const DimVector& v) const { return index_.at(v); }
  const std::vector<std::size_t>& with_total(unsigned t) const { return by_total_[t]; }
  long euler_self(std::size_t idx) const { return euler_[idx]; }
  long rep_exponent(std::size_t idx) const { return rep_[idx]; }
  const IntPolynomial& gl(std::size_t idx) const { return gl_[idx]; }

private:
  void add(const DimVector& v) {
    index_.emplace(v, dims_.size());
    dims_.push_back(v);
    euler_.push_back(euler_form(quiver_, v, v));
    rep_.push_back(rep_space_exponent(quiver_, v));
    gl_.push_back(gl_order(v));
  }

  const Quiver& quiver_;
  std::vector<DimVector> dims_;
  std::map<DimVector, std::size_t> index_;
  std::vector<std::vector<std::size_t>> by_total_;
  std::vector<long> euler_;
  std::vector<long> rep_;
  std::vector<IntPolynomial> gl_;
};

using LevelTuple = std::vector<std::size_t>;  // DimCache index per level

// Every tuple (a^1..a^levels) with sum_k k |a^k| <= bound, the zero tuple
// included. Trailing zero levels are part of the tuple, so each trimmed tuple
// appears exactly once.
std::vector<LevelTuple> level_tuples(const DimCache& cache, unsigned bound, unsigned levels) {
  std::vector<LevelTuple> out;
  LevelTuple current(levels);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned k, unsigned budget) {
    if (k > levels) {
      out.push_back(current);
      return;
    }
    for (unsigned t = 0; t * k <= budget; ++t) {
      for (std::size_t idx : cache.with_total(t)) {
        current[k - 1] = idx;
        rec(k + 1, budget - t * k);
      }
    }
  };
  rec(1, bound);
  return out;
}

RationalFunction term_for(const DimCache& cache, const LevelTuple& tuple) {
  const std::size_t n = cache.dim(0).size();
  long exponent = 0;
  IntPolynomial den(1);
  DimVector beta(n, 0);
  for (std::size_t k = tuple.size(); k-- > 0;) {
    const DimVector& a = cache.dim(tuple[k]);
    if (total(a) == 0 && total(beta) == 0) continue;
    for (std::size_t i = 0; i < n; ++i) beta[i] += a[i];
    const std::size_t b = cache.index_of(beta);
    exponent += cache.euler_self(tuple[k]) - cache.euler_self(b) + cache.rep_exponent(tuple[k]);
    if (!cache.gl(tuple[k]).is_one()) den *= cache.gl(tuple[k]);
  }
  if (exponent >= 0) {
    return RationalFunction(IntPolynomial::monomial(1, static_cast<std::size_t>(exponent)), den);
  }
  return RationalFunction(IntPolynomial(1), den.shifted(-exponent));
}

// Sums term_for(tuple) * X^key(tuple) over all tuples, split across workers.
template <typename KeyFn>
TruncatedSeries assemble(const DimCache& cache, const std::vector<LevelTuple>& tuples,
                         const Grading& grading, KeyFn key_of) {
  const unsigned workers =
      std::max(1U, std::min<unsigned>(worker_count(), static_cast<unsigned>(tuples.size())));
  std::vector<TruncatedSeries> partial(workers, TruncatedSeries(grading));
  auto run = [&](unsigned w) {
    for (std::size_t t = w; t < tuples.size(); t += workers) {
      partial[w].add_term(key_of(tuples[t]), term_for(cache, tuples[t]));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  TruncatedSeries out(grading);
  for (const auto& p : partial) out += p;
  return out;
}

std::vector<unsigned> level_weights(std::size_t n, unsigned levels) {
  std::vector<unsigned> w(n * levels);
  for (unsigned k = 1; k <= levels; ++k) {
    for (std::size_t i = 0; i < n; ++i) w[level_major_index(n, i, k)] = k;
  }
  return w;
}

}  // namespace

unsigned worker_count() {
  if (const char* env = std::getenv("REFKAC_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 256) return static_cast<unsigned>(v);
  }
  return 1;
}

RationalFunction hua_term(const Quiver& quiver, std::span<const DimVector> alphas) {
  const std::size_t n = quiver.vertex_count();
  for (const auto& a : alphas) {
    if (a.size() != n) {
      throw Error(ErrorCode::invalid_argument, "dimension vector length does not match the quiver");
    }
  }
  long exponent = 0;
  IntPolynomial den(1);
  DimVector beta(n, 0);
  for (std::size_t k = alphas.size(); k-- > 0;) {
    const DimVector& a = alphas[k];
    for (std::size_t i = 0; i < n; ++i) beta[i] += a[i];
    exponent += euler_form(quiver, a, a) - euler_form(quiver, beta, beta) +
                rep_space_exponent(quiver, a);
    den *= gl_order(a);
  }
  return RationalFunction::q_power(exponent) / RationalFunction(den);
}

unsigned q_series_levels(unsigned weight_bound, std::optional<unsigned> max_level) {
  if (max_level && *max_level == 0) throw Error(ErrorCode::invalid_argument, "max level must be positive");
  return std::max(1U, std::min(weight_bound, max_level.value_or(weight_bound)));
}

TruncatedSeries p_series(const Quiver& quiver, unsigned weight_bound) {
  const std::size_t n = quiver.vertex_count();
  const DimCache cache(quiver, weight_bound);
  const unsigned levels = std::max(1U, weight_bound);
  const auto tuples = level_tuples(cache, weight_bound, levels);
  return assemble(cache, tuples, Grading::uniform(n, weight_bound), [&](const LevelTuple& t) {
    std::vector<unsigned> key(n, 0);
    for (unsigned k = 1; k <= t.size(); ++k) {
      const DimVector& a = cache.dim(t[k - 1]);
      for (std::size_t i = 0; i < n; ++i) key[i] += k * a[i];
    }
    return key;
  });
}

TruncatedSeries q_series(const Quiver& quiver, unsigned weight_bound,
                         std::optional<unsigned> max_level) {
  const std::size_t n = quiver.vertex_count();
  const unsigned levels = q_series_levels(weight_bound, max_level);
  const DimCache cache(quiver, weight_bound);
  const auto tuples = level_tuples(cache, weight_bound, levels);
  const Grading grading(level_weights(n, levels), weight_bound);
  return assemble(cache, tuples, grading, [&](const LevelTuple& t) {
    std::vector<unsigned> key(n * levels, 0);
    for (unsigned k = 1; k <= t.size(); ++k) {
      const DimVector& a = cache.dim(t[k - 1]);
      for (std::size_t i = 0; i < n; ++i) key[level_major_index(n, i, k)] = a[i];
    }
    return key;
  });
}

// ---------------------------------------------------------------------------
// tables

namespace {

const RationalFunction& q_minus_one() {
  static const RationalFunction value = RationalFunction::q() - RationalFunction(1);
  return value;
}

}  // namespace

KacTable::KacTable(Quiver quiver, unsigned weight_bound, std::map<DimVector, RationalFunction> entries)
    : quiver_(std::move(quiver)), weight_bound_(weight_bound), entries_(std::move(entries)) {}

RationalFunction KacTable::at(std::span<const unsigned> alpha) const {
  if (alpha.size() != quiver_.vertex_count()) {
    throw Error(ErrorCode::invalid_argument, "dimension vector length does not match the quiver");
  }
  const unsigned w = total(alpha);
  if (w == 0 || w > weight_bound_) {
    throw Error(ErrorCode::out_of_range, "dimension vector of total " + std::to_string(w) +
                                             " is outside the table range 1.." +
                                             std::to_string(weight_bound_));
  }
  auto it = entries_.find(DimVector(alpha.begin(), alpha.end()));
  return it == entries_.end() ? RationalFunction() : it->second;
}

std::vector<DimVector> KacTable::keys() const {
  return dimension_vectors(quiver_.vertex_count(), weight_bound_);
}

std::vector<DimVector> dimension_vectors(std::size_t n, unsigned weight_bound) {
  std::vector<DimVector> out;
  DimVector v(n, 0);
  for (unsigned w = 1; w <= weight_bound; ++w) {
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
      if (i + 1 == n) {
        v[i] = left;
        out.push_back(v);
        return;
      }
      for (unsigned a = 0; a <= left; ++a) {
        v[i] = a;
        rec(i + 1, left - a);
      }
    };
    rec(0, w);
  }
  return out;
}

RefinedKacTable::RefinedKacTable(Quiver quiver, unsigned weight_bound,
                                 std::optional<unsigned> max_part,
                                 std::map<PartitionTuple, RationalFunction> entries)
    : quiver_(std::move(quiver)),
      weight_bound_(weight_bound),
      max_part_(max_part),
      entries_(std::move(entries)) {}

RationalFunction RefinedKacTable::at(const PartitionTuple& lambda) const {
  if (lambda.size() != quiver_.vertex_count()) {
    throw Error(ErrorCode::invalid_argument, "partition tuple length does not match the quiver");
  }
  const unsigned w = tuple_weight(lambda);
  if (w == 0 || w > weight_bound_) {
    throw Error(ErrorCode::out_of_range, "partition tuple of weight " + std::to_string(w) +
                                             " is outside the table range 1.." +
                                             std::to_string(weight_bound_));
  }
  if (max_part_ && tuple_largest_part(lambda) > *max_part_) {
    throw Error(ErrorCode::out_of_range,
                "partition tuple has a part larger than " + std::to_string(*max_part_));
  }
  auto it = entries_.find(lambda);
  return it == entries_.end() ? RationalFunction() : it->second;
}

std::vector<PartitionTuple> RefinedKacTable::keys() const {
  auto all = enumerate_tuples(quiver_.vertex_count(), weight_bound_, max_part_);
  all.erase(all.begin());  // the empty tuple
  return all;
}

KacTable kac_table(const Quiver& quiver, unsigned weight_bound) {
  const TruncatedSeries log = plethystic_log(p_series(quiver, weight_bound));
  std::map<DimVector, RationalFunction> entries;
  for (const auto& [key, c] : log.terms()) {
    if (key.weight == 0) continue;
    entries.emplace(key.exps, c * q_minus_one());
  }
  return KacTable(quiver, weight_bound, std::move(entries));
}

RefinedKacTable refined_kac_table(const Quiver& quiver, unsigned weight_bound,
                                  std::optional<unsigned> max_part) {
  const std::size_t n = quiver.vertex_count();
  const unsigned levels = q_series_levels(weight_bound, max_part);
  const TruncatedSeries log = plethystic_log(q_series(quiver, weight_bound, max_part));
  std::map<PartitionTuple, RationalFunction> entries;
  for (const auto& [key, c] : log.terms()) {
    if (key.weight == 0) continue;
    MultiplicityMatrix m;
    m.rows = n;
    m.cols = levels;
    m.entries.assign(n * levels, 0);
    for (unsigned k = 1; k <= levels; ++k) {
      for (std::size_t i = 0; i < n; ++i) m.entries[i * levels + k - 1] = key.exps[level_major_index(n, i, k)];
    }
    entries.emplace(tuple_from_multiplicity_matrix(m), c * q_minus_one());
  }
  return RefinedKacTable(quiver, weight_bound, max_part, std::move(entries));
}

}  // namespace refkac
