// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "refkac/qfield.hpp"

namespace refkac {

// Variable weights and truncation bound shared by every series that takes
// part in one computation. A monomial prod x_j^{e_j} has weight
// sum_j w_j e_j; terms heavier than the bound are dropped.
struct Grading {
  std::vector<unsigned> var_weights;
  unsigned bound = 0;

  Grading() = default;
  Grading(std::vector<unsigned> weights, unsigned weight_bound);
  // n variables of weight 1.
  static Grading uniform(std::size_t n, unsigned weight_bound);

  std::size_t var_count() const { return var_weights.size(); }
  unsigned weight_of(std::span<const unsigned> exps) const;

  friend bool operator==(const Grading&, const Grading&) = default;
};

// Exponent key. Ordered by weight, then lexicographically, so iterating a
// series visits terms in graded order.
struct Monomial {
  unsigned weight = 0;
  std::vector<unsigned> exps;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

class TruncatedSeries {
public:
  using TermMap = std::map<Monomial, RationalFunction>;

  explicit TruncatedSeries(Grading grading) : grading_(std::move(grading)) {}

  static TruncatedSeries constant(const Grading& g, const RationalFunction& c);
  static TruncatedSeries one(const Grading& g) { return constant(g, RationalFunction(1)); }

  const Grading& grading() const { return grading_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * x^exps; silently dropped above the bound.
  void add_term(std::span<const unsigned> exps, const RationalFunction& c);
  void add_term(const Monomial& key, const RationalFunction& c);
  RationalFunction coefficient(std::span<const unsigned> exps) const;
  RationalFunction constant_term() const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const RationalFunction& scalar);
  TruncatedSeries operator-() const;

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const RationalFunction& c) { return a *= c; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  // One "(e1,...,ek): value" line per term in graded order.
  std::string dump() const;

private:
  Grading grading_;
  TermMap terms_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// psi_d: q -> q^d and every variable to its d-th power.
TruncatedSeries adams(const TruncatedSeries& s, unsigned d);

// Require constant term 1 and 0 respectively.
TruncatedSeries formal_log(const TruncatedSeries& f);
TruncatedSeries formal_exp(const TruncatedSeries& s);

// Exp(s) = exp(sum_{d>=1} psi_d(s) / d), constant term of s must vanish.
TruncatedSeries plethystic_exp(const TruncatedSeries& s);
// Log(f) = sum_{d>=1} mu(d)/d psi_d(log f), constant term of f must be 1.
TruncatedSeries plethystic_log(const TruncatedSeries& f);

int moebius(unsigned d);

}  // namespace refkac
