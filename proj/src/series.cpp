// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#include "refkac/series.hpp"

#include <algorithm>

#include "refkac/error.hpp"

namespace refkac {

Grading::Grading(std::vector<unsigned> weights, unsigned weight_bound)
    : var_weights(std::move(weights)), bound(weight_bound) {
  if (std::find(var_weights.begin(), var_weights.end(), 0U) != var_weights.end()) {
    throw Error(ErrorCode::invalid_argument, "variable weights must be positive");
  }
}

Grading Grading::uniform(std::size_t n, unsigned weight_bound) {
  return Grading(std::vector<unsigned>(n, 1), weight_bound);
}

unsigned Grading::weight_of(std::span<const unsigned> exps) const {
  if (exps.size() != var_weights.size()) {
    throw Error(ErrorCode::invalid_argument, "monomial has the wrong number of variables");
  }
  unsigned w = 0;
  for (std::size_t j = 0; j < exps.size(); ++j) w += var_weights[j] * exps[j];
  return w;
}

namespace {

void require_same_grading(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!(a.grading() == b.grading())) {
    throw Error(ErrorCode::invalid_argument, "series have different variable sets or bounds");
  }
}

void accumulate(TruncatedSeries::TermMap& terms, const Monomial& key, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

}  // namespace

TruncatedSeries TruncatedSeries::constant(const Grading& g, const RationalFunction& c) {
  TruncatedSeries s(g);
  s.add_term(std::vector<unsigned>(g.var_count(), 0), c);
  return s;
}

void TruncatedSeries::add_term(std::span<const unsigned> exps, const RationalFunction& c) {
  const unsigned w = grading_.weight_of(exps);
  if (w > grading_.bound) return;
  accumulate(terms_, Monomial{w, {exps.begin(), exps.end()}}, c);
}

void TruncatedSeries::add_term(const Monomial& key, const RationalFunction& c) {
  if (key.weight > grading_.bound) return;
  accumulate(terms_, key, c);
}

RationalFunction TruncatedSeries::coefficient(std::span<const unsigned> exps) const {
  const unsigned w = grading_.weight_of(exps);
  auto it = terms_.find(Monomial{w, {exps.begin(), exps.end()}});
  return it == terms_.end() ? RationalFunction() : it->second;
}

RationalFunction TruncatedSeries::constant_term() const {
  if (terms_.empty() || terms_.begin()->first.weight != 0) return {};
  return terms_.begin()->second;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_same_grading(*this, rhs);
  for (const auto& [key, c] : rhs.terms_) accumulate(terms_, key, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  require_same_grading(*this, rhs);
  for (const auto& [key, c] : rhs.terms_) accumulate(terms_, key, -c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const RationalFunction& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& [key, c] : r.terms_) c = -c;
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_grading(a, b);
  const unsigned bound = a.grading_.bound;
  const std::size_t n = a.grading_.var_count();
  // Collect every contribution per key first and sum once; this keeps the
  // number of rational-function normalizations per key to one pass.
  std::map<Monomial, std::vector<RationalFunction>> partial;
  for (const auto& [ka, ca] : a.terms_) {
    if (ka.weight > bound) break;
    for (const auto& [kb, cb] : b.terms_) {
      const unsigned w = ka.weight + kb.weight;
      if (w > bound) break;
      Monomial key{w, std::vector<unsigned>(n)};
      for (std::size_t j = 0; j < n; ++j) key.exps[j] = ka.exps[j] + kb.exps[j];
      partial[std::move(key)].push_back(ca * cb);
    }
  }
  TruncatedSeries out(a.grading_);
  for (auto& [key, parts] : partial) {
    RationalFunction sum;
    for (const auto& p : parts) sum += p;
    if (!sum.is_zero()) out.terms_.emplace(key, std::move(sum));
  }
  return out;
}

std::string TruncatedSeries::dump() const {
  std::string out;
  for (const auto& [key, c] : terms_) {
    out += '(';
    for (std::size_t j = 0; j < key.exps.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(key.exps[j]);
    }
    out += "): " + c.to_string() + "\n";
  }
  return out;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries adams(const TruncatedSeries& s, unsigned d) {
  if (d == 0) throw Error(ErrorCode::invalid_argument, "Adams operation index must be positive");
  if (d == 1) return s;
  TruncatedSeries out(s.grading());
  for (const auto& [key, c] : s.terms()) {
    if (static_cast<unsigned long>(key.weight) * d > s.grading().bound) break;
    Monomial scaled{key.weight * d, key.exps};
    for (auto& e : scaled.exps) e *= d;
    out.add_term(scaled, c.substitute_power(d));
  }
  return out;
}

TruncatedSeries formal_log(const TruncatedSeries& f) {
  if (!f.constant_term().is_one()) {
    throw Error(ErrorCode::precondition, "formal log needs constant term 1");
  }
  const Grading& g = f.grading();
  TruncatedSeries h = f - TruncatedSeries::one(g);
  TruncatedSeries out(g);
  TruncatedSeries power = h;
  for (long k = 1; !power.is_zero(); ++k) {
    RationalFunction coeff(IntPolynomial(k % 2 ? 1 : -1), IntPolynomial(k));
    out += power * coeff;
    power = power * h;
  }
  return out;
}

TruncatedSeries formal_exp(const TruncatedSeries& s) {
  if (!s.constant_term().is_zero()) {
    throw Error(ErrorCode::precondition, "formal exp needs constant term 0");
  }
  const Grading& g = s.grading();
  TruncatedSeries out = TruncatedSeries::one(g);
  TruncatedSeries power = TruncatedSeries::one(g);
  Integer factorial = 1;
  for (long k = 1;; ++k) {
    power = power * s;
    if (power.is_zero()) break;
    factorial *= k;
    out += power * RationalFunction(IntPolynomial(1), IntPolynomial(factorial));
  }
  return out;
}

TruncatedSeries plethystic_exp(const TruncatedSeries& s) {
  if (!s.constant_term().is_zero()) {
    throw Error(ErrorCode::precondition, "plethystic exp needs constant term 0");
  }
  TruncatedSeries arg(s.grading());
  for (unsigned d = 1; d <= s.grading().bound; ++d) {
    TruncatedSeries term = adams(s, d);
    if (term.is_zero()) break;
    arg += term * RationalFunction(IntPolynomial(1), IntPolynomial(static_cast<long>(d)));
  }
  return formal_exp(arg);
}

TruncatedSeries plethystic_log(const TruncatedSeries& f) {
  if (!f.constant_term().is_one()) {
    throw Error(ErrorCode::precondition, "plethystic log needs constant term 1");
  }
  const TruncatedSeries l = formal_log(f);
  TruncatedSeries out(f.grading());
  for (unsigned d = 1; d <= f.grading().bound; ++d) {
    const int mu = moebius(d);
    if (mu == 0) continue;
    TruncatedSeries term = adams(l, d);
    if (term.is_zero()) break;
    out += term * RationalFunction(IntPolynomial(mu), IntPolynomial(static_cast<long>(d)));
  }
  return out;
}

int moebius(unsigned d) {
  if (d == 0) throw Error(ErrorCode::invalid_argument, "Moebius function needs d >= 1");
  int sign = 1;
  for (unsigned p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

}  // namespace refkac
