// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0
//
// Slow, independent reference computations. Nothing here calls the code path
// it is used to check.

#pragma once

#include <gmpxx.h>

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "refkac/qfield.hpp"

namespace refkac::oracle {

using Matrix = std::vector<std::vector<unsigned>>;

// Expands sum_k a^k (a^k)^t + b^k (C - I) (b^k)^t with b^k = sum_{j>=k} a^j as a
// quadratic form in the variables a_i^k (index (k-1)*n + i) and reads off the
// upper-triangular matrix of its coefficients.
inline Matrix gamma_quadratic_form(const Matrix& c, unsigned m) {
  const std::size_t n = c.size();
  const std::size_t nm = n * m;
  std::vector<std::vector<long>> coef(nm, std::vector<long>(nm, 0));
  auto var = [&](std::size_t i, unsigned k) { return (k - 1) * n + i; };
  for (unsigned k = 1; k <= m; ++k) {
    for (std::size_t i = 0; i < n; ++i) coef[var(i, k)][var(i, k)] += 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t s = 0; s < n; ++s) {
        const long d = static_cast<long>(c[i][s]) - (i == s ? 1 : 0);
        for (unsigned a = k; a <= m; ++a) {
          for (unsigned b = k; b <= m; ++b) coef[var(i, a)][var(s, b)] += d;
        }
      }
    }
  }
  Matrix out(nm, std::vector<unsigned>(nm, 0));
  for (std::size_t u = 0; u < nm; ++u) {
    out[u][u] = static_cast<unsigned>(coef[u][u]);
    for (std::size_t v = u + 1; v < nm; ++v) {
      out[u][v] = static_cast<unsigned>(coef[u][v] + coef[v][u]);
    }
  }
  return out;
}

// Number of invertible r x r matrices over F_p by enumeration (p prime, small).
inline long count_invertible(unsigned r, unsigned p) {
  if (r == 0) return 1;
  const unsigned cells = r * r;
  long total = 1;
  for (unsigned i = 0; i < cells; ++i) total *= p;
  long count = 0;
  std::vector<long> a(cells);
  for (long code = 0; code < total; ++code) {
    long x = code;
    for (unsigned i = 0; i < cells; ++i) {
      a[i] = x % p;
      x /= p;
    }
    // Gaussian elimination mod p.
    std::vector<long> m = a;
    bool singular = false;
    for (unsigned col = 0; col < r && !singular; ++col) {
      unsigned piv = col;
      while (piv < r && m[piv * r + col] == 0) ++piv;
      if (piv == r) {
        singular = true;
        break;
      }
      for (unsigned j = 0; j < r; ++j) std::swap(m[col * r + j], m[piv * r + j]);
      long inv = 1;
      while ((inv * m[col * r + col]) % p != 1) ++inv;
      for (unsigned row = col + 1; row < r; ++row) {
        const long f = (m[row * r + col] * inv) % p;
        for (unsigned j = 0; j < r; ++j) {
          m[row * r + j] = ((m[row * r + j] - f * m[col * r + j]) % p + p) % p;
        }
      }
    }
    if (!singular) ++count;
  }
  return count;
}

// Evaluates a rational function at an integer point, exactly.
inline mpq_class eval(const RationalFunction& r, long at) {
  mpq_class v(r.numerator().evaluate(at), r.denominator().evaluate(at));
  v.canonicalize();
  return v;
}

// Number of partitions of 0..w via Euler's pentagonal recurrence.
inline std::vector<long> partition_counts(unsigned w) {
  std::vector<long> p(w + 1, 0);
  p[0] = 1;
  for (unsigned n = 1; n <= w; ++n) {
    long sum = 0;
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2;
      const long g2 = k * (3 * k + 1) / 2;
      if (g1 > static_cast<long>(n)) break;
      const long sign = (k % 2) ? 1 : -1;
      sum += sign * p[n - g1];
      if (g2 <= static_cast<long>(n)) sum += sign * p[n - g2];
    }
    p[n] = sum;
  }
  return p;
}

// Plethystic exponential of a one-variable series sum_n c_n(q) x^n where every
// c_n is an integer combination of powers of q, computed as the infinite
// product prod (1 - q^a x^n)^(-c) expanded by the generalized binomial series.
// Input and output are indexed by the power of x; entry 0 of the input is
// ignored and entry 0 of the output is 1.
using LaurentTerms = std::map<long, long>;  // q-exponent -> integer coefficient

inline std::vector<RationalFunction> product_exp(const std::vector<LaurentTerms>& s,
                                                 unsigned bound) {
  std::vector<RationalFunction> out(bound + 1, RationalFunction(0));
  out[0] = RationalFunction(1);
  for (unsigned n = 1; n < s.size() && n <= bound; ++n) {
    for (const auto& [a, c] : s[n]) {
      if (c == 0) continue;
      // (1 - y)^(-c) = sum_j binom(c + j - 1, j) y^j with y = q^a x^n.
      std::vector<RationalFunction> factor(bound + 1, RationalFunction(0));
      mpz_class binom = 1;
      for (unsigned j = 0; j * n <= bound; ++j) {
        if (j > 0) {
          binom *= c + static_cast<long>(j) - 1;
          binom /= static_cast<long>(j);
        }
        factor[j * n] = RationalFunction(IntPolynomial(binom)) *
                        RationalFunction::q_power(a * static_cast<long>(j));
      }
      std::vector<RationalFunction> next(bound + 1, RationalFunction(0));
      for (unsigned i = 0; i <= bound; ++i) {
        if (out[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= bound; ++j) {
          if (!factor[j].is_zero()) next[i + j] += out[i] * factor[j];
        }
      }
      out = std::move(next);
    }
  }
  return out;
}

}  // namespace refkac::oracle
