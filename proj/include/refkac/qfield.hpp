// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace refkac {

using Integer = mpz_class;

// Dense univariate polynomial in q with arbitrary-precision integer
// coefficients. coeffs()[k] is the coefficient of q^k. The zero polynomial has
// no coefficients; otherwise the last coefficient is nonzero.
class IntPolynomial {
public:
  IntPolynomial() = default;
  IntPolynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit IntPolynomial(Integer constant);
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial monomial(Integer coeff, std::size_t exponent);
  static IntPolynomial q() { return monomial(1, 1); }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Integer coeff(std::size_t k) const;
  const Integer& leading() const { return coeffs_.back(); }
  // Exponent of the lowest nonzero term; 0 for the zero polynomial.
  std::size_t valuation() const;

  Integer content() const;
  IntPolynomial primitive_part() const;
  Integer evaluate(const Integer& at) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const Integer& rhs);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const Integer& b) { return a *= b; }

  // Multiplies by q^k (k >= 0) or divides by q^{-k}; the latter requires the
  // low coefficients to vanish.
  IntPolynomial shifted(long k) const;
  // Exact division by an integer that divides every coefficient.
  IntPolynomial divexact(const Integer& d) const;
  // Exact division by a polynomial known to divide this one over Z.
  IntPolynomial divexact(const IntPolynomial& d) const;
  // lc(d)^(deg a - deg d + 1) * a mod d, computed without fractions.
  IntPolynomial pseudo_remainder(const IntPolynomial& d) const;
  IntPolynomial substitute_power(unsigned d) const;
  // q^deg * p(1/q): the coefficient sequence reversed.
  IntPolynomial reversed() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Total order used for deterministic containers; not an algebraic order.
  friend std::strong_ordering operator<=>(const IntPolynomial& a, const IntPolynomial& b);

  std::string to_string() const;

private:
  void trim();
  std::vector<Integer> coeffs_;
};

// Primitive gcd with positive leading coefficient. Throws if both are zero.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Element of Q(q) in canonical form: numerator and denominator coprime over Q,
// denominator with positive leading coefficient, and no common integer content.
// Equal values have equal representations.
class RationalFunction {
public:
  RationalFunction() : den_(1) {}
  RationalFunction(long constant) : num_(constant), den_(1) {}  // NOLINT
  RationalFunction(IntPolynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RationalFunction(IntPolynomial num, IntPolynomial den);

  static RationalFunction q() { return RationalFunction(IntPolynomial::q()); }
  // q^k for any integer k.
  static RationalFunction q_power(long k);

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  RationalFunction inverse() const;
  RationalFunction pow(long e) const;
  // q -> q^d.
  RationalFunction substitute_power(unsigned d) const;
  // q -> 1/q.
  RationalFunction substitute_inverse() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  // Rendered in descending powers of q. Polynomials print as "q^5+q^3",
  // Laurent polynomials (denominator exactly q^k) as "-q^-1+q^-2", anything
  // else as "(num)/(den)".
  std::string to_string() const;

private:
  void canonicalize();
  IntPolynomial num_;
  IntPolynomial den_;
};

enum class ArithOp { add, sub, mul, div };

RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op);
RationalFunction rf_substitute_power(const RationalFunction& r, unsigned d);
std::optional<IntPolynomial> rf_as_polynomial(const RationalFunction& r);
bool rf_is_nonneg_int_poly(const RationalFunction& r);

// Coefficients of r as a Laurent polynomial, lowest exponent first, when the
// denominator is exactly q^k. Returns nullopt otherwise.
struct LaurentPolynomial {
  long low_exponent = 0;
  std::vector<Integer> coeffs;
};
std::optional<LaurentPolynomial> rf_as_laurent(const RationalFunction& r);

// Accepts sums, products, quotients and integer powers of integers, q and
// parenthesized subexpressions, e.g. "q^5+q^3", "(q^2-1)/(q-1)", "-q^-1+q^-2",
// "2q^13". Throws ParseError with the failing offset.
RationalFunction parse_rational_function(std::string_view text);
IntPolynomial parse_polynomial(std::string_view text);

// |GL(alpha, F_q)| as a polynomial in q.
IntPolynomial gl_order(std::span<const unsigned> alpha);

}  // namespace refkac
