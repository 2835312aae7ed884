// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#include "refkac/qfield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "refkac/error.hpp"

namespace refkac {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

IntPolynomial::IntPolynomial(Integer constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(Integer coeff, std::size_t exponent) {
  IntPolynomial p;
  if (coeff == 0) return p;
  p.coeffs_.assign(exponent + 1, Integer(0));
  p.coeffs_[exponent] = std::move(coeff);
  return p;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

std::size_t IntPolynomial::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return k;
  }
  return 0;
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer c = content();
  if (leading() < 0) c = -c;
  return c == 1 ? *this : divexact(c);
}

Integer IntPolynomial::evaluate(const Integer& at) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

IntPolynomial IntPolynomial::shifted(long k) const {
  if (is_zero() || k == 0) return *this;
  IntPolynomial r;
  if (k > 0) {
    r.coeffs_.assign(static_cast<std::size_t>(k), Integer(0));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
  }
  const auto drop = static_cast<std::size_t>(-k);
  if (valuation() < drop) {
    throw Error(ErrorCode::invalid_argument, "shift would produce negative exponents");
  }
  r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(drop), coeffs_.end());
  return r;
}

IntPolynomial IntPolynomial::divexact(const Integer& d) const {
  if (d == 0) throw Error(ErrorCode::division_by_zero, "polynomial division by zero");
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return r;
}

IntPolynomial IntPolynomial::divexact(const IntPolynomial& d) const {
  if (d.is_zero()) throw Error(ErrorCode::division_by_zero, "polynomial division by zero");
  if (d.is_constant()) return divexact(d.coeffs_[0]);
  if (is_zero()) return {};
  const std::size_t dn = d.coeffs_.size();
  if (coeffs_.size() < dn) {
    throw Error(ErrorCode::invalid_argument, "inexact polynomial division");
  }
  std::vector<Integer> rem = coeffs_;
  std::vector<Integer> quot(coeffs_.size() - dn + 1, Integer(0));
  Integer t;
  for (std::size_t i = quot.size(); i-- > 0;) {
    Integer& top = rem[i + dn - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.leading().get_mpz_t())) {
      throw Error(ErrorCode::invalid_argument, "inexact polynomial division");
    }
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
    for (std::size_t j = 0; j < dn; ++j) {
      mpz_submul(rem[i + j].get_mpz_t(), t.get_mpz_t(), d.coeffs_[j].get_mpz_t());
    }
    quot[i] = t;
  }
  for (std::size_t j = 0; j + 1 < dn; ++j) {
    if (rem[j] != 0) throw Error(ErrorCode::invalid_argument, "inexact polynomial division");
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::pseudo_remainder(const IntPolynomial& d) const {
  if (d.is_zero()) throw Error(ErrorCode::division_by_zero, "pseudo-remainder by zero");
  std::vector<Integer> rem = coeffs_;
  const std::size_t dn = d.coeffs_.size();
  const Integer& lc = d.leading();
  while (rem.size() >= dn && !rem.empty()) {
    const Integer top = rem.back();
    const std::size_t off = rem.size() - dn;
    for (auto& c : rem) c *= lc;
    for (std::size_t j = 0; j < dn; ++j) {
      mpz_submul(rem[off + j].get_mpz_t(), top.get_mpz_t(), d.coeffs_[j].get_mpz_t());
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return IntPolynomial(std::move(rem));
}

IntPolynomial IntPolynomial::substitute_power(unsigned d) const {
  if (d == 0) throw Error(ErrorCode::invalid_argument, "substitution power must be positive");
  if (d == 1 || is_constant()) return *this;
  std::vector<Integer> out((coeffs_.size() - 1) * d + 1, Integer(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k * d] = coeffs_[k];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<Integer> out(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(out));
}

std::strong_ordering operator<=>(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
  for (std::size_t k = a.coeffs_.size(); k-- > 0;) {
    const int c = cmp(a.coeffs_[k], b.coeffs_[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

// Renders sum of c_k q^(k + shift) in descending order of exponent.
std::string render_terms(const std::vector<Integer>& coeffs, long shift) {
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Integer& c = coeffs[k];
    if (c == 0) continue;
    const long e = static_cast<long>(k) + shift;
    const bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    const Integer mag = abs(c);
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += 'q';
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::size_t term_count(const IntPolynomial& p) {
  return static_cast<std::size_t>(
      std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Integer& c) { return c != 0; }));
}

}  // namespace

std::string IntPolynomial::to_string() const { return render_terms(coeffs_, 0); }

// ---------------------------------------------------------------------------
// gcd

namespace {

IntPolynomial primitive_prs_gcd(IntPolynomial a, IntPolynomial b) {
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.is_constant()) return IntPolynomial(1);
    IntPolynomial r = a.pseudo_remainder(b);
    a = std::move(b);
    b = r.primitive_part();
  }
  return a.primitive_part();
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) {
    throw Error(ErrorCode::invalid_argument, "gcd of two zero polynomials");
  }
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  const std::size_t v = std::min(a.valuation(), b.valuation());
  IntPolynomial qpart = IntPolynomial::monomial(1, v);
  if (a.is_constant() || b.is_constant()) return IntPolynomial(1);
  if (a == b) return a.primitive_part();
  IntPolynomial as = a.shifted(-static_cast<long>(a.valuation()));
  IntPolynomial bs = b.shifted(-static_cast<long>(b.valuation()));
  if (as.is_constant() || bs.is_constant()) return qpart;
  return primitive_prs_gcd(std::move(as), std::move(bs)) * qpart;
}

// ---------------------------------------------------------------------------
// RationalFunction

namespace {

// Removes common integer content and makes the denominator's leading
// coefficient positive. Assumes the polynomial parts are already coprime.
void normalize_content(IntPolynomial& num, IntPolynomial& den) {
  if (num.is_zero()) {
    den = IntPolynomial(1);
    return;
  }
  Integer c = num.content();
  if (c != 1) {
    const Integer cd = den.content();
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
  }
  if (den.leading() < 0) c = -c;
  if (c != 1) {
    num = num.divexact(c);
    den = den.divexact(c);
  }
}

}  // namespace

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (den_.is_zero()) throw Error(ErrorCode::division_by_zero, "zero denominator");
  if (num_.is_zero()) {
    den_ = IntPolynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    IntPolynomial g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  normalize_content(num_, den_);
}

RationalFunction RationalFunction::q_power(long k) {
  if (k >= 0) return RationalFunction(IntPolynomial::monomial(1, static_cast<std::size_t>(k)));
  RationalFunction r;
  r.num_ = IntPolynomial(1);
  r.den_ = IntPolynomial::monomial(1, static_cast<std::size_t>(-k));
  return r;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    if (den_.is_one()) return *this;
    canonicalize();
    return *this;
  }
  if (den_.is_constant() && rhs.den_.is_constant()) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize_content(num_, den_);
    return *this;
  }
  const IntPolynomial g = poly_gcd(den_, rhs.den_);
  if (g.is_one()) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize_content(num_, den_);
    return *this;
  }
  const IntPolynomial b1 = den_.divexact(g);
  const IntPolynomial d1 = rhs.den_.divexact(g);
  IntPolynomial t = num_ * d1 + rhs.num_ * b1;
  if (t.is_zero()) return *this = RationalFunction();
  const IntPolynomial g2 = poly_gcd(t, g);
  num_ = g2.is_one() ? std::move(t) : t.divexact(g2);
  den_ = b1 * (g2.is_one() ? rhs.den_ : rhs.den_.divexact(g2));
  normalize_content(num_, den_);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  return *this += -rhs;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = RationalFunction();
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ *= rhs.num_;
    return *this;
  }
  IntPolynomial a = num_;
  IntPolynomial d = rhs.den_;
  IntPolynomial c = rhs.num_;
  IntPolynomial b = den_;
  if (!d.is_constant() && !a.is_constant()) {
    const IntPolynomial g1 = poly_gcd(a, d);
    if (!g1.is_one()) {
      a = a.divexact(g1);
      d = d.divexact(g1);
    }
  }
  if (!b.is_constant() && !c.is_constant()) {
    const IntPolynomial g2 = poly_gcd(c, b);
    if (!g2.is_one()) {
      c = c.divexact(g2);
      b = b.divexact(g2);
    }
  }
  num_ = a * c;
  den_ = b * d;
  normalize_content(num_, den_);
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero");
  RationalFunction r;
  r.num_ = den_;
  r.den_ = num_;
  normalize_content(r.num_, r.den_);
  return r;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::division_by_zero, "division by zero");
  return *this *= rhs.inverse();
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction result(1);
  RationalFunction base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

RationalFunction RationalFunction::substitute_power(unsigned d) const {
  if (d == 0) throw Error(ErrorCode::invalid_argument, "substitution power must be positive");
  if (d == 1) return *this;
  // Coprime polynomials stay coprime under q -> q^d; only the sign and content
  // conventions need re-checking, and they are preserved as well.
  RationalFunction r;
  r.num_ = num_.substitute_power(d);
  r.den_ = den_.substitute_power(d);
  return r;
}

RationalFunction RationalFunction::substitute_inverse() const {
  // p(1/q) = reversed(p) / q^deg p
  const long shift = den_.degree() - num_.degree();
  IntPolynomial n = num_.reversed();
  IntPolynomial d = den_.reversed();
  if (shift > 0) n = n.shifted(shift);
  if (shift < 0) d = d.shifted(-shift);
  return RationalFunction(std::move(n), std::move(d));
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  if (auto laurent = rf_as_laurent(*this)) {
    return render_terms(laurent->coeffs, laurent->low_exponent);
  }
  std::string n = num_.to_string();
  if (term_count(num_) > 1) n = "(" + n + ")";
  const bool bare_den =
      (den_.is_constant()) || (term_count(den_) == 1 && den_.leading() == 1);
  std::string d = den_.to_string();
  if (!bare_den) d = "(" + d + ")";
  return n + "/" + d;
}

// ---------------------------------------------------------------------------
// free functions

RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw Error(ErrorCode::invalid_argument, "unknown arithmetic operation");
}

RationalFunction rf_substitute_power(const RationalFunction& r, unsigned d) {
  return r.substitute_power(d);
}

std::optional<IntPolynomial> rf_as_polynomial(const RationalFunction& r) {
  // Canonical form puts any rational scalar into the denominator, so integer
  // polynomials are exactly the values with denominator 1.
  if (!r.denominator().is_one()) return std::nullopt;
  return r.numerator();
}

bool rf_is_nonneg_int_poly(const RationalFunction& r) {
  auto p = rf_as_polynomial(r);
  if (!p) return false;
  return std::all_of(p->coeffs().begin(), p->coeffs().end(),
                     [](const Integer& c) { return c >= 0; });
}

std::optional<LaurentPolynomial> rf_as_laurent(const RationalFunction& r) {
  const IntPolynomial& den = r.denominator();
  if (!den.is_zero() && den.leading() == 1 && term_count(den) == 1) {
    return LaurentPolynomial{-den.degree(), r.numerator().coeffs()};
  }
  return std::nullopt;
}

IntPolynomial gl_order(std::span<const unsigned> alpha) {
  IntPolynomial result(1);
  for (unsigned a : alpha) {
    for (unsigned k = 0; k < a; ++k) {
      result *= IntPolynomial::monomial(1, a) - IntPolynomial::monomial(1, k);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

class ExprParser {
public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  RationalFunction parse_all() {
    RationalFunction r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == 'q' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  RationalFunction expr() {
    RationalFunction acc;
    bool first = true;
    for (;;) {
      bool negate = false;
      if (peek('+') || peek('-')) {
        negate = text_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      RationalFunction t = term();
      acc += negate ? -t : t;
      first = false;
    }
    return acc;
  }

  RationalFunction term() {
    RationalFunction acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (peek('/')) {
        ++pos_;
        const std::size_t at = pos_;
        RationalFunction d = factor();
        if (d.is_zero()) throw ParseError(at, "division by zero");
        acc /= d;
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  RationalFunction factor() {
    RationalFunction base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        neg = text_[pos_] == '-';
        ++pos_;
      }
      const std::size_t at = pos_;
      const Integer e = integer();
      if (!e.fits_slong_p()) throw ParseError(at, "exponent too large");
      const long ev = e.get_si();
      if (neg && base.is_zero()) throw ParseError(at, "negative power of zero");
      base = base.pow(neg ? -ev : ev);
    }
    return base;
  }

  RationalFunction atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'q') {
      ++pos_;
      return RationalFunction::q();
    }
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RationalFunction(IntPolynomial(integer()));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text) {
  return ExprParser(text).parse_all();
}

IntPolynomial parse_polynomial(std::string_view text) {
  RationalFunction r = parse_rational_function(text);
  auto p = rf_as_polynomial(r);
  if (!p) throw ParseError(0, "expression is not an integer polynomial");
  return *p;
}

}  // namespace refkac
