#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "khoma/error.hpp"

namespace khoma {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "Laurent coefficient overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "Laurent coefficient overflow");
  return r;
}

}  // namespace detail

/// Integer Laurent polynomial in a single variable. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  using Terms = std::map<int, std::int64_t>;

  LaurentPolynomial() = default;
  LaurentPolynomial(std::int64_t constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_[0] = constant;
  }

  static LaurentPolynomial monomial(int exponent, std::int64_t coefficient = 1) {
    LaurentPolynomial p;
    if (coefficient != 0) p.terms_[exponent] = coefficient;
    return p;
  }

  /// q + q^-1
  static LaurentPolynomial quantum_two() { return monomial(1) + monomial(-1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }
  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  void add_term(int exponent, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
      it->second = detail::checked_add(it->second, coefficient);
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (auto [e, c] : o.terms_) add_term(e, detail::checked_mul(c, -1));
    return *this;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a) { return LaurentPolynomial{} - a; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (auto [e1, c1] : a.terms_)
      for (auto [e2, c2] : b.terms_) r.add_term(e1 + e2, detail::checked_mul(c1, c2));
    return r;
  }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  LaurentPolynomial pow(int k) const {
    LaurentPolynomial r(1);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  /// Multiply by q^k.
  LaurentPolynomial shifted(int k) const {
    LaurentPolynomial r;
    for (auto [e, c] : terms_) r.terms_[e + k] = c;
    return r;
  }

  /// Substitute q -> q^-1.
  LaurentPolynomial reflected() const {
    LaurentPolynomial r;
    for (auto [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }

  /// Substitute q -> q^k.
  LaurentPolynomial substituted_power(int k) const {
    LaurentPolynomial r;
    for (auto [e, c] : terms_) r.add_term(e * k, c);
    return r;
  }

  /// Substitute the variable by another Laurent polynomial (non-negative exponents only).
  LaurentPolynomial compose(const LaurentPolynomial& value) const {
    LaurentPolynomial r;
    for (auto [e, c] : terms_) {
      if (e < 0) fail(ErrorCode::InvalidArgument, "compose requires a polynomial without negative exponents");
      r += value.pow(e) * LaurentPolynomial(c);
    }
    return r;
  }

  std::int64_t evaluate(std::int64_t x) const {
    std::int64_t r = 0;
    for (auto [e, c] : terms_) {
      if (e < 0) fail(ErrorCode::InvalidArgument, "integer evaluation requires non-negative exponents");
      std::int64_t v = c;
      for (int i = 0; i < e; ++i) v = detail::checked_mul(v, x);
      r = detail::checked_add(r, v);
    }
    return r;
  }

  /// Exact division; throws NotDivisible when the divisor does not divide this polynomial.
  LaurentPolynomial divided_by(const LaurentPolynomial& divisor) const {
    if (divisor.is_zero()) fail(ErrorCode::NotDivisible, "division by zero polynomial");
    LaurentPolynomial rem = *this, quot;
    const int dlead = divisor.max_exponent();
    const std::int64_t dcoef = divisor.coefficient(dlead);
    const int dspan = dlead - divisor.min_exponent();
    while (!rem.is_zero() && rem.max_exponent() - rem.min_exponent() >= dspan) {
      const int e = rem.max_exponent();
      const std::int64_t c = rem.coefficient(e);
      if (c % dcoef != 0) fail(ErrorCode::NotDivisible, "leading coefficient not divisible");
      LaurentPolynomial t = monomial(e - dlead, c / dcoef);
      quot += t;
      rem -= t * divisor;
    }
    if (!rem.is_zero()) fail(ErrorCode::NotDivisible, to_string() + " is not divisible by " + divisor.to_string());
    return quot;
  }

  /// Terms in descending exponent order, e.g. `1 + q^-2 + q^-4 + q^-6`, `2*q^3 - q^-9`.
  std::string to_string(std::string_view var = "q") const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto [e, c] = *it;
      std::int64_t mag = c < 0 ? -c : c;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      if (e == 0) {
        out += std::to_string(mag);
        continue;
      }
      if (mag != 1) out += std::to_string(mag) + "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  /// Inverse of to_string. Accepts `+`/`-` separated terms `c`, `c*v`, `v^e`, `c*v^e`.
  static LaurentPolynomial parse(std::string_view text, std::string_view var = "q") {
    LaurentPolynomial p;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&](std::int64_t& out) {
      skip();
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
      std::size_t start = i;
      std::int64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = detail::checked_add(detail::checked_mul(v, 10), text[i++] - '0');
      if (i == start) return false;
      out = neg ? -v : v;
      return true;
    };
    skip();
    if (text.substr(i) == "0") return p;
    int sign = 1;
    bool expect_term = true;
    bool first = true;
    while (true) {
      skip();
      if (i >= text.size()) break;
      if (!expect_term) {
        if (text[i] == '+') sign = 1;
        else if (text[i] == '-') sign = -1;
        else fail(ErrorCode::Malformed, "expected + or - in polynomial: " + std::string(text));
        ++i;
        expect_term = true;
        continue;
      }
      if (first && text[i] == '-') {
        sign = -1;
        ++i;
        skip();
      }
      first = false;
      std::int64_t coef = 1;
      int exponent = 0;
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        read_int(coef);
        skip();
        if (i < text.size() && text[i] == '*') {
          ++i;
          skip();
        } else {
          p.add_term(0, sign * coef);
          expect_term = false;
          continue;
        }
      }
      if (text.substr(i, var.size()) != var)
        fail(ErrorCode::Malformed, "expected variable in polynomial: " + std::string(text));
      i += var.size();
      exponent = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::int64_t ex;
        if (!read_int(ex)) fail(ErrorCode::Malformed, "bad exponent in polynomial: " + std::string(text));
        exponent = static_cast<int>(ex);
      }
      p.add_term(exponent, sign * coef);
      expect_term = false;
    }
    if (expect_term && !first) fail(ErrorCode::Malformed, "dangling operator in polynomial");
    return p;
  }

 private:
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.to_string(); }

/// (q + q^-1)^k, the graded dimension of V^{\otimes k}.
inline LaurentPolynomial qdim_pow(int k) { return LaurentPolynomial::quantum_two().pow(k); }

/// Finitely supported map degree -> rank.
class GradedDimension {
 public:
  void add(int degree, std::int64_t rank) {
    if (rank == 0) return;
    ranks_[degree] += rank;
    if (ranks_[degree] == 0) ranks_.erase(degree);
  }
  const std::map<int, std::int64_t>& ranks() const { return ranks_; }
  std::int64_t total() const {
    std::int64_t t = 0;
    for (auto [d, r] : ranks_) t += r;
    return t;
  }
  LaurentPolynomial qdim() const {
    LaurentPolynomial p;
    for (auto [d, r] : ranks_) p.add_term(d, r);
    return p;
  }

 private:
  std::map<int, std::int64_t> ranks_;
};

}  // namespace khoma
