#pragma once

// Coefficient rings. Each ring is a small value object that owns the arithmetic; the linear
// algebra is templated on it. RingSpec is the runtime tag used at the interface level.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "khoma/error.hpp"

namespace khoma {

enum class RingKind { Rationals, Integers, IntegersMod };

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct RingSpec {
  RingKind kind = RingKind::Rationals;
  std::uint64_t modulus = 0;

  static RingSpec rationals() { return {RingKind::Rationals, 0}; }
  static RingSpec integers() { return {RingKind::Integers, 0}; }
  static RingSpec integers_mod(std::uint64_t p) {
    if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "modulus " + std::to_string(p) + " is not prime");
    return {RingKind::IntegersMod, p};
  }

  bool is_field() const { return kind != RingKind::Integers; }

  /// `Q`, `Z`, `Z/p`.
  std::string name() const {
    switch (kind) {
      case RingKind::Rationals: return "Q";
      case RingKind::Integers: return "Z";
      case RingKind::IntegersMod: return "Z/" + std::to_string(modulus);
    }
    return "?";
  }

  /// Accepts `Q`, `Z`, `Zp:<p>`, `Z/<p>`.
  static RingSpec parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text == "Z") return integers();
    std::string_view rest;
    if (text.starts_with("Zp:")) rest = text.substr(3);
    else if (text.starts_with("Z/")) rest = text.substr(2);
    else fail(ErrorCode::InvalidArgument, "unknown ring '" + std::string(text) + "'");
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string_view::npos)
      fail(ErrorCode::InvalidArgument, "bad modulus in ring '" + std::string(text) + "'");
    return integers_mod(std::stoull(std::string(rest)));
  }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

struct RationalField {
  using value_type = mpq_class;
  static constexpr bool is_field = true;

  RingSpec spec() const { return RingSpec::rationals(); }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return mpq_class(mpz_class(static_cast<long>(v))); }
  value_type from_rational(const mpq_class& v) const { return v; }
  bool is_zero(const value_type& v) const { return sgn(v) == 0; }
  bool is_unit(const value_type& v) const { return !is_zero(v); }
  value_type inverse(const value_type& v) const { return 1 / v; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  /// a -= b * c
  void sub_mul(value_type& a, const value_type& b, const value_type& c) const { a -= b * c; }
  std::string to_string(const value_type& v) const { return v.get_str(); }
};

struct IntegerRing {
  using value_type = mpz_class;
  static constexpr bool is_field = false;

  RingSpec spec() const { return RingSpec::integers(); }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return mpz_class(static_cast<long>(v)); }
  value_type from_rational(const mpq_class& v) const {
    if (v.get_den() != 1) fail(ErrorCode::InvalidArgument, "non-integral value " + v.get_str() + " over Z");
    return v.get_num();
  }
  bool is_zero(const value_type& v) const { return sgn(v) == 0; }
  bool is_unit(const value_type& v) const { return v == 1 || v == -1; }
  value_type inverse(const value_type& v) const { return v; }  // units only
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  void sub_mul(value_type& a, const value_type& b, const value_type& c) const {
    mpz_submul(a.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
  }
  std::string to_string(const value_type& v) const { return v.get_str(); }
};

struct PrimeField {
  using value_type = std::uint64_t;
  static constexpr bool is_field = true;

  std::uint64_t p;

  explicit PrimeField(std::uint64_t modulus) : p(modulus) {
    if (!is_prime(modulus)) fail(ErrorCode::InvalidArgument, "modulus is not prime");
  }

  RingSpec spec() const { return RingSpec{RingKind::IntegersMod, p}; }
  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<value_type>(r < 0 ? r + static_cast<long long>(p) : r);
  }
  value_type from_rational(const mpq_class& v) const {
    mpz_class num = v.get_num() % p, den = v.get_den() % p;
    if (num < 0) num += p;
    if (den == 0) fail(ErrorCode::InvalidArgument, "denominator vanishes mod " + std::to_string(p));
    return mul(static_cast<value_type>(num.get_ui()), inverse(static_cast<value_type>(den.get_ui())));
  }
  bool is_zero(value_type v) const { return v == 0; }
  bool is_unit(value_type v) const { return v != 0; }
  value_type add(value_type a, value_type b) const {
    value_type r = a + b;
    return r >= p ? r - p : r;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % p);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type inverse(value_type a) const {
    // Fermat: a^(p-2)
    value_type result = 1 % p, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  void sub_mul(value_type& a, value_type b, value_type c) const { a = sub(a, mul(b, c)); }
  std::string to_string(value_type v) const { return std::to_string(v); }
};

/// Invoke `f` with the ring object matching `spec`.
template <class F>
decltype(auto) with_ring(const RingSpec& spec, F&& f) {
  switch (spec.kind) {
    case RingKind::Rationals: return std::forward<F>(f)(RationalField{});
    case RingKind::Integers: return std::forward<F>(f)(IntegerRing{});
    case RingKind::IntegersMod: return std::forward<F>(f)(PrimeField{spec.modulus});
  }
  fail(ErrorCode::InvalidArgument, "unknown ring kind");
}

}  // namespace khoma
