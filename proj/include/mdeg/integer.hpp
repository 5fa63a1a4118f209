#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <gmpxx.h>

#include <optional>
#include <string>

namespace mdeg {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& value) { return value.get_str(10); }

inline std::string to_string(const Rational& value) {
  Rational reduced = value;
  reduced.canonicalize();
  if (reduced.get_den() == 1) return reduced.get_num().get_str(10);
  return reduced.get_num().get_str(10) + "/" + reduced.get_den().get_str(10);
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

/// Floor-style remainder in [0, |m|).
inline Integer mod(const Integer& a, const Integer& m) {
  Integer out;
  mpz_mod(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return out;
}

inline Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

/// Floor of the k-th root of a nonnegative value.
inline Integer floor_root(const Integer& value, unsigned long k) {
  Integer out;
  mpz_root(out.get_mpz_t(), value.get_mpz_t(), k);
  return out;
}

/// The nonnegative r with r^k == value, if one exists. Negative values have
/// no such root (only even k are used here).
inline std::optional<Integer> exact_root(const Integer& value, unsigned long k) {
  if (value < 0) return std::nullopt;
  Integer out;
  if (mpz_root(out.get_mpz_t(), value.get_mpz_t(), k) == 0) return std::nullopt;
  return out;
}

/// Exact quotient when divisor | value.
inline std::optional<Integer> exact_div(const Integer& value, const Integer& divisor) {
  if (divisor == 0) return std::nullopt;
  if (mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()) == 0) return std::nullopt;
  Integer out;
  mpz_divexact(out.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
  return out;
}

}  // namespace mdeg
