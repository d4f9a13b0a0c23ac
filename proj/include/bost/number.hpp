#pragma once

// Scalar types and small integer helpers shared by every module.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bost {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <class Scalar>
inline constexpr bool is_rational_v = std::is_same_v<Scalar, Rational>;

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in multiplication");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in addition");
  return r;
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

/// Positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// Möbius function.
int moebius(std::int64_t n);

std::int64_t to_int64(const Integer& x);
bool fits_int64(const Integer& x);

/// Parses a decimal integer with optional sign; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

/// Parses "p/q" or "p"; throws std::invalid_argument (also for q = 0).
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& x);

inline bool is_integral(const Rational& x) { return denominator(x) == 1; }

}  // namespace bost
