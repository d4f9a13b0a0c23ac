#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bost/number.hpp"

namespace bost {

/// Dense univariate polynomial over the integers, constant term first.
/// The zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(const Integer& c, std::size_t k);
  static IntPoly constant(const Integer& c) { return monomial(c, 0); }
  /// t^n - 1
  static IntPoly x_pow_minus_one(std::size_t n);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const Integer& leading() const { return coeffs_.back(); }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of t^k (zero past the degree).
  Integer operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly operator*(const IntPoly& o) const;
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Human-readable form in the variable t, e.g. "t^2 - t + 1".
  std::string str() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPoly pow(const IntPoly& p, unsigned k);

/// Quotient and remainder of p by a monic divisor. Throws InvalidInput if the
/// divisor is not monic.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& p, const IntPoly& divisor);

/// The d-th cyclotomic polynomial, obtained from t^d - 1 by exact division by
/// every Φ_e with e | d, e < d. Results are memoised.
IntPoly cyclotomic_poly(std::int64_t d);

/// p = t^zero_mult · Π Φ_d^cyclo[d] · remainder, with no t or cyclotomic
/// factor left in the remainder.
struct CycloFactorization {
  std::size_t zero_mult = 0;
  std::map<std::int64_t, std::size_t> cyclo;
  IntPoly remainder;

  /// Every root is zero or a root of unity.
  bool quasi_idempotent() const { return remainder.is_constant() && abs(remainder[0]) == 1; }
  /// Every root is a root of unity.
  bool quasi_unipotent() const { return quasi_idempotent() && zero_mult == 0; }
  IntPoly product() const;
};

/// Bounded trial division by t and by every Φ_d with φ(d) <= deg p; complete by
/// Kronecker's theorem. Throws InvalidInput on the zero polynomial.
CycloFactorization cyclotomic_factorize(const IntPoly& p);

}  // namespace bost
