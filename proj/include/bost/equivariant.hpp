#pragma once

// Finite Ẑ-sets up to equivariant isomorphism, as a model of the equivariant
// Grothendieck ring. A Ẑ-set whose action factors through Z/N is a disjoint
// union of cyclic orbits Z/d with d | N; its class is the orbit multiset.

#include <cstdint>
#include <map>
#include <string>

#include "bost/crossed_product.hpp"
#include "bost/group_ring.hpp"
#include "bost/number.hpp"

namespace bost {

/// Σ m_d [Z/d]. Multiplicities may be negative (virtual classes); zero
/// multiplicities are never stored.
class OrbitSum {
 public:
  using Orbits = std::map<std::int64_t, Integer>;

  OrbitSum() = default;

  static OrbitSum orbit(std::int64_t d, const Integer& mult = 1);
  /// The one-point set [Z/1]: the unit.
  static OrbitSum one() { return orbit(1); }

  const Orbits& orbits() const noexcept { return orbits_; }
  bool is_zero() const noexcept { return orbits_.empty(); }
  Integer multiplicity(std::int64_t d) const;
  /// lcm of the orbit lengths: the action factors through Z/level.
  std::int64_t level() const;
  /// Σ d·m_d, the number of points.
  Integer cardinality() const;
  /// All multiplicities are non-negative.
  bool is_genuine() const;

  void add_orbits(std::int64_t d, const Integer& mult);

  OrbitSum& operator+=(const OrbitSum& o);
  OrbitSum& operator-=(const OrbitSum& o);
  OrbitSum& operator*=(const Integer& k);
  friend OrbitSum operator+(OrbitSum a, const OrbitSum& b) { return a += b; }
  friend OrbitSum operator-(OrbitSum a, const OrbitSum& b) { return a -= b; }
  friend OrbitSum operator-(OrbitSum a) { return a *= Integer(-1); }
  friend OrbitSum operator*(const Integer& k, OrbitSum a) { return a *= k; }

  /// Diagonal action on the product: [Z/d]·[Z/e] = gcd(d,e)·[Z/lcm(d,e)].
  friend OrbitSum operator*(const OrbitSum& a, const OrbitSum& b);

  friend bool operator==(const OrbitSum&, const OrbitSum&) = default;

  /// "Z/1^2+Z/4", or "0" for the empty class.
  std::string label() const;
  static OrbitSum parse_label(const std::string& text);

 private:
  Orbits orbits_;
};

/// The class [Z_n, γ_n] of n points permuted cyclically.
inline OrbitSum cyclic_set(std::int64_t n) { return OrbitSum::orbit(n); }

/// Precomposition of the action with ζ ↦ ζⁿ:
/// [Z/d] ↦ gcd(n,d)·[Z/(d/gcd(n,d))].
OrbitSum sigma(std::int64_t n, const OrbitSum& x);

/// The Verschiebung (X × Z_n, Φ_n(α)): [Z/d] ↦ [Z/(nd)].
OrbitSum rho_tilde(std::int64_t n, const OrbitSum& x);

/// Equivariant Euler characteristic χ^Ẑ: [Z/d] ↦ Σ_{ds=0} e(s).
GroupRingZ chi_hat_z(const OrbitSum& x);

/// The noncommutative ring generated by the orbit model and μ̃_n, μ_n*.
using BoldK0Elem = CrossedProduct<OrbitSum, IntegralRules<OrbitSum>>;

/// χ^Ẑ on coefficients, identity on μ̃_n and μ_n*.
inline BCElem bold_chi(const BoldK0Elem& u) {
  return map_coefficients<BCElem>(u, [](const OrbitSum& x) { return chi_hat_z(x); });
}

}  // namespace bost
