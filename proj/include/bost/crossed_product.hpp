#pragma once

// Normal-form calculator for algebras generated by a commutative coefficient
// ring R together with μ̃_n, μ_n* (integral form) or μ_n, μ_n* (rational form).
//
// Every element is stored as Σ μ̃_a · x_{a,b} · μ_b* with gcd(a, b) = 1. The
// product of two normal words is computed by
//
//   μ̃_a x μ_b* · μ̃_c y μ_d* = g · μ̃_{ac'} σ_{c'}(x) σ_{b'}(y) μ_{b'd}*,
//   g = gcd(b, c), b = g b', c = g c',
//
// followed by the reduction μ̃_h z μ_h* = ρ̃_h(z) with h = gcd(ac', b'd).
// The Rules policy supplies the scalar produced by μ_g* μ̃_g, the Frobenius
// σ_n and the reduction ρ̃_h of the coefficient ring.

#include <cstdint>
#include <map>
#include <numeric>
#include <utility>

#include "bost/errors.hpp"
#include "bost/group_ring.hpp"
#include "bost/number.hpp"

namespace bost {

/// μ_g* μ̃_g = g, μ̃_h z μ_h* = ρ̃_h(z).
template <class Coeff>
struct IntegralRules {
  static Coeff collision(std::int64_t g, Coeff z) { return Integer(g) * std::move(z); }
  static Coeff frobenius(std::int64_t n, const Coeff& x) { return sigma(n, x); }
  static Coeff reduce(std::int64_t h, const Coeff& z) { return rho_tilde(h, z); }
};

/// μ_g* μ_g = 1, μ_h z μ_h* = ρ_h(z) = h⁻¹ ρ̃_h(z).
struct RationalRules {
  static GroupRingQ collision(std::int64_t, GroupRingQ z) { return z; }
  static GroupRingQ frobenius(std::int64_t n, const GroupRingQ& x) { return sigma(n, x); }
  static GroupRingQ reduce(std::int64_t h, const GroupRingQ& z) { return rho(h, z); }
};

template <class Coeff, class Rules>
class CrossedProduct {
 public:
  using coeff_type = Coeff;
  using rules_type = Rules;
  /// (a, b) with gcd(a, b) = 1.
  using Key = std::pair<std::int64_t, std::int64_t>;
  using Terms = std::map<Key, Coeff>;

  CrossedProduct() = default;

  /// μ̃_a x μ_b*, normalised (a and b need not be coprime).
  static CrossedProduct word(std::int64_t a, const Coeff& x, std::int64_t b) {
    CrossedProduct u;
    u.add_word(a, x, b);
    return u;
  }
  static CrossedProduct inject(const Coeff& x) { return word(1, x, 1); }
  static CrossedProduct one() { return inject(Coeff::one()); }
  static CrossedProduct mu_tilde(std::int64_t n) { return word(n, Coeff::one(), 1); }
  static CrossedProduct mu_star(std::int64_t n) { return word(1, Coeff::one(), n); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of the normal word with key (a, b); zero when absent.
  Coeff coeff(std::int64_t a, std::int64_t b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Coeff() : it->second;
  }

  void add_word(std::int64_t a, const Coeff& x, std::int64_t b) {
    if (a < 1 || b < 1) throw InvalidInput("crossed product: word indices must be positive");
    if (x.is_zero()) return;
    const std::int64_t h = std::gcd(a, b);
    if (h == 1) {
      merge({a, b}, x);
    } else {
      merge({a / h, b / h}, Rules::reduce(h, x));
    }
  }

  CrossedProduct& operator+=(const CrossedProduct& o) {
    for (const auto& [k, x] : o.terms_) merge(k, x);
    return *this;
  }
  CrossedProduct& operator-=(const CrossedProduct& o) {
    for (const auto& [k, x] : o.terms_) merge(k, -x);
    return *this;
  }
  friend CrossedProduct operator+(CrossedProduct u, const CrossedProduct& v) { return u += v; }
  friend CrossedProduct operator-(CrossedProduct u, const CrossedProduct& v) { return u -= v; }

  friend CrossedProduct operator*(const CrossedProduct& u, const CrossedProduct& v) {
    CrossedProduct out;
    for (const auto& [k1, x] : u.terms_) {
      for (const auto& [k2, y] : v.terms_) {
        const auto [a, b] = k1;
        const auto [c, d] = k2;
        const std::int64_t g = std::gcd(b, c);
        const std::int64_t b1 = b / g, c1 = c / g;
        Coeff z = Rules::frobenius(c1, x) * Rules::frobenius(b1, y);
        if (g != 1) z = Rules::collision(g, std::move(z));
        out.add_word(checked_mul(a, c1), z, checked_mul(b1, d));
      }
    }
    return out;
  }

  friend bool operator==(const CrossedProduct&, const CrossedProduct&) = default;

 private:
  void merge(const Key& k, const Coeff& x) {
    if (x.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, x);
    if (inserted) return;
    it->second += x;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Terms terms_;
};

/// The integral Bost–Connes algebra A_Z.
using BCElem = CrossedProduct<GroupRingZ, IntegralRules<GroupRingZ>>;
/// The rational crossed product Q[Q/Z] ⋊ N with generators μ_n, μ_n*.
using BCElemQ = CrossedProduct<GroupRingQ, RationalRules>;

/// Applies f to every coefficient, keeping the (a, b) keys.
template <class Target, class Source, class F>
Target map_coefficients(const Source& u, F&& f) {
  Target out;
  for (const auto& [k, x] : u.terms()) out.add_word(k.first, f(x), k.second);
  return out;
}

/// Rewrites μ̃_a = a·μ_a: the word μ̃_a x μ_b* becomes μ_a (a·x) μ_b*.
inline BCElemQ rationalize(const BCElem& u) {
  BCElemQ out;
  for (const auto& [k, x] : u.terms()) out.add_word(k.first, Rational(k.first) * to_rational(x), k.second);
  return out;
}

}  // namespace bost
