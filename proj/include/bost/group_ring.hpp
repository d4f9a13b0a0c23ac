#pragma once

// The group rings Z[Q/Z] and Q[Q/Z] with the maps σ_n, ρ̃_n, ρ_n and the
// idempotents π_n. The coefficient mode is the Scalar template parameter:
// GroupRing<Integer> or GroupRing<Rational>.

#include <cstdint>
#include <map>
#include <numeric>

#include "bost/errors.hpp"
#include "bost/number.hpp"
#include "bost/qz.hpp"

namespace bost {

template <class Scalar>
class GroupRing {
 public:
  using scalar_type = Scalar;
  using Terms = std::map<QZ, Scalar>;

  GroupRing() = default;

  /// c·e(r)
  static GroupRing basis(const QZ& r, const Scalar& c = Scalar(1)) {
    GroupRing x;
    x.add_term(r, c);
    return x;
  }
  static GroupRing one() { return basis(QZ()); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coeff(const QZ& r) const {
    auto it = terms_.find(r);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// lcm of the denominators in the support; 1 for the zero element.
  std::int64_t level() const {
    std::int64_t l = 1;
    for (const auto& [r, c] : terms_) l = lcm64(l, r.den());
    return l;
  }

  void add_term(const QZ& r, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(r, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  GroupRing& operator+=(const GroupRing& o) {
    for (const auto& [r, c] : o.terms_) add_term(r, c);
    return *this;
  }
  GroupRing& operator-=(const GroupRing& o) {
    for (const auto& [r, c] : o.terms_) add_term(r, -c);
    return *this;
  }
  GroupRing& operator*=(const Scalar& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [r, c] : terms_) c *= k;
    return *this;
  }

  friend GroupRing operator+(GroupRing a, const GroupRing& b) { return a += b; }
  friend GroupRing operator-(GroupRing a, const GroupRing& b) { return a -= b; }
  friend GroupRing operator-(GroupRing a) { return a *= Scalar(-1); }
  friend GroupRing operator*(const Scalar& k, GroupRing a) { return a *= k; }
  friend GroupRing operator*(GroupRing a, const Scalar& k) { return a *= k; }

  /// Convolution: e(r)·e(s) = e(r + s).
  friend GroupRing operator*(const GroupRing& a, const GroupRing& b) {
    GroupRing out;
    for (const auto& [r, c] : a.terms_)
      for (const auto& [s, d] : b.terms_) out.add_term(r + s, c * d);
    return out;
  }

  friend bool operator==(const GroupRing&, const GroupRing&) = default;

 private:
  Terms terms_;
};

using GroupRingZ = GroupRing<Integer>;
using GroupRingQ = GroupRing<Rational>;

/// Ring endomorphism e(r) ↦ e(nr).
template <class Scalar>
GroupRing<Scalar> sigma(std::int64_t n, const GroupRing<Scalar>& x) {
  if (n < 1) throw InvalidInput("sigma: n must be positive");
  GroupRing<Scalar> out;
  for (const auto& [r, c] : x.terms()) out.add_term(r.times(n), c);
  return out;
}

/// Additive map e(r) ↦ Σ_{nr'=r} e(r').
template <class Scalar>
GroupRing<Scalar> rho_tilde(std::int64_t n, const GroupRing<Scalar>& x) {
  if (n < 1) throw InvalidInput("rho_tilde: n must be positive");
  if (n == 1) return x;
  GroupRing<Scalar> out;
  for (const auto& [r, c] : x.terms())
    for (const QZ& s : preimages(r, n)) out.add_term(s, c);
  return out;
}

/// ρ_n = n⁻¹·ρ̃_n; only meaningful with rational coefficients.
inline GroupRingQ rho(std::int64_t n, const GroupRingQ& x) {
  return Rational(1, n) * rho_tilde(n, x);
}

/// Σ_{ns=0} e(s) = n·π_n, the class of the cyclic Ẑ-set of size n.
inline GroupRingZ division_sum(std::int64_t n) {
  GroupRingZ out;
  for (const QZ& s : division_points(n)) out.add_term(s, 1);
  return out;
}

/// The idempotent π_n = n⁻¹ Σ_{ns=0} e(s).
inline GroupRingQ pi(std::int64_t n) {
  GroupRingQ out;
  for (const QZ& s : division_points(n)) out.add_term(s, Rational(1, n));
  return out;
}

inline GroupRingQ to_rational(const GroupRingZ& x) {
  GroupRingQ out;
  for (const auto& [r, c] : x.terms()) out.add_term(r, Rational(c));
  return out;
}

/// Throws CoefficientModeError if some coefficient is not an integer.
GroupRingZ to_integer(const GroupRingQ& x);

struct SubringMembership {
  bool member = false;
  /// x = Σ_d a_d Σ_{ds=0} e(s) when member is true.
  std::map<std::int64_t, Integer> coefficients;
};

/// Membership in the subring spanned by the elements Σ_{ds=0} e(s), with the
/// expansion coefficients as certificate.
SubringMembership fixed_subring_membership(const GroupRingZ& x);

GroupRingZ from_division_sums(const std::map<std::int64_t, Integer>& coefficients);

}  // namespace bost
