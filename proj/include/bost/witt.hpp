#pragma once

// Truncated big Witt vectors over the integers and the mark homomorphism
// from the orbit model, which identifies the completed Burnside ring of Ẑ
// with W(Z) level by level.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bost/equivariant.hpp"
#include "bost/number.hpp"

namespace bost {

/// A finite set of positive integers closed under taking divisors.
class TruncationSet {
 public:
  /// {1}.
  TruncationSet() : elems_{1} {}
  /// Throws InvalidInput unless the set is non-empty and divisor closed.
  explicit TruncationSet(std::set<std::int64_t> elems);
  TruncationSet(std::initializer_list<std::int64_t> elems)
      : TruncationSet(std::set<std::int64_t>(elems)) {}

  /// The divisors of n.
  static TruncationSet divisors_of(std::int64_t n);

  const std::set<std::int64_t>& elements() const noexcept { return elems_; }
  bool contains(std::int64_t m) const { return elems_.count(m) != 0; }
  std::size_t size() const noexcept { return elems_.size(); }
  std::int64_t max() const { return *elems_.rbegin(); }

  friend bool operator==(const TruncationSet&, const TruncationSet&) = default;

 private:
  std::set<std::int64_t> elems_;
};

using Ghost = std::map<std::int64_t, Integer>;

class WittVector {
 public:
  WittVector() = default;
  /// Missing coordinates are zero; coordinates outside trunc throw.
  WittVector(TruncationSet trunc, const std::map<std::int64_t, Integer>& coords);

  static WittVector zero(const TruncationSet& trunc) { return WittVector(trunc, {}); }
  /// The Teichmüller representative [a] = (a, 0, 0, ...).
  static WittVector teichmuller(const TruncationSet& trunc, const Integer& a);

  const TruncationSet& trunc() const noexcept { return trunc_; }
  /// One entry per element of the truncation set, zeros included.
  const std::map<std::int64_t, Integer>& coords() const noexcept { return coords_; }
  const Integer& coord(std::int64_t d) const;

  friend bool operator==(const WittVector&, const WittVector&) = default;

 private:
  TruncationSet trunc_;
  std::map<std::int64_t, Integer> coords_;
};

/// g_m = Σ_{d|m} d·x_d^{m/d} for every m in the truncation set.
Ghost witt_ghost(const WittVector& w);

/// Solves the ghost equations bottom-up; throws NotWittVector if a coordinate
/// is not an integer, InvalidInput if a ghost component is missing.
WittVector witt_from_ghost(const TruncationSet& trunc, const Ghost& ghosts);

/// Throws TruncationError on mismatched truncation sets.
WittVector witt_add(const WittVector& a, const WittVector& b);
WittVector witt_sub(const WittVector& a, const WittVector& b);
WittVector witt_mul(const WittVector& a, const WittVector& b);

/// Output truncation {m : nm ∈ T}; g_m(F_n w) = g_{nm}(w).
WittVector witt_frobenius(std::int64_t n, const WittVector& w);

/// Into the same truncation set as w.
WittVector witt_verschiebung(std::int64_t n, const WittVector& w);
/// g_m(V_n w) = n·g_{m/n}(w) if n | m, else 0. Every m/n with n | m in the
/// output set must lie in the truncation set of w (TruncationError otherwise).
WittVector witt_verschiebung(std::int64_t n, const WittVector& w, const TruncationSet& out);

/// Coordinate shift x_{nd} = x_d, computed without the ghost map.
WittVector witt_verschiebung_shift(std::int64_t n, const WittVector& w, const TruncationSet& out);

/// Number of points fixed by the subgroup mẐ: Σ_{d|m} d·x_d.
Integer fixed_points(const OrbitSum& x, std::int64_t m);

/// The Witt vector whose ghost components are the fixed-point counts.
WittVector burnside_to_witt(const OrbitSum& x, const TruncationSet& trunc);

}  // namespace bost
