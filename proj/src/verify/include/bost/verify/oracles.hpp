#pragma once

// Independent reference computations. None of them reuses the closed-form
// rules they are compared against.

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "bost/crossed_product.hpp"
#include "bost/equivariant.hpp"
#include "bost/graded_endo.hpp"
#include "bost/group_ring.hpp"
#include "bost/int_poly.hpp"

namespace bost::verify {

/// A finite set {0, ..., n−1} with the action of the generator of Ẑ given
/// as an explicit permutation.
struct PermutationSet {
  std::vector<std::size_t> perm;

  /// One cycle 0 → 1 → ... → d−1 → 0 per orbit. Requires a genuine sum.
  static PermutationSet from_orbits(const OrbitSum& x);

  std::size_t size() const { return perm.size(); }
  /// Cycle type as an orbit multiset.
  OrbitSum cycle_type() const;
  /// Number of points fixed by the m-th power.
  std::int64_t fixed_by_power(std::int64_t m) const;
};

/// X × Y with the diagonal action.
PermutationSet diagonal_product(const PermutationSet& x, const PermutationSet& y);
/// The n-th power of the action.
PermutationSet power(const PermutationSet& x, std::int64_t n);
/// X × Z_n with (x, i) ↦ (x, i+1) for i < n−1 and (x, n−1) ↦ (α(x), 0).
PermutationSet cyclic_extension(const PermutationSet& x, std::int64_t n);

/// The permutation character: e(s) appears once for every cycle whose
/// length kills s.
GroupRingZ permutation_character(const PermutationSet& x);

/// Σ_{nr'=r} e(r') found by scanning every fraction with denominator
/// dividing n·den(r).
GroupRingZ rho_tilde_by_search(std::int64_t n, const GroupRingZ& x);

/// Φ_d = Π_{e|d} (t^e − 1)^{μ(d/e)}.
IntPoly cyclotomic_by_moebius(std::int64_t d);

/// det(tI − M) by the Faddeev–LeVerrier recursion over the rationals.
IntPoly charpoly_faddeev(const IntMatrix& m);

/// Σ_{n=1}^{terms} e^{2πi r n} n^{−β}, compensated summation.
std::complex<long double> polylog_direct(double beta, const QZ& r, std::int64_t terms);

/// Sparse vector in ℓ²(N) with complex entries.
using Ell2 = std::map<std::int64_t, std::complex<long double>>;

/// The standard action on ℓ²(N): μ̃_a ε_m = a·ε_{am}, μ_b* ε_m = ε_{m/b} or 0,
/// e(r) ε_m = e^{2πi r m} ε_m.
Ell2 act(const BCElem& u, const Ell2& v);

/// max_m ‖(u·v) ε_m − u(v(ε_m))‖ for 1 <= m <= range.
long double representation_defect(const BCElem& u, const BCElem& v, const BCElem& uv, std::int64_t range);

}  // namespace bost::verify
