#pragma once

// Dynamical pairs (X, f) seen through homology: one square integer matrix per
// degree for the action of f on the free part of H_k. Provides the
// quasi-unipotence test, the spectrum Euler characteristic into Z[Q/Z] and
// the matrix-level lifts of σ_n and ρ̃_n.

#include <Eigen/Core>

#include <cstdint>
#include <map>

#include "bost/group_ring.hpp"
#include "bost/int_poly.hpp"
#include "bost/number.hpp"

namespace bost {

using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

/// det(t·I − M), computed modulo a sequence of 62-bit primes by Hessenberg
/// reduction and recombined by the Chinese remainder theorem.
IntPoly charpoly(const IntMatrix& m);

IntPoly charpoly_mod_p(const IntMatrix& m, std::uint64_t p);

IntMatrix matrix_power(const IntMatrix& m, std::uint64_t n);
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// Companion matrix of a monic polynomial: ones on the subdiagonal and
/// −c_0, ..., −c_{k−1} in the last column.
IntMatrix companion_matrix(const IntPoly& p);

/// The action of Φ_n(f) on H(X)^{⊕n}: block (i+1, i) is the identity and
/// block (0, n−1) is M. Copy index is the slow index.
IntMatrix verschiebung_matrix(std::int64_t n, const IntMatrix& m);

/// The cyclic permutation matrix of Z_n, equal to verschiebung_matrix(n, [1]).
IntMatrix cyclic_permutation_matrix(std::int64_t n);

class GradedEndo {
 public:
  using Blocks = std::map<int, IntMatrix>;

  GradedEndo() = default;

  /// A single non-empty degree k block.
  static GradedEndo single(int degree, IntMatrix m);
  /// The one-point space with the identity map, the unit for the product.
  static GradedEndo point();
  /// (Z_n, γ): n points permuted cyclically, concentrated in degree 0.
  static GradedEndo cyclic(std::int64_t n);

  /// Throws InvalidInput for a non-square matrix, negative degree or a
  /// repeated degree. Empty blocks are ignored.
  void add_block(int degree, IntMatrix m);

  const Blocks& blocks() const noexcept { return blocks_; }
  bool is_empty() const noexcept { return blocks_.empty(); }
  /// Total rank of homology.
  Eigen::Index dimension() const;

  friend bool operator==(const GradedEndo& a, const GradedEndo& b);

 private:
  Blocks blocks_;
};

struct QuasiUnipotenceReport {
  bool ok = true;
  std::map<int, CycloFactorization> per_degree;
};

/// With allow_zero the eigenvalue 0 is also accepted (quasi-idempotence).
QuasiUnipotenceReport quasi_unipotent_check(const GradedEndo& g, bool allow_zero = false);

/// Σ_k w_k Σ_λ m_λ e(λ) over the eigenvalues on H_k, where w_k = (−1)^k if
/// signed_mode is set and 1 otherwise. Throws DomainError if g is not
/// quasi-unipotent.
GroupRingZ spectrum_euler(const GradedEndo& g, bool signed_mode = false);

/// Σ_{gcd(j,d)=1} e(j/d): the primitive d-th roots of unity.
GroupRingZ primitive_roots(std::int64_t d);

/// (X, fⁿ).
GradedEndo sigma(std::int64_t n, const GradedEndo& g);
/// (X × Z_n, Φ_n(f)).
GradedEndo rho_tilde(std::int64_t n, const GradedEndo& g);
/// Künneth: degree m block is ⊕_{k+l=m} M_k ⊗ N_l.
GradedEndo product(const GradedEndo& g, const GradedEndo& h);
/// Degreewise block-diagonal sum.
GradedEndo disjoint_union(const GradedEndo& g, const GradedEndo& h);
/// The n-fold disjoint union.
GradedEndo copies(std::int64_t n, const GradedEndo& g);

}  // namespace bost
