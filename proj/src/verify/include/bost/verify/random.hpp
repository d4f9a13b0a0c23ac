#pragma once

// Seeded generators for randomized checks.

#include <cstdint>
#include <random>

#include "bost/crossed_product.hpp"
#include "bost/equivariant.hpp"
#include "bost/graded_endo.hpp"
#include "bost/group_ring.hpp"
#include "bost/witt.hpp"

namespace bost::verify {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng_() % span);
  }
  bool coin() { return (rng_() >> 17) & 1; }

  /// Non-zero integer in [−bound, bound].
  std::int64_t nonzero(std::int64_t bound) {
    const std::int64_t v = range(1, bound);
    return coin() ? v : -v;
  }

  QZ qz(std::int64_t max_den) {
    const std::int64_t den = range(1, max_den);
    return QZ(range(0, den - 1), den);
  }

  GroupRingZ group_ring(std::int64_t max_den = 24, std::int64_t max_terms = 4, std::int64_t max_coeff = 9) {
    GroupRingZ x;
    const std::int64_t terms = range(1, max_terms);
    for (std::int64_t i = 0; i < terms; ++i) x.add_term(qz(max_den), nonzero(max_coeff));
    return x;
  }

  GroupRingQ group_ring_q(std::int64_t max_den = 24, std::int64_t max_terms = 4, std::int64_t max_coeff = 9) {
    GroupRingQ x;
    const std::int64_t terms = range(1, max_terms);
    for (std::int64_t i = 0; i < terms; ++i) x.add_term(qz(max_den), Rational(nonzero(max_coeff), range(1, 6)));
    return x;
  }

  BCElem bc_word(std::int64_t max_ab = 6, std::int64_t max_den = 12, std::int64_t max_terms = 3) {
    return BCElem::word(range(1, max_ab), group_ring(max_den, max_terms), range(1, max_ab));
  }

  BCElem bc(std::int64_t words, std::int64_t max_ab = 6, std::int64_t max_den = 12) {
    BCElem u;
    for (std::int64_t i = 0; i < words; ++i) u += bc_word(max_ab, max_den, 2);
    return u;
  }

  OrbitSum orbit_sum(std::int64_t max_d = 12, std::int64_t max_terms = 3, std::int64_t max_mult = 3,
                     bool virtual_allowed = true) {
    OrbitSum x;
    const std::int64_t terms = range(1, max_terms);
    for (std::int64_t i = 0; i < terms; ++i)
      x.add_orbits(range(1, max_d), virtual_allowed ? nonzero(max_mult) : range(1, max_mult));
    return x;
  }

  BoldK0Elem bold_word(std::int64_t max_ab = 6, std::int64_t max_d = 8) {
    return BoldK0Elem::word(range(1, max_ab), orbit_sum(max_d, 2, 2), range(1, max_ab));
  }

  WittVector witt(const TruncationSet& t, std::int64_t bound = 3) {
    std::map<std::int64_t, Integer> c;
    for (std::int64_t d : t.elements()) c[d] = range(-bound, bound);
    return WittVector(t, c);
  }

  IntMatrix matrix(Eigen::Index n, std::int64_t bound) {
    IntMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = range(-bound, bound);
    return m;
  }

  /// Block-diagonal sum of companion matrices of Φ_d, d <= max_d, optionally
  /// conjugated by a unimodular matrix so that it is not block diagonal.
  IntMatrix cyclotomic_matrix(std::int64_t max_d = 12, std::int64_t max_factors = 2);

  /// One to three degrees, each a cyclotomic matrix.
  GradedEndo graded(std::int64_t max_d = 12);

 private:
  std::mt19937_64 rng_;
};

}  // namespace bost::verify
