#include "bost/verify/random.hpp"

namespace bost::verify {

IntMatrix Gen::cyclotomic_matrix(std::int64_t max_d, std::int64_t max_factors) {
  IntMatrix m(0, 0);
  const std::int64_t k = range(1, max_factors);
  for (std::int64_t i = 0; i < k; ++i) m = direct_sum(m, companion_matrix(cyclotomic_poly(range(1, max_d))));
  const Eigen::Index n = m.rows();
  if (n < 2 || !coin()) return m;
  // Conjugate by an elementary unimodular matrix I + c·E_ij.
  const auto i = static_cast<Eigen::Index>(range(0, n - 1));
  auto j = static_cast<Eigen::Index>(range(0, n - 2));
  if (j >= i) ++j;
  const Integer c = coin() ? 1 : -1;
  IntMatrix u = IntMatrix::Identity(n, n), u_inv = IntMatrix::Identity(n, n);
  u(i, j) = c;
  u_inv(i, j) = -c;
  return (u * m * u_inv).eval();
}

GradedEndo Gen::graded(std::int64_t max_d) {
  GradedEndo g;
  for (int k = 0; k <= 2; ++k)
    if (k == 0 || coin()) g.add_block(k, cyclotomic_matrix(max_d, 2));
  return g;
}

}  // namespace bost::verify
