#include "bost/graded_endo.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <numeric>

#include "bost/errors.hpp"

namespace bost {

IntMatrix matrix_power(const IntMatrix& m, std::uint64_t n) {
  if (m.rows() != m.cols()) throw InvalidInput("matrix_power: matrix must be square");
  IntMatrix result = IntMatrix::Identity(m.rows(), m.cols());
  IntMatrix base = m;
  for (; n; n >>= 1) {
    if (n & 1) result = (result * base).eval();
    if (n > 1) base = (base * base).eval();
  }
  return result;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out = IntMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

IntMatrix companion_matrix(const IntPoly& p) {
  if (!p.is_monic()) throw InvalidInput("companion_matrix: polynomial must be monic");
  const Eigen::Index k = p.degree();
  IntMatrix c = IntMatrix::Zero(k, k);
  for (Eigen::Index i = 1; i < k; ++i) c(i, i - 1) = 1;
  for (Eigen::Index i = 0; i < k; ++i) c(i, k - 1) = -p[static_cast<std::size_t>(i)];
  return c;
}

IntMatrix verschiebung_matrix(std::int64_t n, const IntMatrix& m) {
  if (n < 1) throw InvalidInput("verschiebung_matrix: n must be positive");
  if (m.rows() != m.cols()) throw InvalidInput("verschiebung_matrix: matrix must be square");
  if (n == 1) return m;
  const Eigen::Index s = m.rows();
  IntMatrix out = IntMatrix::Zero(n * s, n * s);
  for (Eigen::Index i = 0; i + 1 < n; ++i) out.block((i + 1) * s, i * s, s, s) = IntMatrix::Identity(s, s);
  out.block(0, (n - 1) * s, s, s) = m;
  return out;
}

IntMatrix cyclic_permutation_matrix(std::int64_t n) {
  return verschiebung_matrix(n, IntMatrix::Identity(1, 1));
}

GradedEndo GradedEndo::single(int degree, IntMatrix m) {
  GradedEndo g;
  g.add_block(degree, std::move(m));
  return g;
}

GradedEndo GradedEndo::point() { return single(0, IntMatrix::Identity(1, 1)); }

GradedEndo GradedEndo::cyclic(std::int64_t n) { return single(0, cyclic_permutation_matrix(n)); }

void GradedEndo::add_block(int degree, IntMatrix m) {
  if (degree < 0) throw InvalidInput("degree must be non-negative");
  if (m.rows() != m.cols()) throw InvalidInput("block in degree " + std::to_string(degree) + " is not square");
  if (blocks_.count(degree)) throw InvalidInput("degree " + std::to_string(degree) + " appears twice");
  if (m.rows() == 0) return;
  blocks_.emplace(degree, std::move(m));
}

Eigen::Index GradedEndo::dimension() const {
  Eigen::Index n = 0;
  for (const auto& [k, m] : blocks_) n += m.rows();
  return n;
}

bool operator==(const GradedEndo& a, const GradedEndo& b) {
  if (a.blocks_.size() != b.blocks_.size()) return false;
  for (auto i = a.blocks_.begin(), j = b.blocks_.begin(); i != a.blocks_.end(); ++i, ++j) {
    if (i->first != j->first) return false;
    if (i->second.rows() != j->second.rows() || i->second != j->second) return false;
  }
  return true;
}

QuasiUnipotenceReport quasi_unipotent_check(const GradedEndo& g, bool allow_zero) {
  QuasiUnipotenceReport report;
  for (const auto& [k, m] : g.blocks()) {
    CycloFactorization f = cyclotomic_factorize(charpoly(m));
    if (!(allow_zero ? f.quasi_idempotent() : f.quasi_unipotent())) report.ok = false;
    report.per_degree.emplace(k, std::move(f));
  }
  return report;
}

GroupRingZ primitive_roots(std::int64_t d) {
  if (d < 1) throw InvalidInput("primitive_roots: d must be positive");
  GroupRingZ out;
  for (std::int64_t j = 0; j < d; ++j)
    if (std::gcd(j, d) == 1) out.add_term(QZ(j, d), 1);
  return out;
}

GroupRingZ spectrum_euler(const GradedEndo& g, bool signed_mode) {
  const QuasiUnipotenceReport report = quasi_unipotent_check(g, false);
  GroupRingZ out;
  for (const auto& [k, f] : report.per_degree) {
    if (!f.quasi_unipotent())
      throw DomainError("spectrum_euler: action in degree " + std::to_string(k) + " is not quasi-unipotent");
    const Integer w = (signed_mode && k % 2 != 0) ? -1 : 1;
    for (const auto& [d, mult] : f.cyclo) out += (w * Integer(mult)) * primitive_roots(d);
  }
  return out;
}

GradedEndo sigma(std::int64_t n, const GradedEndo& g) {
  if (n < 1) throw InvalidInput("sigma: n must be positive");
  GradedEndo out;
  for (const auto& [k, m] : g.blocks()) out.add_block(k, matrix_power(m, static_cast<std::uint64_t>(n)));
  return out;
}

GradedEndo rho_tilde(std::int64_t n, const GradedEndo& g) {
  if (n < 1) throw InvalidInput("rho_tilde: n must be positive");
  GradedEndo out;
  for (const auto& [k, m] : g.blocks()) out.add_block(k, verschiebung_matrix(n, m));
  return out;
}

GradedEndo product(const GradedEndo& g, const GradedEndo& h) {
  std::map<int, IntMatrix> acc;
  for (const auto& [k, a] : g.blocks())
    for (const auto& [l, b] : h.blocks()) {
      IntMatrix t = kronecker(a, b);
      auto [it, inserted] = acc.try_emplace(k + l, t);
      if (!inserted) it->second = direct_sum(it->second, t);
    }
  GradedEndo out;
  for (auto& [k, m] : acc) out.add_block(k, std::move(m));
  return out;
}

GradedEndo disjoint_union(const GradedEndo& g, const GradedEndo& h) {
  std::map<int, IntMatrix> acc;
  for (const auto& [k, a] : g.blocks()) acc.emplace(k, a);
  for (const auto& [k, b] : h.blocks()) {
    auto [it, inserted] = acc.try_emplace(k, b);
    if (!inserted) it->second = direct_sum(it->second, b);
  }
  GradedEndo out;
  for (auto& [k, m] : acc) out.add_block(k, std::move(m));
  return out;
}

GradedEndo copies(std::int64_t n, const GradedEndo& g) {
  if (n < 0) throw InvalidInput("copies: n must be non-negative");
  GradedEndo out;
  for (std::int64_t i = 0; i < n; ++i) out = disjoint_union(out, g);
  return out;
}

}  // namespace bost
