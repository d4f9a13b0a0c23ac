#include <boost/multiprecision/miller_rabin.hpp>

#include <mutex>
#include <random>
#include <vector>

#include "bost/graded_endo.hpp"

namespace bost {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

/// Primes just below 2^62, found once and shared.
u64 nth_prime(std::size_t k) {
  static std::mutex mutex;
  static std::vector<u64> primes;
  static u64 next = (u64{1} << 62) - 1;
  std::lock_guard lock(mutex);
  std::mt19937_64 rng(0x5eed);
  while (primes.size() <= k) {
    if (boost::multiprecision::miller_rabin_test(next, 32, rng)) primes.push_back(next);
    next -= 2;
  }
  return primes[k];
}

u64 reduce(const Integer& x, u64 p) {
  Integer r = x % p;
  if (r < 0) r += p;
  return r.convert_to<u64>();
}

}  // namespace

IntPoly charpoly_mod_p(const IntMatrix& m, std::uint64_t p) {
  const Eigen::Index n = m.rows();
  std::vector<u64> a(static_cast<std::size_t>(n * n));
  auto at = [&](Eigen::Index i, Eigen::Index j) -> u64& { return a[static_cast<std::size_t>(i * n + j)]; };
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) at(i, j) = reduce(m(i, j), p);

  // Similarity reduction to upper Hessenberg form.
  for (Eigen::Index k = 0; k + 2 <= n; ++k) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = k + 1; i < n; ++i)
      if (at(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != k + 1) {
      for (Eigen::Index j = 0; j < n; ++j) std::swap(at(piv, j), at(k + 1, j));
      for (Eigen::Index i = 0; i < n; ++i) std::swap(at(i, piv), at(i, k + 1));
    }
    const u64 inv = invmod(at(k + 1, k), p);
    for (Eigen::Index i = k + 2; i < n; ++i) {
      const u64 f = mulmod(at(i, k), inv, p);
      if (f == 0) continue;
      for (Eigen::Index j = 0; j < n; ++j) at(i, j) = submod(at(i, j), mulmod(f, at(k + 1, j), p), p);
      for (Eigen::Index r = 0; r < n; ++r) at(r, k + 1) = addmod(at(r, k + 1), mulmod(f, at(r, i), p), p);
    }
  }

  // p_{k+1}(t) = (t − h_kk) p_k(t) − Σ_{i<k} h_ik (Π_{j=i+1}^{k} h_{j,j−1}) p_i(t).
  std::vector<std::vector<u64>> polys(static_cast<std::size_t>(n + 1));
  polys[0] = {1};
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto& prev = polys[static_cast<std::size_t>(k)];
    std::vector<u64> next(prev.size() + 1, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i + 1] = addmod(next[i + 1], prev[i], p);
      next[i] = submod(next[i], mulmod(at(k, k), prev[i], p), p);
    }
    u64 prod = 1;
    for (Eigen::Index i = k - 1; i >= 0; --i) {
      prod = mulmod(prod, at(i + 1, i), p);
      if (prod == 0) break;
      const u64 f = mulmod(at(i, k), prod, p);
      const auto& q = polys[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < q.size(); ++j) next[j] = submod(next[j], mulmod(f, q[j], p), p);
    }
    polys[static_cast<std::size_t>(k + 1)] = std::move(next);
  }
  std::vector<Integer> c;
  for (u64 v : polys.back()) c.emplace_back(v);
  return IntPoly(std::move(c));
}

IntPoly charpoly(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("charpoly: matrix must be square");
  const Eigen::Index n = m.rows();
  if (n == 0) return IntPoly::constant(1);

  // Every coefficient is a signed sum of at most C(n,k) principal k-minors,
  // each bounded by R^k, so |c| <= (1 + R)^n.
  Integer r = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    Integer s = 0;
    for (Eigen::Index j = 0; j < n; ++j) s += abs(m(i, j));
    if (s > r) r = s;
  }
  const Integer bound = 2 * boost::multiprecision::pow(Integer(1 + r), static_cast<unsigned>(n)) + 1;

  std::vector<Integer> acc(static_cast<std::size_t>(n + 1), 0);
  Integer modulus = 1;
  for (std::size_t k = 0; modulus <= bound; ++k) {
    const u64 p = nth_prime(k);
    const IntPoly pp = charpoly_mod_p(m, p);
    const u64 minv = invmod(reduce(modulus, p), p);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      const u64 diff = submod(reduce(pp[i], p), reduce(acc[i], p), p);
      acc[i] += modulus * Integer(mulmod(diff, minv, p));
    }
    modulus *= p;
  }
  const Integer half = modulus / 2;
  for (auto& c : acc)
    if (c > half) c -= modulus;
  return IntPoly(std::move(acc));
}

}  // namespace bost
