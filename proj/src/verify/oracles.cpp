#include "bost/verify/oracles.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "bost/errors.hpp"

namespace bost::verify {

PermutationSet PermutationSet::from_orbits(const OrbitSum& x) {
  PermutationSet s;
  for (const auto& [d, m] : x.orbits()) {
    if (m < 0) throw InvalidInput("from_orbits: virtual orbit sum");
    for (Integer k = 0; k < m; ++k) {
      const std::size_t base = s.perm.size();
      for (std::int64_t i = 0; i < d; ++i) s.perm.push_back(base + static_cast<std::size_t>((i + 1) % d));
    }
  }
  return s;
}

OrbitSum PermutationSet::cycle_type() const {
  OrbitSum out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::int64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    out.add_orbits(len, 1);
  }
  return out;
}

std::int64_t PermutationSet::fixed_by_power(std::int64_t m) const {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    std::size_t j = i;
    for (std::int64_t k = 0; k < m; ++k) j = perm[j];
    if (j == i) ++count;
  }
  return count;
}

PermutationSet diagonal_product(const PermutationSet& x, const PermutationSet& y) {
  PermutationSet out;
  const std::size_t ny = y.size();
  out.perm.resize(x.size() * ny);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < ny; ++j) out.perm[i * ny + j] = x.perm[i] * ny + y.perm[j];
  return out;
}

PermutationSet power(const PermutationSet& x, std::int64_t n) {
  PermutationSet out;
  out.perm.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t j = i;
    for (std::int64_t k = 0; k < n; ++k) j = x.perm[j];
    out.perm[i] = j;
  }
  return out;
}

PermutationSet cyclic_extension(const PermutationSet& x, std::int64_t n) {
  PermutationSet out;
  const auto un = static_cast<std::size_t>(n);
  out.perm.resize(x.size() * un);
  for (std::size_t p = 0; p < x.size(); ++p)
    for (std::size_t i = 0; i < un; ++i)
      out.perm[p * un + i] = (i + 1 < un) ? p * un + i + 1 : x.perm[p] * un;
  return out;
}

GroupRingZ permutation_character(const PermutationSet& x) {
  const OrbitSum cycles = x.cycle_type();
  std::int64_t level = 1;
  for (const auto& [len, m] : cycles.orbits()) level = std::lcm(level, len);
  GroupRingZ out;
  for (std::int64_t k = 0; k < level; ++k) {
    const QZ s(k, level);
    Integer c = 0;
    for (const auto& [len, m] : cycles.orbits())
      if (s.times(len).is_zero()) c += m;
    out.add_term(s, c);
  }
  return out;
}

GroupRingZ rho_tilde_by_search(std::int64_t n, const GroupRingZ& x) {
  GroupRingZ out;
  for (const auto& [r, c] : x.terms()) {
    const std::int64_t big = n * r.den();
    for (std::int64_t k = 0; k < big; ++k) {
      const QZ s(k, big);
      if (s.times(n) == r) out.add_term(s, c);
    }
  }
  return out;
}

IntPoly cyclotomic_by_moebius(std::int64_t d) {
  IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1);
  for (std::int64_t e : divisors(d)) {
    const int mu = moebius(d / e);
    if (mu == 1) num = num * IntPoly::x_pow_minus_one(static_cast<std::size_t>(e));
    if (mu == -1) den = den * IntPoly::x_pow_minus_one(static_cast<std::size_t>(e));
  }
  // den is ±monic; normalise to monic before dividing.
  if (den.leading() < 0) {
    den = -den;
    num = -num;
  }
  return divmod_monic(num, den).first;
}

IntPoly charpoly_faddeev(const IntMatrix& m) {
  using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = m.rows();
  RatMatrix a = m.cast<Rational>();
  RatMatrix mk = RatMatrix::Zero(n, n);
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1;
  for (Eigen::Index k = 1; k <= n; ++k) {
    RatMatrix next = a * mk;
    for (Eigen::Index i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    mk = next;
    RatMatrix am = a * mk;
    Rational tr = 0;
    for (Eigen::Index i = 0; i < n; ++i) tr += am(i, i);
    c[static_cast<std::size_t>(n - k)] = -tr / Rational(k);
  }
  std::vector<Integer> out;
  for (const auto& q : c) {
    if (!is_integral(q)) throw std::logic_error("charpoly_faddeev: non-integral coefficient");
    out.emplace_back(numerator(q));
  }
  return IntPoly(std::move(out));
}

std::complex<long double> polylog_direct(double beta, const QZ& r, std::int64_t terms) {
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  long double re = 0, im = 0, cre = 0, cim = 0;
  auto kahan = [](long double& sum, long double& comp, long double v) {
    const long double y = v - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  };
  for (std::int64_t n = terms; n >= 1; --n) {
    const long double w = std::pow(static_cast<long double>(n), -static_cast<long double>(beta));
    const long double angle = two_pi * static_cast<long double>(static_cast<__int128>(r.num()) * n % r.den()) / r.den();
    kahan(re, cre, w * std::cos(angle));
    kahan(im, cim, w * std::sin(angle));
  }
  return {re, im};
}

Ell2 act(const BCElem& u, const Ell2& v) {
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  Ell2 out;
  for (const auto& [key, x] : u.terms()) {
    const auto [a, b] = key;
    for (const auto& [m, z] : v) {
      if (m % b != 0) continue;
      const std::int64_t k = m / b;
      std::complex<long double> phase = 0;
      for (const auto& [r, c] : x.terms()) {
        const long double angle =
            two_pi * static_cast<long double>(static_cast<__int128>(r.num()) * k % r.den()) / r.den();
        phase += c.convert_to<long double>() * std::polar(1.0L, angle);
      }
      out[a * k] += static_cast<long double>(a) * phase * z;
    }
  }
  return out;
}

long double representation_defect(const BCElem& u, const BCElem& v, const BCElem& uv, std::int64_t range) {
  long double worst = 0;
  for (std::int64_t m = 1; m <= range; ++m) {
    Ell2 e;
    e[m] = 1.0L;
    const Ell2 lhs = act(uv, e);
    const Ell2 rhs = act(u, act(v, e));
    std::map<std::int64_t, std::complex<long double>> diff(lhs.begin(), lhs.end());
    for (const auto& [k, z] : rhs) diff[k] -= z;
    for (const auto& [k, z] : diff) worst = std::max(worst, std::abs(z));
  }
  return worst;
}

}  // namespace bost::verify
