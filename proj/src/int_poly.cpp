#include "bost/int_poly.hpp"

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>

#include "bost/errors.hpp"

namespace bost {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x_pow_minus_one(std::size_t n) {
  std::vector<Integer> v(n + 1);
  v[0] = -1;
  v[n] += 1;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Integer> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  std::vector<Integer> v(coeffs_);
  for (auto& c : v) c = -c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Integer> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.str();
    if (k >= 1) out += "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

IntPoly pow(const IntPoly& p, unsigned k) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = p;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& p, const IntPoly& divisor) {
  if (!divisor.is_monic()) throw InvalidInput("divmod_monic: divisor must be monic");
  if (p.degree() < divisor.degree()) return {IntPoly(), p};
  std::vector<Integer> rem = p.coeffs();
  const auto& dv = divisor.coeffs();
  const std::size_t dd = dv.size() - 1;
  std::vector<Integer> quot(rem.size() - dd);
  for (std::size_t k = rem.size(); k-- > dd;) {
    const Integer c = rem[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= c * dv[j];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

namespace {

std::mutex cyclo_mutex;
std::map<std::int64_t, IntPoly>& cyclo_cache() {
  static std::map<std::int64_t, IntPoly> cache;
  return cache;
}

// d is a candidate divisor index iff φ(d) <= bound; since φ(d) >= sqrt(d/2)
// every such d is at most 2·bound².
std::vector<std::int64_t> indices_with_phi_at_most(std::int64_t bound) {
  const std::int64_t limit = 2 * bound * bound + 2;
  std::vector<std::int64_t> phi(static_cast<std::size_t>(limit + 1));
  for (std::int64_t i = 0; i <= limit; ++i) phi[static_cast<std::size_t>(i)] = i;
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (phi[static_cast<std::size_t>(p)] != p) continue;
    for (std::int64_t m = p; m <= limit; m += p) phi[static_cast<std::size_t>(m)] -= phi[static_cast<std::size_t>(m)] / p;
  }
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= limit; ++d)
    if (phi[static_cast<std::size_t>(d)] <= bound) out.push_back(d);
  return out;
}

// Sound shortcut: returns true only when |p(ζ_d)| is provably nonzero, i.e.
// well above the floating-point error of Horner's rule. Exact division decides
// every other case.
bool certainly_not_a_root(const IntPoly& p, std::int64_t d) {
  double l1 = 0.0;
  for (const auto& c : p.coeffs()) l1 += std::abs(c.convert_to<double>());
  if (!std::isfinite(l1)) return false;
  const double angle = 2.0 * std::numbers::pi / static_cast<double>(d);
  const std::complex<double> z(std::cos(angle), std::sin(angle));
  std::complex<double> acc(0.0, 0.0);
  const auto& cs = p.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) acc = acc * z + cs[k].convert_to<double>();
  return std::abs(acc) > 1e-6 * l1;
}

}  // namespace

IntPoly cyclotomic_poly(std::int64_t d) {
  if (d < 1) throw InvalidInput("cyclotomic_poly: d must be positive");
  {
    std::lock_guard lock(cyclo_mutex);
    auto it = cyclo_cache().find(d);
    if (it != cyclo_cache().end()) return it->second;
  }
  IntPoly p = IntPoly::x_pow_minus_one(static_cast<std::size_t>(d));
  for (std::int64_t e : divisors(d)) {
    if (e == d) break;
    auto [q, r] = divmod_monic(p, cyclotomic_poly(e));
    if (!r.is_zero()) throw std::logic_error("cyclotomic_poly: inexact division");
    p = std::move(q);
  }
  std::lock_guard lock(cyclo_mutex);
  return cyclo_cache().emplace(d, std::move(p)).first->second;
}

IntPoly CycloFactorization::product() const {
  IntPoly p = IntPoly::monomial(1, zero_mult) * remainder;
  for (const auto& [d, m] : cyclo) p = p * pow(cyclotomic_poly(d), static_cast<unsigned>(m));
  return p;
}

CycloFactorization cyclotomic_factorize(const IntPoly& p) {
  if (p.is_zero()) throw InvalidInput("cyclotomic_factorize: zero polynomial");
  CycloFactorization out;
  const auto& cs = p.coeffs();
  while (cs[out.zero_mult] == 0) ++out.zero_mult;
  out.remainder = IntPoly(std::vector<Integer>(cs.begin() + static_cast<std::ptrdiff_t>(out.zero_mult), cs.end()));

  if (out.remainder.degree() < 1) return out;
  for (std::int64_t d : indices_with_phi_at_most(out.remainder.degree())) {
    if (euler_phi(d) > out.remainder.degree()) continue;
    while (out.remainder.degree() >= 1 && !certainly_not_a_root(out.remainder, d)) {
      auto [q, r] = divmod_monic(out.remainder, cyclotomic_poly(d));
      if (!r.is_zero()) break;
      out.remainder = std::move(q);
      ++out.cyclo[d];
    }
    if (out.remainder.degree() < 1) break;
  }
  return out;
}

}  // namespace bost
