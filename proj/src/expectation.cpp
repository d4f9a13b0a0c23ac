#include "bost/expectation.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "bost/errors.hpp"

namespace bost {

namespace {

// B_{2j} / (2j)! for j = 1..5; the last entry bounds the first omitted term.
constexpr std::array<long double, 5> kBernoulliOverFactorial = {
    1.0L / 12.0L, -1.0L / 720.0L, 1.0L / 30240.0L, -1.0L / 1209600.0L, 1.0L / 47900160.0L};

void require_beta(double beta) {
  if (!(beta > 1.0) || !std::isfinite(beta))
    throw DomainError("beta must be a finite real number greater than 1");
}

/// s(s+1)···(s+k−1)
long double rising(long double s, int k) {
  long double r = 1;
  for (int i = 0; i < k; ++i) r *= s + i;
  return r;
}

}  // namespace

double hurwitz_zeta(double beta, double a) {
  require_beta(beta);
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
  const long double s = beta;

  auto omitted = [&](long double x) {
    return std::fabs(kBernoulliOverFactorial[4] * rising(s, 9) * std::pow(x, -s - 9));
  };
  std::int64_t n = 8;
  while (omitted(n + a) >= 1e-14L) n += n / 2;

  long double sum = 0, c = 0;  // Kahan
  for (std::int64_t k = n - 1; k >= 0; --k) {
    const long double y = std::pow(static_cast<long double>(k) + a, -s) - c;
    const long double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  const long double x = n + a;
  long double tail = std::pow(x, 1 - s) / (s - 1) + std::pow(x, -s) / 2;
  for (int j = 1; j <= 4; ++j)
    tail += kBernoulliOverFactorial[static_cast<std::size_t>(j - 1)] * rising(s, 2 * j - 1) *
            std::pow(x, -s - 2 * j + 1);
  return static_cast<double>(sum + tail);
}

Complex polylog_at_root(double beta, const QZ& r) {
  require_beta(beta);
  const std::int64_t q = r.den();
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  long double re = 0, im = 0;
  for (std::int64_t m = 1; m <= q; ++m) {
    // ζ^m with the exponent reduced mod q for accuracy.
    const long double angle = two_pi * static_cast<long double>(static_cast<__int128>(r.num()) * m % q) / q;
    const long double h = hurwitz_zeta(beta, static_cast<double>(m) / static_cast<double>(q));
    re += std::cos(angle) * h;
    im += std::sin(angle) * h;
  }
  const long double scale = std::pow(static_cast<long double>(q), -static_cast<long double>(beta));
  return {static_cast<double>(re * scale), static_cast<double>(im * scale)};
}

namespace {

template <class Scalar>
Complex expectation_impl(const GroupRing<Scalar>& x, double beta) {
  require_beta(beta);
  Complex acc = 0;
  for (const auto& [r, c] : x.terms()) acc += c.template convert_to<double>() * polylog_at_root(beta, r);
  return acc / riemann_zeta(beta);
}

}  // namespace

Complex expectation(const GroupRingZ& x, double beta) { return expectation_impl(x, beta); }
Complex expectation(const GroupRingQ& x, double beta) { return expectation_impl(x, beta); }

Complex expectation(const BCElem& u, double beta) {
  require_beta(beta);
  return expectation(u.coeff(1, 1), beta);
}

Complex expectation_class(const OrbitSum& x, double beta) { return expectation(chi_hat_z(x), beta); }

std::map<int, Complex> HodgeExpectation::weight_polynomial() const {
  std::map<int, Complex> w;
  for (const auto& [pq, c] : coefficients) w[pq.first + pq.second] += c;
  return w;
}

Complex HodgeExpectation::evaluate(Complex u, Complex v) const {
  Complex acc = 0;
  for (const auto& [pq, c] : coefficients) acc += c * std::pow(u, pq.first) * std::pow(v, pq.second);
  return acc;
}

HodgeExpectation hodge_expectation(const HodgeTable& t, double beta) {
  require_beta(beta);
  HodgeExpectation out;
  for (const auto& [pq, x] : t) {
    if (pq.first < 0 || pq.second < 0) throw InvalidInput("Hodge indices must be non-negative");
    out.coefficients.emplace(pq, expectation(x, beta));
  }
  return out;
}

std::string format_real(double x) {
  if (std::fabs(x) < 5e-13) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

std::string format_complex(Complex z) {
  std::string out = format_real(z.real());
  if (std::fabs(z.imag()) < 5e-13) return out + "+0i";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.12f", z.imag());
  return out + buf + "i";
}

}  // namespace bost
