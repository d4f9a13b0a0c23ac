#include <cmath>
#include <numbers>

#include "bost/errors.hpp"
#include "bost/json_io.hpp"
#include "bost/verify/oracles.hpp"
#include "bost/verify/random.hpp"
#include "bost/verify/suites.hpp"

namespace bost::verify {

namespace {

constexpr double kPi = std::numbers::pi;

std::string near(Complex got, Complex want) {
  return "got " + format_complex(got) + ", want " + format_complex(want);
}

GroupRingZ e(std::int64_t num, std::int64_t den, long c = 1) { return GroupRingZ::basis(QZ(num, den), c); }

/// Fractions with denominator at most max_den.
std::vector<QZ> fractions(std::int64_t max_den) {
  std::vector<QZ> out;
  for (std::int64_t q = 1; q <= max_den; ++q)
    for (std::int64_t p = 0; p < q; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

void zeta_group(Recorder& rec, std::uint64_t) {
  rec.expect("ζ(2) = π²/6", std::abs(riemann_zeta(2) - kPi * kPi / 6) < 1e-10, format_real(riemann_zeta(2)));
  rec.expect("ζ(4) = π⁴/90", std::abs(riemann_zeta(4) - std::pow(kPi, 4) / 90) < 1e-10);
  rec.expect("ζ(2, 1/2) = π²/2", std::abs(hurwitz_zeta(2, 0.5) - kPi * kPi / 2) < 1e-10);
  rec.expect("ζ(3) = 1.2020569031595942", std::abs(riemann_zeta(3) - 1.2020569031595942) < 1e-10);
  for (double beta : {1.1, 1.5, 2.5, 7.0})
    for (double a : {0.05, 0.2, 1.0 / 3}) {
      double sum = 0;
      for (int k = 0; k < 3; ++k) sum += hurwitz_zeta(beta, a + k / 3.0);
      rec.expect("Σ_k ζ(β, a + k/3) = 3^β ζ(β, 3a)",
                 std::abs(sum - std::pow(3.0, beta) * hurwitz_zeta(beta, 3 * a)) < 1e-9 * std::max(1.0, sum),
                 "β = " + format_real(beta) + ", a = " + format_real(a));
    }
  for (double beta : {1.5, 2.0, 3.0}) {
    const double dup = hurwitz_zeta(beta, 0.5) + hurwitz_zeta(beta, 1.0);
    rec.expect("ζ(β, 1/2) + ζ(β) = 2^β ζ(β)", std::abs(dup - std::pow(2.0, beta) * riemann_zeta(beta)) < 1e-9,
               format_real(beta));
  }
  for (double beta : {1.0, 0.5, -2.0, std::nan("")}) {
    bool threw = false;
    try {
      riemann_zeta(beta);
    } catch (const DomainError&) {
      threw = true;
    }
    rec.expect("β <= 1 is a domain error", threw, format_real(beta));
  }
  bool threw = false;
  try {
    hurwitz_zeta(2, 0.0);
  } catch (const DomainError&) {
    threw = true;
  }
  rec.expect("a = 0 is a domain error", threw);
}

void polylog_group(Recorder& rec, std::uint64_t) {
  for (const QZ& r : {QZ(0, 1), QZ(1, 2), QZ(1, 3), QZ(1, 4), QZ(1, 5)}) {
    const Complex got = polylog_at_root(2, r);
    const auto want = polylog_direct(2, r, 1000000);
    const double err = static_cast<double>(std::abs(std::complex<long double>(got.real(), got.imag()) - want));
    rec.expect("Li₂ at a root of unity matches 10⁶ direct terms", err < 1e-6,
               r.str() + ": error " + std::to_string(err));
  }
  for (double beta : {1.5, 2.0, 3.0})
    for (const QZ& r : fractions(12)) {
      const Complex a = polylog_at_root(beta, r), b = polylog_at_root(beta, -r);
      rec.expect("Li_β(ζ_r) = conj Li_β(ζ_{1−r})", std::abs(a - std::conj(b)) < 1e-12, r.str());
    }
  rec.expect("Li₂(−1) = −π²/12", std::abs(polylog_at_root(2, QZ(1, 2)) + kPi * kPi / 12) < 1e-10);
  rec.expect("Li₂(i) = −π²/48 + G·i",
             std::abs(polylog_at_root(2, QZ(1, 4)) - Complex(-kPi * kPi / 48, 0.915965594177219015)) < 1e-10);
}

void distribution_group(Recorder& rec, std::uint64_t) {
  for (std::int64_t n : {2, 3})
    for (double beta : {1.5, 2.0, 3.0})
      for (const QZ& r : fractions(12)) {
        Complex lhs = 0;
        for (std::int64_t k = 0; k < n; ++k) lhs += polylog_at_root(beta, QZ(r.num() + k * r.den(), n * r.den()));
        const Complex rhs = std::pow(static_cast<double>(n), 1 - beta) * polylog_at_root(beta, r);
        rec.expect("Σ_{nr'=r} Li_β(ζ_{r'}) = n^{1−β} Li_β(ζ_r)", std::abs(lhs - rhs) < 1e-8,
                   "n = " + std::to_string(n) + ", r = " + r.str() + ": " + near(lhs, rhs));
      }
  for (std::int64_t n = 1; n <= 12; ++n)
    for (double beta : {1.5, 2.0, 4.0}) {
      const Complex got = expectation(division_sum(n), beta);
      const double want = std::pow(static_cast<double>(n), 1 - beta);
      rec.expect("⟨Σ_{ns=0} e(s)⟩_β = n^{1−β}", std::abs(got - want) < 1e-9, "n = " + std::to_string(n));
      rec.expect("⟨π_n⟩_β = n^{−β}", std::abs(expectation(pi(n), beta) - want / static_cast<double>(n)) < 1e-9);
    }
}

void group_ring_group(Recorder& rec, std::uint64_t seed) {
  rec.expect("⟨e(0)⟩_β = 1", std::abs(expectation(GroupRingZ::one(), 2.5) - 1.0) < 1e-12);
  rec.expect("⟨e(1/2)⟩₂ = −1/2", std::abs(expectation(e(1, 2), 2) + 0.5) < 1e-9,
             format_complex(expectation(e(1, 2), 2)));
  rec.expect("⟨e(0) + e(1/2)⟩₂ = 1/2", std::abs(expectation(e(0, 1) + e(1, 2), 2) - 0.5) < 1e-9);
  Gen gen(seed ^ 0xe8);
  for (int t = 0; t < 100; ++t) {
    const GroupRingZ x = gen.group_ring(12), y = gen.group_ring(12);
    const double beta = 1.5 + static_cast<double>(gen.range(0, 20)) / 4;
    rec.expect("expectation is additive",
               std::abs(expectation(x + y, beta) - expectation(x, beta) - expectation(y, beta)) < 1e-9);
    rec.expect("rational and integral expectations agree",
               std::abs(expectation(to_rational(x), beta) - expectation(x, beta)) < 1e-12);
    rec.expect("the expectation of a Galois-stable element is real",
               std::abs(expectation(chi_hat_z(gen.orbit_sum()), beta).imag()) < 1e-12);
  }
}

Complex trace_oracle(const BCElem& u, double beta, std::int64_t terms) {
  std::complex<long double> sum = 0;
  for (std::int64_t m = 1; m <= terms; ++m) {
    Ell2 basis;
    basis[m] = 1.0L;
    const Ell2 image = act(u, basis);
    const auto it = image.find(m);
    if (it != image.end()) sum += it->second * std::pow(static_cast<long double>(m), -static_cast<long double>(beta));
  }
  const auto z = sum / static_cast<long double>(riemann_zeta(beta));
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

void bc_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0xe9);
  for (int t = 0; t < 60; ++t) {
    const BCElem u = gen.bc(3, 4, 6);
    const Complex got = expectation(u, 4.0), want = trace_oracle(u, 4.0, 600);
    rec.expect("BC expectation matches the weighted trace on ℓ²(N)", std::abs(got - want) < 1e-5,
               to_json(u).dump() + ": " + near(got, want));
  }
  rec.expect("⟨μ̃_2 μ*_2⟩_β = 2^{1−β}",
             std::abs(expectation(BCElem::mu_tilde(2) * BCElem::mu_star(2), 3.0) - std::pow(2.0, -2.0)) < 1e-9);
  rec.expect("off-diagonal words are traceless", std::abs(expectation(BCElem::mu_tilde(2), 2.0)) == 0.0 &&
                                                    std::abs(expectation(BCElem::mu_star(3), 2.0)) == 0.0);
}

void class_group(Recorder& rec, std::uint64_t) {
  rec.expect("⟨[Z/1]⟩_β = 1", std::abs(expectation_class(OrbitSum::one(), 3.0) - 1.0) < 1e-12);
  rec.expect("⟨[Z/2]⟩₂ = 1/2", std::abs(expectation_class(OrbitSum::orbit(2), 2.0) - 0.5) < 1e-9);
  const double z2 = riemann_zeta(2);
  const Complex want3 = (z2 + 2 * polylog_at_root(2, QZ(1, 3)).real()) / z2;
  rec.expect("⟨[Z/3]⟩₂ = (ζ(2) + 2 Re Li₂(ζ₃))/ζ(2)",
             std::abs(expectation_class(OrbitSum::orbit(3), 2.0) - want3) < 1e-12 &&
                 std::abs(want3 - 1.0 / 3.0) < 1e-9);
  for (std::int64_t d = 1; d <= 12; ++d) {
    const Complex got = expectation_class(OrbitSum::orbit(d), 2.5);
    rec.expect("⟨[Z/d]⟩_β = d^{1−β}", std::abs(got - std::pow(static_cast<double>(d), -1.5)) < 1e-9,
               "d = " + std::to_string(d));
    Complex combination = 0;
    const GroupRingZ chi = chi_hat_z(OrbitSum::orbit(d));
    for (const auto& [r, c] : chi.terms())
      combination += static_cast<double>(to_int64(c)) * polylog_at_root(2.5, r);
    rec.expect("ζ(β)·⟨x⟩_β is an integer combination of Li_β at roots of unity",
               std::abs(riemann_zeta(2.5) * got - combination) < 1e-9);
  }
}

void hodge_group(Recorder& rec, std::uint64_t seed) {
  const HodgeExpectation h0 = hodge_expectation({{{0, 0}, e(0, 1)}}, 2.0);
  rec.expect("{(0,0) ↦ e(0)} is the constant 1",
             h0.coefficients.size() == 1 && std::abs(h0.coefficients.at({0, 0}) - 1.0) < 1e-12);
  const HodgeExpectation h1 = hodge_expectation({{{1, 1}, e(1, 2)}}, 2.0);
  rec.expect("{(1,1) ↦ e(1/2)} at β = 2 is −uv/2",
             h1.coefficients.size() == 1 && std::abs(h1.coefficients.at({1, 1}) + 0.5) < 1e-9 &&
                 std::abs(h1.evaluate(2.0, 3.0) + 3.0) < 1e-8);
  const HodgeExpectation h2 = hodge_expectation({{{0, 0}, e(0, 1)}, {{1, 1}, e(1, 2)}}, 2.0);
  rec.expect("w = 1 evaluation of {(0,0) ↦ e(0), (1,1) ↦ e(1/2)} is 1/2", std::abs(h2.at_one() - 0.5) < 1e-9);
  rec.expect("weight polynomial collects u^p v^q into w^{p+q}",
             h2.weight_polynomial().size() == 2 && std::abs(h2.weight_polynomial().at(2) + 0.5) < 1e-9);
  Gen gen(seed ^ 0x40d6);
  for (int t = 0; t < 100; ++t) {
    HodgeTable table;
    GroupRingZ total;
    const std::int64_t entries = gen.range(1, 4);
    for (std::int64_t i = 0; i < entries; ++i) {
      const GroupRingZ x = gen.group_ring(12);
      table[{static_cast<int>(gen.range(0, 3)), static_cast<int>(gen.range(0, 3))}] += x;
      total += x;
    }
    const double beta = 2.0 + static_cast<double>(gen.range(0, 8)) / 4;
    rec.expect("evaluation at u = v = 1 is the expectation of the total class",
               std::abs(hodge_expectation(table, beta).at_one() - expectation(total, beta)) < 1e-9);
  }
}

void format_group(Recorder& rec, std::uint64_t) {
  rec.expect("1 prints as 1.000000000000+0i", format_complex(1.0) == "1.000000000000+0i", format_complex(1.0));
  rec.expect("−1/2 prints as -0.500000000000+0i", format_complex(-0.5) == "-0.500000000000+0i");
  rec.expect("imaginary parts keep their sign",
             format_complex(Complex(0.25, -0.125)) == "0.250000000000-0.125000000000i");
  rec.expect("rounding noise prints as zero", format_complex(Complex(-1e-15, 1e-15)) == "0.000000000000+0i");
}

}  // namespace

void register_expectation(std::vector<Group>& out) {
  out.push_back({"expectation", "zeta", zeta_group});
  out.push_back({"expectation", "polylog", polylog_group});
  out.push_back({"expectation", "distribution", distribution_group});
  out.push_back({"expectation", "group-ring", group_ring_group});
  out.push_back({"expectation", "bc", bc_group});
  out.push_back({"expectation", "classes", class_group});
  out.push_back({"expectation", "hodge", hodge_group});
  out.push_back({"expectation", "format", format_group});
}

}  // namespace bost::verify
