#include "helpers.hpp"

#include <cmath>
#include <numbers>

#include "bost/errors.hpp"
#include "bost/expectation.hpp"

using namespace bost;
using bost::test::e;

TEST_SUITE("expectation") {
  constexpr double kPi = std::numbers::pi;

  TEST_CASE("zeta values") {
    CHECK(std::abs(riemann_zeta(2) - kPi * kPi / 6) < 1e-12);
    CHECK(std::abs(riemann_zeta(6) - std::pow(kPi, 6) / 945) < 1e-12);
    CHECK(std::abs(hurwitz_zeta(2, 0.25) - (kPi * kPi + 8 * 0.915965594177219015)) < 1e-10);
    CHECK(std::abs(riemann_zeta(1.01) - 100.577943338497) < 1e-8);
    CHECK_THROWS_AS(riemann_zeta(1), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(2, 1.5), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(INFINITY, 0.5), DomainError);
  }

  TEST_CASE("polylogarithm at roots of unity") {
    CHECK(std::abs(polylog_at_root(2, QZ()) - riemann_zeta(2)) < 1e-14);
    CHECK(std::abs(polylog_at_root(2, QZ(1, 2)) + kPi * kPi / 12) < 1e-12);
    CHECK(std::abs(polylog_at_root(3, QZ(1, 2)) + 0.75 * riemann_zeta(3)) < 1e-12);
    const Complex li = polylog_at_root(2, QZ(1, 3));
    CHECK(std::abs(li.real() + kPi * kPi / 18) < 1e-12);
  }

  TEST_CASE("Gibbs expectations") {
    CHECK(std::abs(expectation(GroupRingZ::one(), 1.7) - 1.0) < 1e-12);
    CHECK(std::abs(expectation(e(1, 2), 2) + 0.5) < 1e-12);
    CHECK(std::abs(expectation(e(0, 1) + e(1, 2), 2) - 0.5) < 1e-12);
    CHECK(std::abs(expectation(bost::pi(3), 2) - 1.0 / 9) < 1e-12);
    CHECK_THROWS_AS(expectation(e(1, 2), 0.5), DomainError);
  }

  TEST_CASE("BC elements") {
    const BCElem u = BCElem::mu_tilde(3) * BCElem::inject(e(1, 2)) * BCElem::mu_star(3) + BCElem::mu_tilde(2);
    CHECK(std::abs(expectation(u, 2) - expectation(rho_tilde(3, e(1, 2)), 2)) < 1e-12);
  }

  TEST_CASE("classes") {
    CHECK(std::abs(expectation_class(OrbitSum::one(), 2) - 1.0) < 1e-12);
    CHECK(std::abs(expectation_class(OrbitSum::orbit(2), 2) - 0.5) < 1e-12);
    const double z2 = riemann_zeta(2);
    CHECK(std::abs(expectation_class(OrbitSum::orbit(3), 2) - (z2 + 2 * polylog_at_root(2, QZ(1, 3)).real()) / z2) <
          1e-12);
  }

  TEST_CASE("Hodge expectations") {
    const HodgeExpectation h = hodge_expectation({{{0, 0}, e(0, 1)}, {{1, 1}, e(1, 2)}}, 2);
    CHECK(std::abs(h.coefficients.at({1, 1}) + 0.5) < 1e-12);
    CHECK(std::abs(h.at_one() - 0.5) < 1e-12);
    CHECK(std::abs(h.evaluate(2.0, 0.5) - 0.5) < 1e-12);
    CHECK(std::abs(h.weight_polynomial().at(0) - 1.0) < 1e-12);
    HodgeTable asymmetric{{{2, 0}, e(0, 1)}};
    CHECK(hodge_expectation(asymmetric, 2).evaluate(3.0, 1.0) == Complex(9.0, 0.0));
  }

  TEST_CASE("formatting") {
    CHECK(format_complex(1.0) == "1.000000000000+0i");
    CHECK(format_complex(Complex(-0.2056167583560283, 0.915965594177219)) == "-0.205616758356+0.915965594177i");
    CHECK(format_complex(Complex(1e-14, -2e-13)) == "0.000000000000+0i");
    CHECK(format_real(riemann_zeta(2)) == "1.644934066848");
  }
}
