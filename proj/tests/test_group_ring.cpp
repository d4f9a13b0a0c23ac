#include "helpers.hpp"

#include "bost/errors.hpp"

using namespace bost;
using bost::test::e;
using bost::test::eq;

TEST_SUITE("group_ring") {
  TEST_CASE("convolution product") {
    CHECK(e(1, 3) * e(1, 3) == e(2, 3));
    CHECK(e(1, 2) * e(1, 2) == e(0, 1));
    CHECK((e(0, 1) + e(1, 2)) * (e(0, 1) + e(1, 2)) == e(0, 1, 2) + e(1, 2, 2));
    CHECK(GroupRingZ::one() * e(3, 7) == e(3, 7));
  }

  TEST_CASE("zero coefficients are never stored") {
    GroupRingZ x = e(1, 2, 3) + e(1, 2, -3);
    CHECK(x.is_zero());
    x.add_term(QZ(1, 5), 0);
    CHECK(x.size() == 0);
  }

  TEST_CASE("level is the lcm of the denominators") {
    CHECK((e(1, 4) + e(1, 6)).level() == 12);
    CHECK(GroupRingZ::one().level() == 1);
  }

  TEST_CASE("sigma") {
    CHECK(sigma(2, e(1, 3)) == e(2, 3));
    CHECK(sigma(1, e(1, 3) + e(1, 5, 4)) == e(1, 3) + e(1, 5, 4));
    CHECK(sigma(2, division_sum(4)) == e(0, 1, 2) + e(1, 2, 2));
    CHECK_THROWS_AS(sigma(0, e(1, 2)), InvalidInput);
  }

  TEST_CASE("rho_tilde and rho") {
    CHECK(rho_tilde(2, e(0, 1)) == e(0, 1) + e(1, 2));
    CHECK(rho_tilde(1, e(2, 7)) == e(2, 7));
    CHECK(rho_tilde(2, e(1, 2)) == e(1, 4) + e(3, 4));
    CHECK(rho(2, eq(0, 1)) == eq(0, 1, Rational(1, 2)) + eq(1, 2, Rational(1, 2)));
    // Additive but not multiplicative.
    CHECK(rho_tilde(2, e(0, 1) * e(0, 1)) != rho_tilde(2, e(0, 1)) * rho_tilde(2, e(0, 1)));
  }

  TEST_CASE("the idempotents pi_n") {
    CHECK(pi(1) == GroupRingQ::one());
    CHECK(pi(2) == eq(0, 1, Rational(1, 2)) + eq(1, 2, Rational(1, 2)));
    for (std::int64_t n = 1; n <= 8; ++n) {
      CHECK(pi(n) * pi(n) == pi(n));
      const GroupRingQ x = eq(1, 3) + eq(3, 8, Rational(-2, 5));
      CHECK(rho(n, sigma(n, x)) == pi(n) * x);
    }
  }

  TEST_CASE("integer and rational modes") {
    CHECK(to_integer(to_rational(e(1, 3, 5))) == e(1, 3, 5));
    CHECK_THROWS_AS(to_integer(pi(2)), CoefficientModeError);
  }

  TEST_CASE("fixed subring membership") {
    const auto two_pi_2 = fixed_subring_membership(e(0, 1) + e(1, 2));
    CHECK(two_pi_2.member);
    CHECK(two_pi_2.coefficients == std::map<std::int64_t, Integer>{{2, 1}});
    CHECK_FALSE(fixed_subring_membership(e(1, 3)).member);
    const auto unit = fixed_subring_membership(e(0, 1, 2));
    CHECK(unit.member);
    CHECK(unit.coefficients == std::map<std::int64_t, Integer>{{1, 2}});
    // e(1/3) + e(2/3) = Σ_{3s=0} e(s) − e(0).
    const auto thirds = fixed_subring_membership(e(1, 3) + e(2, 3));
    CHECK(thirds.member);
    CHECK(thirds.coefficients == std::map<std::int64_t, Integer>{{1, -1}, {3, 1}});
    CHECK(from_division_sums(thirds.coefficients) == e(1, 3) + e(2, 3));
  }

  TEST_CASE("division sums multiply by gcd and lcm") {
    for (std::int64_t a = 1; a <= 12; ++a)
      for (std::int64_t b = 1; b <= 12; ++b) {
        GroupRingZ want = division_sum(std::lcm(a, b));
        want *= Integer(std::gcd(a, b));
        CHECK(division_sum(a) * division_sum(b) == want);
      }
  }
}
