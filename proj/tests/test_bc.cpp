#include "helpers.hpp"

#include "bost/crossed_product.hpp"

using namespace bost;
using bost::test::e;

namespace {
BCElem inj(const GroupRingZ& x) { return BCElem::inject(x); }
BCElem mt(std::int64_t n) { return BCElem::mu_tilde(n); }
BCElem ms(std::int64_t n) { return BCElem::mu_star(n); }
}  // namespace

TEST_SUITE("bc") {
  TEST_CASE("constructors") {
    const BCElem x = inj(e(1, 2));
    REQUIRE(x.terms().size() == 1);
    CHECK(x.coeff(1, 1) == e(1, 2));
    CHECK(mt(6).coeff(6, 1) == GroupRingZ::one());
    CHECK(ms(1) == BCElem::one());
  }

  TEST_CASE("defining relations") {
    CHECK(ms(2) * mt(2) == inj(e(0, 1, 2)));
    CHECK(mt(2) * ms(2) == inj(e(0, 1) + e(1, 2)));
    CHECK(mt(2) * inj(e(1, 3)) * ms(2) == inj(rho_tilde(2, e(1, 3))));
    CHECK(ms(3) * inj(e(1, 4)) == inj(e(3, 4)) * ms(3));
    CHECK(inj(e(1, 4)) * mt(3) == mt(3) * inj(e(3, 4)));
    CHECK(mt(2) * ms(3) == ms(3) * mt(2));
  }

  TEST_CASE("mu_2 mu_3* times mu_3 mu_2*") {
    // μ̃_2(μ_3*μ̃_3)μ_2* = 3μ̃_2μ_2* = 3ρ̃_2(e(0)); the reverse order gives 2ρ̃_3(e(0)).
    const BCElem u = mt(2) * ms(3), v = mt(3) * ms(2);
    CHECK(u * v == inj(e(0, 1, 3) + e(1, 2, 3)));
    CHECK(v * u == inj(e(0, 1, 2) + e(1, 3, 2) + e(2, 3, 2)));
  }

  TEST_CASE("stored keys are coprime") {
    const BCElem u = mt(4) * inj(e(1, 3)) * ms(6) + mt(2) * ms(2);
    for (const auto& [k, x] : u.terms()) {
      CHECK(std::gcd(k.first, k.second) == 1);
      CHECK_FALSE(x.is_zero());
    }
  }

  TEST_CASE("rational form") {
    const BCElemQ two_mu = BCElemQ::word(2, GroupRingQ::basis(QZ(), 2), 1);
    CHECK(rationalize(mt(2)) == two_mu);
    CHECK(rationalize(BCElem::one()) == BCElemQ::one());
    CHECK(rationalize(mt(2) * ms(2)) == BCElemQ::inject(to_rational(e(0, 1) + e(1, 2))));
    const auto mu = [](std::int64_t n) { return BCElemQ::word(n, GroupRingQ::one(), 1); };
    const auto mus = [](std::int64_t n) { return BCElemQ::word(1, GroupRingQ::one(), n); };
    CHECK(mus(5) * mu(5) == BCElemQ::one());
    CHECK(mu(3) * BCElemQ::inject(GroupRingQ::one()) * mus(3) == BCElemQ::inject(rho(3, GroupRingQ::one())));
  }
}
