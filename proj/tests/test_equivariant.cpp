#include "helpers.hpp"

#include "bost/equivariant.hpp"
#include "bost/errors.hpp"

using namespace bost;
using bost::test::e;

namespace {
OrbitSum o(std::int64_t d, long m = 1) { return OrbitSum::orbit(d, m); }
}  // namespace

TEST_SUITE("equivariant") {
  TEST_CASE("orbit products") {
    CHECK(o(2) * o(3) == o(6));
    CHECK(OrbitSum::one() * (o(4) + o(5, 2)) == o(4) + o(5, 2));
    CHECK(o(4) * o(6) == o(12, 2));
    CHECK((o(4) * o(6)).cardinality() == 24);
  }

  TEST_CASE("sigma and rho_tilde") {
    CHECK(sigma(2, o(4)) == o(2, 2));
    CHECK(sigma(3, o(2)) == o(2));
    CHECK(sigma(7, OrbitSum::one()) == OrbitSum::one());
    CHECK(rho_tilde(2, OrbitSum::one()) == o(2));
    CHECK(rho_tilde(3, o(2)) == o(6));
    CHECK(rho_tilde(1, o(3) - o(5)) == o(3) - o(5));
    CHECK(sigma(3, rho_tilde(3, o(4))) == o(4, 3));
    CHECK(rho_tilde(4, sigma(4, o(6))) == o(6) * cyclic_set(4));
  }

  TEST_CASE("equivariant Euler characteristic") {
    CHECK(chi_hat_z(o(2)) == e(0, 1) + e(1, 2));
    CHECK(chi_hat_z(OrbitSum::one()) == GroupRingZ::one());
    CHECK(chi_hat_z(o(4)) == e(0, 1) + e(1, 4) + e(1, 2) + e(3, 4));
    CHECK(chi_hat_z(o(3, 2) - o(1)) == e(0, 1) + e(1, 3, 2) + e(2, 3, 2));
  }

  TEST_CASE("virtual sums and labels") {
    const OrbitSum x = o(1, 2) + o(4) - o(6, 3);
    CHECK_FALSE(x.is_genuine());
    CHECK(x.level() == 12);
    CHECK(x.label() == "Z/1^2+Z/4+(-3)Z/6");
    CHECK(OrbitSum::parse_label(x.label()) == x);
    CHECK(OrbitSum().label() == "0");
    CHECK(OrbitSum::parse_label("0").is_zero());
    CHECK_THROWS_AS(OrbitSum::parse_label("Z/0"), InvalidInput);
    CHECK_THROWS_AS(o(0), InvalidInput);
  }

  TEST_CASE("bold chi") {
    CHECK(bold_chi(BoldK0Elem::inject(o(2))) == BCElem::inject(e(0, 1) + e(1, 2)));
    const BoldK0Elem w = BoldK0Elem::mu_tilde(2) * BoldK0Elem::mu_star(2);
    CHECK(w == BoldK0Elem::inject(o(2)));
    CHECK(bold_chi(w) == BCElem::inject(e(0, 1) + e(1, 2)));
    CHECK(bold_chi(BoldK0Elem::one()) == BCElem::one());
    CHECK(BoldK0Elem::mu_star(3) * BoldK0Elem::mu_tilde(3) == BoldK0Elem::inject(o(1, 3)));
  }
}
