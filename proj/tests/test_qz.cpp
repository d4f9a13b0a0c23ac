#include "helpers.hpp"

#include "bost/errors.hpp"
#include "bost/int_poly.hpp"
#include "bost/qz.hpp"

using namespace bost;

TEST_SUITE("qz") {
  TEST_CASE("fractions reduce mod 1") {
    CHECK(QZ(5, 3) == QZ(2, 3));
    CHECK(QZ(0, 7).num() == 0);
    CHECK(QZ(0, 7).den() == 1);
    CHECK(QZ(-1, 4) == QZ(3, 4));
    CHECK(QZ(6, -4) == QZ(1, 2));
    CHECK(QZ(2, 3).str() == "2/3");
    CHECK(QZ(0, 5).str() == "0/1");
    CHECK_THROWS_AS(QZ(1, 0), InvalidInput);
  }

  TEST_CASE("parsing") {
    CHECK(QZ::parse("3/4") == QZ(3, 4));
    CHECK(QZ::parse("-1/3") == QZ(2, 3));
    CHECK(QZ::parse("7/7") == QZ());
    CHECK_THROWS_AS(QZ::parse("1/0"), InvalidInput);
    CHECK_THROWS_AS(QZ::parse("x"), InvalidInput);
  }

  TEST_CASE("division points and preimages") {
    CHECK(division_points(1) == std::vector<QZ>{QZ()});
    CHECK(division_points(2) == std::vector<QZ>{QZ(), QZ(1, 2)});
    CHECK(division_points(4) == std::vector<QZ>{QZ(), QZ(1, 4), QZ(1, 2), QZ(3, 4)});
    CHECK(preimages(QZ(), 2) == std::vector<QZ>{QZ(), QZ(1, 2)});
    CHECK(preimages(QZ(1, 3), 1) == std::vector<QZ>{QZ(1, 3)});
    CHECK(preimages(QZ(1, 2), 2) == std::vector<QZ>{QZ(1, 4), QZ(3, 4)});
    for (const QZ& s : preimages(QZ(2, 5), 6)) CHECK(s.times(6) == QZ(2, 5));
  }

  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == IntPoly{-1, 1});
    CHECK(cyclotomic_poly(4) == IntPoly{1, 0, 1});
    CHECK(cyclotomic_poly(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic_poly(6).str() == "t^2 - t + 1");
    // Φ_105 is the first with a coefficient outside {−1, 0, 1}.
    const IntPoly p = cyclotomic_poly(105);
    CHECK(p.degree() == 48);
    CHECK(p[7] == -2);
  }

  TEST_CASE("cyclotomic factorization") {
    const auto f = cyclotomic_factorize(IntPoly{1, 0, 1});
    CHECK(f.zero_mult == 0);
    CHECK(f.cyclo == std::map<std::int64_t, std::size_t>{{4, 1}});
    CHECK(f.remainder == IntPoly{1});
    CHECK(f.quasi_unipotent());

    const auto g = cyclotomic_factorize(IntPoly{0, 0, -1, 1});
    CHECK(g.zero_mult == 2);
    CHECK(g.cyclo == std::map<std::int64_t, std::size_t>{{1, 1}});
    CHECK(g.quasi_idempotent());
    CHECK_FALSE(g.quasi_unipotent());

    const auto h = cyclotomic_factorize(IntPoly{-2, 0, 1});
    CHECK(h.cyclo.empty());
    CHECK(h.remainder == IntPoly{-2, 0, 1});
    CHECK_FALSE(h.quasi_idempotent());

    CHECK(g.product() == IntPoly{0, 0, -1, 1});
    CHECK_THROWS_AS(cyclotomic_factorize(IntPoly{}), InvalidInput);
  }
}
