#include "helpers.hpp"

#include "bost/errors.hpp"
#include "bost/graded_endo.hpp"

using namespace bost;
using bost::test::e;
using bost::test::mat;

namespace {
const IntMatrix rotation = mat({{0, -1}, {1, 0}});
}

TEST_SUITE("dynamical") {
  TEST_CASE("characteristic polynomials") {
    CHECK(charpoly(rotation) == IntPoly{1, 0, 1});
    CHECK(charpoly(IntMatrix::Identity(3, 3)) == pow(IntPoly{-1, 1}, 3));
    CHECK(charpoly(mat({{2, 1}, {7, -3}})) == IntPoly{-13, 1, 1});
    CHECK(charpoly(IntMatrix(0, 0)) == IntPoly{1});
    CHECK(charpoly(companion_matrix(cyclotomic_poly(15))) == cyclotomic_poly(15));
  }

  TEST_CASE("large entries survive the modular reconstruction") {
    IntMatrix m = mat({{0, 1}, {0, 0}});
    m(1, 0) = Integer("-1000000000000000000000000000000");
    // t^2 - m(1,0)
    CHECK(charpoly(m) == IntPoly(std::vector<Integer>{Integer("1000000000000000000000000000000"), 0, 1}));
  }

  TEST_CASE("quasi-unipotence") {
    const auto r = quasi_unipotent_check(GradedEndo::single(0, rotation));
    CHECK(r.ok);
    CHECK(r.per_degree.at(0).cyclo == std::map<std::int64_t, std::size_t>{{4, 1}});
    CHECK_FALSE(quasi_unipotent_check(GradedEndo::single(0, mat({{2}}))).ok);
    const auto id = quasi_unipotent_check(GradedEndo::single(0, IntMatrix::Identity(3, 3)));
    CHECK(id.per_degree.at(0).cyclo == std::map<std::int64_t, std::size_t>{{1, 3}});
    const GradedEndo nilpotent = GradedEndo::single(1, mat({{0, 1}, {0, 0}}));
    CHECK_FALSE(quasi_unipotent_check(nilpotent).ok);
    CHECK(quasi_unipotent_check(nilpotent, true).ok);
  }

  TEST_CASE("spectrum") {
    CHECK(spectrum_euler(GradedEndo::single(0, rotation)) == e(1, 4) + e(3, 4));
    CHECK(spectrum_euler(GradedEndo::point()) == e(0, 1));
    GradedEndo g;
    g.add_block(0, mat({{1}}));
    g.add_block(1, mat({{1}}));
    CHECK(spectrum_euler(g, true).is_zero());
    CHECK(spectrum_euler(g) == e(0, 1, 2));
    CHECK(primitive_roots(6) == e(1, 6) + e(5, 6));
    CHECK_THROWS_AS(spectrum_euler(GradedEndo::single(0, mat({{2}}))), DomainError);
  }

  TEST_CASE("sigma_n is the n-th power") {
    const GradedEndo r = GradedEndo::single(0, rotation);
    CHECK(sigma(2, r).blocks().at(0) == mat({{-1, 0}, {0, -1}}));
    CHECK(spectrum_euler(sigma(2, r)) == e(1, 2, 2));
    CHECK(sigma(1, r) == r);
    CHECK(sigma(4, r).blocks().at(0) == IntMatrix::Identity(2, 2));
    CHECK(spectrum_euler(sigma(4, r)) == e(0, 1, 2));
  }

  TEST_CASE("rho_tilde_n is the cyclic extension") {
    CHECK(rho_tilde(2, GradedEndo::point()).blocks().at(0) == mat({{0, 1}, {1, 0}}));
    CHECK(spectrum_euler(rho_tilde(2, GradedEndo::point())) == e(0, 1) + e(1, 2));
    CHECK(rho_tilde(1, GradedEndo::single(0, rotation)) == GradedEndo::single(0, rotation));
    CHECK(rho_tilde(3, GradedEndo::point()).blocks().at(0) == cyclic_permutation_matrix(3));
    CHECK(spectrum_euler(rho_tilde(3, GradedEndo::point())) == e(0, 1) + e(1, 3) + e(2, 3));
    const IntMatrix v = verschiebung_matrix(2, rotation);
    CHECK(v.rows() == 4);
    CHECK(v.block(2, 0, 2, 2) == IntMatrix::Identity(2, 2));
    CHECK(v.block(0, 2, 2, 2) == rotation);
  }

  TEST_CASE("union and product") {
    const GradedEndo one = GradedEndo::point(), minus = GradedEndo::single(0, mat({{-1}}));
    CHECK(disjoint_union(one, minus).blocks().at(0) == mat({{1, 0}, {0, -1}}));
    CHECK(spectrum_euler(disjoint_union(one, minus)) == e(0, 1) + e(1, 2));
    CHECK(product(minus, minus).blocks().at(0) == mat({{1}}));
    const GradedEndo g = GradedEndo::single(2, rotation);
    CHECK(product(g, one) == g);
    CHECK(product(g, g).blocks().count(4) == 1);
    CHECK(copies(3, g).dimension() == 6);
  }

  TEST_CASE("blocks are validated") {
    GradedEndo g;
    CHECK_THROWS_AS(g.add_block(0, IntMatrix(2, 3)), InvalidInput);
    CHECK_THROWS_AS(g.add_block(-1, mat({{1}})), InvalidInput);
    g.add_block(0, mat({{1}}));
    CHECK_THROWS_AS(g.add_block(0, mat({{1}})), InvalidInput);
  }
}
