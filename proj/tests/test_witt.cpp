#include "helpers.hpp"

#include "bost/errors.hpp"
#include "bost/witt.hpp"

using namespace bost;

namespace {
const TruncationSet t12{1, 2};
WittVector teich(long a) { return WittVector::teichmuller(t12, a); }
}  // namespace

TEST_SUITE("witt") {
  TEST_CASE("truncation sets") {
    CHECK(TruncationSet().elements() == std::set<std::int64_t>{1});
    CHECK(TruncationSet::divisors_of(12).size() == 6);
    CHECK(TruncationSet::divisors_of(12).max() == 12);
    CHECK_THROWS_AS(TruncationSet({1, 4}), InvalidInput);
    CHECK_THROWS_AS(TruncationSet(std::set<std::int64_t>{}), InvalidInput);
    CHECK_THROWS_AS(WittVector(t12, {{3, 1}}), InvalidInput);
  }

  TEST_CASE("fixed points") {
    CHECK(fixed_points(OrbitSum::orbit(2), 2) == 2);
    CHECK(fixed_points(OrbitSum::orbit(2), 1) == 0);
    for (std::int64_t m = 1; m <= 10; ++m) CHECK(fixed_points(OrbitSum::one(), m) == 1);
  }

  TEST_CASE("ghost map") {
    CHECK(witt_ghost(teich(2)) == Ghost{{1, 2}, {2, 4}});
    CHECK(witt_from_ghost(t12, {{1, 1}, {2, 1}}) == teich(1));
    CHECK_THROWS_AS(witt_from_ghost(t12, {{1, 0}, {2, 1}}), NotWittVector);
    CHECK_THROWS_AS(witt_from_ghost(t12, {{1, 0}}), InvalidInput);
  }

  TEST_CASE("ring operations") {
    CHECK(witt_add(teich(1), teich(1)) == WittVector(t12, {{1, 2}, {2, -1}}));
    const WittVector w(t12, {{1, 3}, {2, -2}});
    CHECK(witt_mul(teich(1), w) == w);
    // Ghosts (4, 16) solve to x_1 = 4, x_2 = 0.
    CHECK(witt_mul(teich(2), teich(2)) == WittVector(t12, {{1, 4}, {2, 0}}));
    CHECK(witt_mul(teich(2), teich(2)) == teich(4));
    CHECK(witt_sub(w, w) == WittVector::zero(t12));
    CHECK_THROWS_AS(witt_add(teich(1), WittVector::teichmuller(TruncationSet{1, 3}, 1)), TruncationError);
  }

  TEST_CASE("Frobenius and Verschiebung") {
    CHECK(witt_verschiebung(2, teich(1)) == WittVector(t12, {{2, 1}}));
    const WittVector w(TruncationSet::divisors_of(6), {{1, 2}, {2, -1}, {3, 5}, {6, 1}});
    CHECK(witt_frobenius(1, w) == w);
    CHECK(witt_verschiebung(1, w) == w);
    CHECK(witt_frobenius(2, w).trunc() == TruncationSet{1, 3});
    CHECK(witt_frobenius(2, witt_verschiebung(2, w, TruncationSet::divisors_of(12))) == witt_add(w, w));
    CHECK(witt_verschiebung_shift(3, w, TruncationSet::divisors_of(18)).coord(9) == 5);
  }

  TEST_CASE("Burnside to Witt") {
    const TruncationSet t = TruncationSet::divisors_of(8);
    CHECK(burnside_to_witt(OrbitSum::one(), t) == WittVector::teichmuller(t, 1));
    CHECK(burnside_to_witt(OrbitSum::orbit(2), t12) == WittVector(t12, {{2, 1}}));
    const OrbitSum z2 = OrbitSum::orbit(2);
    CHECK(burnside_to_witt(z2 * z2, t12) == witt_mul(burnside_to_witt(z2, t12), burnside_to_witt(z2, t12)));
    // A single orbit of length d is the coordinate vector with a 1 in slot d; multiples are Witt sums.
    const WittVector z4 = WittVector(t, {{4, 1}});
    CHECK(burnside_to_witt(OrbitSum::orbit(4), t) == z4);
    CHECK(burnside_to_witt(OrbitSum::orbit(4, 3), t) == witt_add(witt_add(z4, z4), z4));
    CHECK_FALSE(burnside_to_witt(OrbitSum::orbit(4, 3), t) == WittVector(t, {{4, 3}}));
  }
}
