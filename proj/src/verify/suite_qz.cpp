#include <algorithm>

#include "bost/int_poly.hpp"
#include "bost/qz.hpp"
#include "bost/verify/oracles.hpp"
#include "bost/verify/random.hpp"
#include "bost/verify/suites.hpp"

namespace bost::verify {

namespace {

void preimages_group(Recorder& rec, std::uint64_t) {
  for (std::int64_t den = 1; den <= 24; ++den)
    for (std::int64_t num = 0; num < den; ++num) {
      const QZ r(num, den);
      for (std::int64_t n = 1; n <= 12; ++n) {
        const auto pre = preimages(r, n);
        const bool count_ok = static_cast<std::int64_t>(pre.size()) == n;
        const bool all_hit = std::all_of(pre.begin(), pre.end(), [&](const QZ& s) { return s.times(n) == r; });
        const bool distinct = std::adjacent_find(pre.begin(), pre.end()) == pre.end();
        rec.expect("n·r' = r for each of the n preimages", count_ok && all_hit && distinct,
                   "r = " + r.str() + ", n = " + std::to_string(n));
      }
    }
  for (std::int64_t n = 1; n <= 64; ++n) {
    auto a = preimages(QZ(), n), b = division_points(n);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    rec.expect("preimages(0, n) = division_points(n)", a == b, "n = " + std::to_string(n));
    rec.expect("division_points(n) has n elements", static_cast<std::int64_t>(b.size()) == n);
  }
}

void cyclotomic_group(Recorder& rec, std::uint64_t) {
  for (std::int64_t n = 1; n <= 64; ++n) {
    IntPoly prod = IntPoly::constant(1);
    for (std::int64_t d : divisors(n)) prod = prod * cyclotomic_poly(d);
    rec.expect("product of Φ_d over d | n is t^n − 1", prod == IntPoly::x_pow_minus_one(static_cast<std::size_t>(n)),
               "n = " + std::to_string(n));
    const IntPoly phi = cyclotomic_poly(n);
    rec.expect("Φ_n matches the Möbius product", phi == cyclotomic_by_moebius(n), "n = " + std::to_string(n));
    rec.expect("Φ_n is monic of degree φ(n)", phi.is_monic() && phi.degree() == euler_phi(n),
               "n = " + std::to_string(n));
  }
}

void factorization_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0x71);
  const IntPoly noise[] = {IntPoly{1}, IntPoly{-2, 0, 1}, IntPoly{2, 1}, IntPoly{1, 1, 1, 1, 1, 1, 1, 1, 3}};
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly p = IntPoly::monomial(1, static_cast<std::size_t>(gen.range(0, 3)));
    std::map<std::int64_t, std::size_t> expected;
    const auto factors = gen.range(0, 4);
    for (std::int64_t i = 0; i < factors; ++i) {
      const std::int64_t d = gen.range(1, 30);
      p = p * cyclotomic_poly(d);
      ++expected[d];
    }
    const IntPoly& extra = noise[gen.range(0, 3)];
    p = p * extra;
    const CycloFactorization f = cyclotomic_factorize(p);
    rec.expect("re-multiplying the factorization gives the input", f.product() == p, p.str());
    rec.expect("cyclotomic multiplicities are recovered", f.cyclo == expected, p.str());
    rec.expect("remainder is 1 exactly for cyclotomic products",
               f.quasi_idempotent() == (extra == IntPoly{1}), p.str());
  }
  const CycloFactorization a = cyclotomic_factorize(IntPoly{1, 0, 1});
  rec.expect("t² + 1 = Φ₄", a.zero_mult == 0 && a.cyclo == std::map<std::int64_t, std::size_t>{{4, 1}} &&
                                a.remainder == IntPoly{1});
  const CycloFactorization b = cyclotomic_factorize(IntPoly{0, 0, -1, 1});
  rec.expect("t³ − t² = t²·Φ₁", b.zero_mult == 2 && b.cyclo == std::map<std::int64_t, std::size_t>{{1, 1}} &&
                                    b.remainder == IntPoly{1});
  const CycloFactorization c = cyclotomic_factorize(IntPoly{-2, 0, 1});
  rec.expect("t² − 2 has no cyclotomic factor", c.cyclo.empty() && c.remainder == IntPoly({-2, 0, 1}));
}

}  // namespace

void register_qz(std::vector<Group>& out) {
  out.push_back({"qz", "preimages", preimages_group});
  out.push_back({"qz", "cyclotomic-products", cyclotomic_group});
  out.push_back({"qz", "factorization", factorization_group});
}

}  // namespace bost::verify
