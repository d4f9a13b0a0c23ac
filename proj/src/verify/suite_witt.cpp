#include <numeric>

#include "bost/errors.hpp"
#include "bost/json_io.hpp"
#include "bost/verify/oracles.hpp"
#include "bost/verify/random.hpp"
#include "bost/verify/suites.hpp"

namespace bost::verify {

namespace {

std::string show(const WittVector& w) { return to_json(w).dump(); }

void roundtrip_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0x90);
  const TruncationSet t = TruncationSet::divisors_of(24);
  for (int k = 0; k < 300; ++k) {
    const WittVector w = gen.witt(t);
    rec.expect("from_ghost∘ghost = id", witt_from_ghost(t, witt_ghost(w)) == w, show(w));
  }
  bool rejected = false;
  try {
    witt_from_ghost(TruncationSet{1, 2}, {{1, 0}, {2, 1}});
  } catch (const NotWittVector&) {
    rejected = true;
  }
  rec.expect("ghosts (0, 1) are rejected as non-integral", rejected);
}

void examples_group(Recorder& rec, std::uint64_t) {
  const TruncationSet t{1, 2};
  const auto tm = [&](long a) { return WittVector::teichmuller(t, a); };
  rec.expect("ghost(2, 0) = (2, 4)", witt_ghost(tm(2)) == Ghost{{1, 2}, {2, 4}});
  rec.expect("from_ghost(1, 1) = (1, 0)", witt_from_ghost(t, {{1, 1}, {2, 1}}) == tm(1));
  rec.expect("[1] + [1] = (2, −1)", witt_add(tm(1), tm(1)) == WittVector(t, {{1, 2}, {2, -1}}));
  rec.expect("[2]·[2] = (4, 0)", witt_mul(tm(2), tm(2)) == WittVector(t, {{1, 4}, {2, 0}}));
  rec.expect("V_2[1] = (0, 1)", witt_verschiebung(2, tm(1)) == WittVector(t, {{2, 1}}));
  rec.expect("[Z/2] ↦ (0, 1)", burnside_to_witt(OrbitSum::orbit(2), t) == WittVector(t, {{2, 1}}));
  rec.expect("[Z/1] ↦ [1]", burnside_to_witt(OrbitSum::one(), TruncationSet::divisors_of(24)) ==
                                WittVector::teichmuller(TruncationSet::divisors_of(24), 1));
  const OrbitSum z2 = OrbitSum::orbit(2);
  rec.expect("[Z/2]·[Z/2] agrees on both routes",
             burnside_to_witt(z2 * z2, t) == witt_mul(burnside_to_witt(z2, t), burnside_to_witt(z2, t)) &&
                 witt_ghost(burnside_to_witt(z2 * z2, t)) == Ghost{{1, 0}, {2, 4}});
}

void frobenius_verschiebung_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0x335);
  const TruncationSet t = TruncationSet::divisors_of(24);
  for (std::int64_t n : {2, 3, 4}) {
    const TruncationSet tn = TruncationSet::divisors_of(24 / n);
    for (int k = 0; k < 100; ++k) {
      const WittVector a = gen.witt(t), b = gen.witt(tn);
      rec.expect("V_n(F_n(a)·b) = a·V_n(b)",
                 witt_verschiebung(n, witt_mul(witt_frobenius(n, a), b), t) == witt_mul(a, witt_verschiebung(n, b, t)),
                 "n = " + std::to_string(n) + ", a = " + show(a) + ", b = " + show(b));
      rec.expect("V_n is the coordinate shift", witt_verschiebung(n, b, t) == witt_verschiebung_shift(n, b, t),
                 show(b));
      rec.expect("F_n∘V_n = n", witt_frobenius(n, witt_verschiebung(n, b, t)) ==
                                    witt_from_ghost(tn, [&] {
                                      Ghost g = witt_ghost(b);
                                      for (auto& [m, v] : g) v *= n;
                                      return g;
                                    }()));
      const WittVector c = gen.witt(t);
      rec.expect("F_n is a ring map", witt_frobenius(n, witt_mul(a, c)) == witt_mul(witt_frobenius(n, a), witt_frobenius(n, c)));
    }
  }
  const TruncationSet t12 = TruncationSet::divisors_of(12);
  for (int k = 0; k < 50; ++k) {
    const WittVector w = gen.witt(t12);
    rec.expect("F_2(V_2(w)) = w + w", witt_frobenius(2, witt_verschiebung(2, w, t)) == witt_add(w, w), show(w));
    rec.expect("F_1 = V_1 = id", witt_frobenius(1, w) == w && witt_verschiebung(1, w) == w);
  }
}

void burnside_group(Recorder& rec, std::uint64_t) {
  const TruncationSet t24 = TruncationSet::divisors_of(24);
  for (std::int64_t d = 1; d <= 12; ++d)
    for (std::int64_t e = 1; e <= 12; ++e) {
      const OrbitSum x = OrbitSum::orbit(d), y = OrbitSum::orbit(e);
      for (const TruncationSet& t : {t24, TruncationSet::divisors_of(2 * std::lcm(d, e))}) {
        const WittVector wx = burnside_to_witt(x, t), wy = burnside_to_witt(y, t);
        const std::string label = "d = " + std::to_string(d) + ", e = " + std::to_string(e);
        rec.expect("products go to Witt products", burnside_to_witt(x * y, t) == witt_mul(wx, wy), label);
        rec.expect("sums go to Witt sums", burnside_to_witt(x + y, t) == witt_add(wx, wy), label);
      }
    }
}

void correspondence_group(Recorder& rec, std::uint64_t) {
  const std::int64_t base = 24;
  for (std::int64_t n = 1; n <= 6; ++n) {
    const TruncationSet small = TruncationSet::divisors_of(base), big = TruncationSet::divisors_of(n * base);
    for (std::int64_t d = 1; d <= 8; ++d) {
      const OrbitSum x = OrbitSum::orbit(d);
      const std::string label = "d = " + std::to_string(d) + ", n = " + std::to_string(n);
      rec.expect("σ_n corresponds to F_n",
                 witt_ghost(burnside_to_witt(sigma(n, x), small)) == witt_ghost(witt_frobenius(n, burnside_to_witt(x, big))),
                 label);
      rec.expect("ρ̃_n corresponds to V_n",
                 witt_ghost(burnside_to_witt(rho_tilde(n, x), big)) ==
                     witt_ghost(witt_verschiebung(n, burnside_to_witt(x, small), big)),
                 label);
    }
  }
}

void marks_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0x3a4);
  for (int k = 0; k < 100; ++k) {
    const OrbitSum x = gen.orbit_sum(12, 3, 3, false), y = gen.orbit_sum(12, 3, 3, false);
    const PermutationSet px = PermutationSet::from_orbits(x);
    for (std::int64_t m = 1; m <= 24; ++m) {
      rec.expect("fixed points match a direct count", fixed_points(x, m) == px.fixed_by_power(m), x.label());
      rec.expect("marks are multiplicative", fixed_points(x * y, m) == fixed_points(x, m) * fixed_points(y, m));
      rec.expect("marks are additive", fixed_points(x + y, m) == fixed_points(x, m) + fixed_points(y, m));
    }
  }
  rec.expect("[Z/2] has 2 points fixed by 2Ẑ and none by Ẑ",
             fixed_points(OrbitSum::orbit(2), 2) == 2 && fixed_points(OrbitSum::orbit(2), 1) == 0);
}

}  // namespace

void register_witt(std::vector<Group>& out) {
  out.push_back({"witt", "ghost-roundtrip", roundtrip_group});
  out.push_back({"witt", "examples", examples_group});
  out.push_back({"witt", "frobenius-verschiebung", frobenius_verschiebung_group});
  out.push_back({"witt", "burnside-homomorphism", burnside_group});
  out.push_back({"witt", "sigma-rho-correspondence", correspondence_group});
  out.push_back({"witt", "marks", marks_group});
}

}  // namespace bost::verify
