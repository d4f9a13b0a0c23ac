#include <numeric>

#include "bost/json_io.hpp"
#include "bost/verify/oracles.hpp"
#include "bost/verify/random.hpp"
#include "bost/verify/suites.hpp"

namespace bost::verify {

namespace {

std::string show(const GroupRingZ& x) { return to_json(x).dump(); }

void relations_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0x33);
  for (int trial = 0; trial < 1000; ++trial) {
    const GroupRingZ x = gen.group_ring(), y = gen.group_ring();
    const std::int64_t n = gen.range(1, 12), m = gen.range(1, 12);
    rec.expect("ρ̃_n(σ_n(x)·y) = x·ρ̃_n(y)", rho_tilde(n, sigma(n, x) * y) == x * rho_tilde(n, y),
               show(x) + ", " + show(y) + ", n = " + std::to_string(n));
    const std::int64_t g = std::gcd(n, m);
    rec.expect("σ_n(ρ̃_m(x)) = gcd·ρ̃_{m'}(σ_{n'}(x))",
               sigma(n, rho_tilde(m, x)) == Integer(g) * rho_tilde(m / g, sigma(n / g, x)),
               show(x) + ", n = " + std::to_string(n) + ", m = " + std::to_string(m));
    rec.expect("σ_{nm} = σ_n∘σ_m", sigma(n * m, x) == sigma(n, sigma(m, x)));
    rec.expect("σ_n is multiplicative", sigma(n, x * y) == sigma(n, x) * sigma(n, y));
  }
}

void sigma_rho_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0x35);
  for (int trial = 0; trial < 300; ++trial) {
    const GroupRingZ x = gen.group_ring();
    const GroupRingQ xq = gen.group_ring_q();
    const std::int64_t n = gen.range(1, 12);
    rec.expect("σ_n∘ρ̃_n = n", sigma(n, rho_tilde(n, x)) == Integer(n) * x, show(x));
    rec.expect("ρ̃_n∘σ_n = n·π_n·(·)", to_rational(rho_tilde(n, sigma(n, x))) == Rational(n) * pi(n) * to_rational(x),
               show(x));
    rec.expect("ρ_n∘σ_n = π_n·(·)", rho(n, sigma(n, xq)) == pi(n) * xq);
    rec.expect("ρ̃_n matches the preimage search", rho_tilde(n, x) == rho_tilde_by_search(n, x), show(x));
  }
  for (std::int64_t n = 1; n <= 12; ++n) rec.expect("π_n² = π_n", pi(n) * pi(n) == pi(n), std::to_string(n));
}

void ideal_group(Recorder& rec, std::uint64_t) {
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t den = 1; den <= 12; ++den)
      for (std::int64_t num = 0; num < den; ++num) {
        const QZ r(num, den);
        const GroupRingZ lhs = rho_tilde(n, GroupRingZ::basis(r));
        for (const QZ& s : preimages(r, n))
          rec.expect("ρ̃_n(e(r)) = e(r')·ρ̃_n(e(0))", lhs == GroupRingZ::basis(s) * rho_tilde(n, GroupRingZ::one()),
                     "r = " + r.str() + ", r' = " + s.str());
      }
}

void subring_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0x32);
  for (int trial = 0; trial < 300; ++trial) {
    std::map<std::int64_t, Integer> a;
    const auto k = gen.range(1, 4);
    for (std::int64_t i = 0; i < k; ++i) a[gen.range(1, 24)] += gen.nonzero(9);
    std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
    const GroupRingZ x = from_division_sums(a);
    const SubringMembership m = fixed_subring_membership(x);
    rec.expect("span elements are recognised with their expansion", m.member && m.coefficients == a, show(x));
    const std::int64_t n = gen.range(1, 12);
    rec.expect("σ_n preserves the subring", fixed_subring_membership(sigma(n, x)).member, show(x));
    // One extra root of order >= 3 breaks constancy on its Galois orbit.
    const std::int64_t den = gen.range(3, 24);
    const GroupRingZ y = x + GroupRingZ::basis(QZ(1, den));
    rec.expect("a single added root of order >= 3 is rejected", !fixed_subring_membership(y).member, show(y));
  }
  for (std::int64_t a = 1; a <= 12; ++a)
    for (std::int64_t b = 1; b <= 12; ++b)
      rec.expect("division sums multiply by the gcd/lcm rule",
                 division_sum(a) * division_sum(b) == Integer(std::gcd(a, b)) * division_sum(std::lcm(a, b)),
                 std::to_string(a) + ", " + std::to_string(b));
  rec.expect("e(0) + e(1/2) = 2π₂ is a member", [] {
    const auto m = fixed_subring_membership(GroupRingZ::basis(QZ()) + GroupRingZ::basis(QZ(1, 2)));
    return m.member && m.coefficients == std::map<std::int64_t, Integer>{{2, 1}};
  }());
  rec.expect("e(1/3) is not a member", !fixed_subring_membership(GroupRingZ::basis(QZ(1, 3))).member);
}

}  // namespace

void register_group_ring(std::vector<Group>& out) {
  out.push_back({"group_ring", "relations", relations_group});
  out.push_back({"group_ring", "sigma-rho", sigma_rho_group});
  out.push_back({"group_ring", "rho-range-ideal", ideal_group});
  out.push_back({"group_ring", "fixed-subring", subring_group});
}

}  // namespace bost::verify
