#include <numeric>

#include "bost/json_io.hpp"
#include "bost/verify/oracles.hpp"
#include "bost/verify/random.hpp"
#include "bost/verify/suites.hpp"

namespace bost::verify {

namespace {

std::string pair_label(std::int64_t d, std::int64_t n) {
  return "d = " + std::to_string(d) + ", n = " + std::to_string(n);
}

void oracle_group(Recorder& rec, std::uint64_t) {
  for (std::int64_t d = 1; d <= 12; ++d) {
    const OrbitSum x = OrbitSum::orbit(d);
    const PermutationSet px = PermutationSet::from_orbits(x);
    for (std::int64_t e = 1; e <= 12; ++e) {
      const OrbitSum y = OrbitSum::orbit(e);
      rec.expect("orbit product matches the diagonal action",
                 x * y == diagonal_product(px, PermutationSet::from_orbits(y)).cycle_type(), pair_label(d, e));
    }
    for (std::int64_t n = 1; n <= 12; ++n) {
      rec.expect("σ_n matches the n-th power of the action", sigma(n, x) == power(px, n).cycle_type(),
                 pair_label(d, n));
      rec.expect("ρ̃_n matches the cyclic extension", rho_tilde(n, x) == cyclic_extension(px, n).cycle_type(),
                 pair_label(d, n));
    }
    rec.expect("χ matches the permutation character", chi_hat_z(x) == permutation_character(px),
               "d = " + std::to_string(d));
  }
}

void frobenius_verschiebung_group(Recorder& rec, std::uint64_t seed) {
  for (std::int64_t d = 1; d <= 12; ++d)
    for (std::int64_t n = 1; n <= 12; ++n) {
      const OrbitSum x = OrbitSum::orbit(d);
      rec.expect("σ_n∘ρ̃_n = n·id", sigma(n, rho_tilde(n, x)) == Integer(n) * x, pair_label(d, n));
      rec.expect("ρ̃_n∘σ_n = (·)·[Z_n, γ_n]", rho_tilde(n, sigma(n, x)) == x * cyclic_set(n), pair_label(d, n));
    }
  Gen gen(seed ^ 0x338);
  for (int t = 0; t < 300; ++t) {
    const OrbitSum x = gen.orbit_sum();
    const std::int64_t n = gen.range(1, 12);
    rec.expect("σ_n∘ρ̃_n = n·id on virtual sums", sigma(n, rho_tilde(n, x)) == Integer(n) * x, x.label());
    rec.expect("ρ̃_n∘σ_n = (·)·[Z_n, γ_n] on virtual sums", rho_tilde(n, sigma(n, x)) == x * cyclic_set(n),
               x.label());
    const std::int64_t m = gen.range(1, 12);
    rec.expect("σ_{nm} = σ_n∘σ_m", sigma(n * m, x) == sigma(n, sigma(m, x)));
  }
}

void chi_sigma_group(Recorder& rec, std::uint64_t) {
  for (std::int64_t d = 1; d <= 12; ++d)
    for (std::int64_t n = 1; n <= 12; ++n) {
      const OrbitSum x = OrbitSum::orbit(d);
      rec.expect("χ∘σ_n = σ_n∘χ", chi_hat_z(sigma(n, x)) == sigma(n, chi_hat_z(x)), pair_label(d, n));
    }
}

void chi_rho_group(Recorder& rec, std::uint64_t) {
  for (std::int64_t d = 1; d <= 12; ++d)
    for (std::int64_t n = 1; n <= 12; ++n) {
      const OrbitSum x = OrbitSum::orbit(d);
      rec.expect("χ∘ρ̃_n = ρ̃_n∘χ", chi_hat_z(rho_tilde(n, x)) == rho_tilde(n, chi_hat_z(x)), pair_label(d, n));
    }
}

void chi_subring_group(Recorder& rec, std::uint64_t) {
  for (std::int64_t d = 1; d <= 12; ++d) {
    const OrbitSum x = OrbitSum::orbit(d);
    const SubringMembership m = fixed_subring_membership(chi_hat_z(x));
    rec.expect("χ lands in the span of the division sums with [Z/d] ↦ Σ_{ds=0} e(s)",
               m.member && m.coefficients == std::map<std::int64_t, Integer>{{d, 1}}, "d = " + std::to_string(d));
    for (std::int64_t n = 1; n <= 12; ++n) {
      const SubringMembership s = fixed_subring_membership(sigma(n, chi_hat_z(x)));
      std::map<std::int64_t, Integer> expected;
      const OrbitSum image = sigma(n, x);
      for (const auto& [e, k] : image.orbits()) expected[e] = k;
      rec.expect("σ_n maps the subring to itself, compatibly with the orbit model",
                 s.member && s.coefficients == expected, pair_label(d, n));
    }
  }
}

void chi_multiplicative_group(Recorder& rec, std::uint64_t seed) {
  for (std::int64_t d = 1; d <= 12; ++d)
    for (std::int64_t e = 1; e <= 12; ++e) {
      const OrbitSum x = OrbitSum::orbit(d), y = OrbitSum::orbit(e);
      rec.expect("χ(x·y) = χ(x)·χ(y)", chi_hat_z(x * y) == chi_hat_z(x) * chi_hat_z(y), pair_label(d, e));
    }
  Gen gen(seed ^ 0xc11);
  for (int t = 0; t < 200; ++t) {
    const OrbitSum x = gen.orbit_sum(), y = gen.orbit_sum();
    rec.expect("χ is additive and multiplicative on virtual sums",
               chi_hat_z(x * y) == chi_hat_z(x) * chi_hat_z(y) && chi_hat_z(x + y) == chi_hat_z(x) + chi_hat_z(y),
               x.label() + ", " + y.label());
  }
}

void bold_chi_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0xb01d);
  for (int t = 0; t < 200; ++t) {
    BoldK0Elem u = gen.bold_word(), v = gen.bold_word();
    if (gen.coin()) u += gen.bold_word();
    rec.expect("bold χ is multiplicative", bold_chi(u * v) == bold_chi(u) * bold_chi(v),
               to_json(u).dump() + " · " + to_json(v).dump());
    rec.expect("bold χ is additive", bold_chi(u + v) == bold_chi(u) + bold_chi(v));
    const BoldK0Elem w = gen.bold_word();
    rec.expect("the orbit-coefficient product is associative", (u * v) * w == u * (v * w));
  }
  rec.expect("bold χ(inject [Z/2]) = inject(e(0) + e(1/2))",
             bold_chi(BoldK0Elem::inject(OrbitSum::orbit(2))) == BCElem::inject(division_sum(2)));
  rec.expect("bold χ(μ̃_2·[Z/1]·μ*_2) = inject(e(0) + e(1/2))",
             bold_chi(BoldK0Elem::mu_tilde(2) * BoldK0Elem::mu_star(2)) == BCElem::inject(division_sum(2)) &&
                 BoldK0Elem::mu_tilde(2) * BoldK0Elem::mu_star(2) == BoldK0Elem::inject(OrbitSum::orbit(2)));
  rec.expect("bold χ(unit) = unit", bold_chi(BoldK0Elem::one()) == BCElem::one());
}

void examples_group(Recorder& rec, std::uint64_t) {
  auto o = [](std::int64_t d, std::int64_t m = 1) { return OrbitSum::orbit(d, m); };
  rec.expect("[Z/2]·[Z/3] = [Z/6]", o(2) * o(3) == o(6));
  rec.expect("[Z/4]·[Z/6] = 2[Z/12]", o(4) * o(6) == o(12, 2));
  rec.expect("σ_2[Z/4] = 2[Z/2]", sigma(2, o(4)) == o(2, 2));
  rec.expect("σ_3[Z/2] = [Z/2]", sigma(3, o(2)) == o(2));
  rec.expect("ρ̃_2[Z/1] = [Z/2]", rho_tilde(2, o(1)) == o(2));
  rec.expect("ρ̃_3[Z/2] = [Z/6]", rho_tilde(3, o(2)) == o(6));
  rec.expect("χ[Z/4] = e(0) + e(1/4) + e(1/2) + e(3/4)",
             chi_hat_z(o(4)) == GroupRingZ::basis(QZ()) + GroupRingZ::basis(QZ(1, 4)) + GroupRingZ::basis(QZ(1, 2)) +
                                    GroupRingZ::basis(QZ(3, 4)));
}

}  // namespace

void register_equivariant(std::vector<Group>& out) {
  out.push_back({"equivariant", "permutation-oracles", oracle_group});
  out.push_back({"equivariant", "sigma-rho-relations", frobenius_verschiebung_group});
  out.push_back({"equivariant", "chi-sigma-diagram", chi_sigma_group});
  out.push_back({"equivariant", "chi-rho-diagram", chi_rho_group});
  out.push_back({"equivariant", "chi-fixed-subring", chi_subring_group});
  out.push_back({"equivariant", "chi-multiplicative", chi_multiplicative_group});
  out.push_back({"equivariant", "bold-chi", bold_chi_group});
  out.push_back({"equivariant", "examples", examples_group});
}

}  // namespace bost::verify
