#include "bost/errors.hpp"
#include "bost/json_io.hpp"
#include "bost/verify/oracles.hpp"
#include "bost/verify/random.hpp"
#include "bost/verify/suites.hpp"

namespace bost::verify {

namespace {

std::string show(const GradedEndo& g) { return to_json(g).dump(); }

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

GroupRingZ e(std::int64_t num, std::int64_t den, long c = 1) { return GroupRingZ::basis(QZ(num, den), c); }

void charpoly_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0xc0);
  for (int k = 0; k < 150; ++k) {
    const IntMatrix m = gen.matrix(static_cast<Eigen::Index>(gen.range(1, 7)), gen.coin() ? 3 : 40);
    rec.expect("characteristic polynomial matches Faddeev–LeVerrier", charpoly(m) == charpoly_faddeev(m),
               to_json(m).dump());
  }
  for (int k = 0; k < 30; ++k) {
    const IntMatrix m = gen.cyclotomic_matrix(12, 3);
    rec.expect("companion sums factor completely", quasi_unipotent_check(GradedEndo::single(0, m)).ok,
               to_json(m).dump());
  }
}

void ring_homomorphism_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0x611);
  for (int k = 0; k < 200; ++k) {
    const GradedEndo g = gen.graded(), h = gen.graded();
    for (bool signed_mode : {false, true}) {
      const GroupRingZ sg = spectrum_euler(g, signed_mode), sh = spectrum_euler(h, signed_mode);
      const std::string mode = signed_mode ? " (signed)" : " (unsigned)";
      rec.expect("spectrum is additive on disjoint unions" + mode,
                 spectrum_euler(disjoint_union(g, h), signed_mode) == sg + sh, show(g) + ", " + show(h));
      rec.expect("spectrum is multiplicative on products" + mode,
                 spectrum_euler(product(g, h), signed_mode) == sg * sh, show(g) + ", " + show(h));
    }
  }
}

void lifts_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0x63);
  for (std::int64_t n = 1; n <= 6; ++n)
    for (int k = 0; k < 12; ++k) {
      const GradedEndo g = gen.graded(n <= 3 ? 12 : 8);
      const std::string label = "n = " + std::to_string(n) + ", " + show(g);
      for (bool signed_mode : {false, true}) {
        const GroupRingZ s = spectrum_euler(g, signed_mode);
        rec.expect("spectrum of ρ̃_n is ρ̃_n of the spectrum", spectrum_euler(rho_tilde(n, g), signed_mode) ==
                                                                  rho_tilde(n, s),
                   label);
        rec.expect("spectrum of σ_n is σ_n of the spectrum", spectrum_euler(sigma(n, g), signed_mode) == sigma(n, s),
                   label);
        rec.expect("σ_n∘ρ̃_n has the spectrum of n copies",
                   spectrum_euler(sigma(n, rho_tilde(n, g)), signed_mode) == spectrum_euler(copies(n, g), signed_mode),
                   label);
        rec.expect("ρ̃_n∘σ_n has the spectrum of the product with (Z_n, γ)",
                   spectrum_euler(rho_tilde(n, sigma(n, g)), signed_mode) ==
                       spectrum_euler(product(g, GradedEndo::cyclic(n)), signed_mode),
                   label);
      }
    }
}

void intertwining_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0x64);
  for (std::int64_t n = 1; n <= 6; ++n)
    for (int k = 0; k < 10; ++k) {
      const IntMatrix m = gen.coin() ? gen.cyclotomic_matrix(12, 2) : gen.matrix(gen.range(1, 4), 3);
      const Eigen::Index s = m.rows();
      // S = diag(I, M, ..., M^{n−1}) conjugates Φ_n(M^n) into f·Φ_n(1) = P ⊗ M.
      IntMatrix big_s = IntMatrix::Zero(n * s, n * s);
      IntMatrix power_m = IntMatrix::Identity(s, s);
      for (std::int64_t i = 0; i < n; ++i) {
        big_s.block(i * s, i * s, s, s) = power_m;
        power_m = (power_m * m).eval();
      }
      const IntMatrix lhs = big_s * verschiebung_matrix(n, matrix_power(m, static_cast<std::uint64_t>(n)));
      const IntMatrix rhs = kronecker(cyclic_permutation_matrix(n), m) * big_s;
      rec.expect("S·Φ_n(Mⁿ) = (P ⊗ M)·S", lhs == rhs, "n = " + std::to_string(n) + ", M = " + to_json(m).dump());
    }
}

void galois_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0x6a);
  for (int k = 0; k < 100; ++k) {
    const GradedEndo g = gen.graded();
    const GroupRingZ s = spectrum_euler(g);
    std::map<std::int64_t, std::set<Integer>> by_order;
    for (const auto& [r, c] : s.terms()) by_order[r.order()].insert(c);
    bool constant = true;
    for (const auto& [d, cs] : by_order)
      constant = constant && cs.size() == 1 && static_cast<std::int64_t>(
                                                   std::count_if(s.terms().begin(), s.terms().end(),
                                                                 [&](const auto& t) { return t.first.order() == d; })) ==
                                                   euler_phi(d);
    rec.expect("spectrum coefficients are constant on primitive roots of each order", constant, show(g));
  }
}

void examples_group(Recorder& rec, std::uint64_t) {
  const IntMatrix rot = mat({{0, -1}, {1, 0}});
  const auto q = quasi_unipotent_check(GradedEndo::single(0, rot));
  rec.expect("rotation is quasi-unipotent with Φ₄", q.ok && q.per_degree.at(0).cyclo == std::map<std::int64_t, std::size_t>{{4, 1}});
  rec.expect("[[2]] is not quasi-unipotent", !quasi_unipotent_check(GradedEndo::single(0, mat({{2}}))).ok);
  const auto id3 = quasi_unipotent_check(GradedEndo::single(0, IntMatrix::Identity(3, 3)));
  rec.expect("identity 3×3 gives Φ₁³", id3.ok && id3.per_degree.at(0).cyclo == std::map<std::int64_t, std::size_t>{{1, 3}});
  rec.expect("zero eigenvalue accepted only when allowed",
             !quasi_unipotent_check(GradedEndo::single(0, mat({{0}}))).ok &&
                 quasi_unipotent_check(GradedEndo::single(0, mat({{0}})), true).ok);
  rec.expect("spectrum of the rotation is e(1/4) + e(3/4)",
             spectrum_euler(GradedEndo::single(0, rot)) == e(1, 4) + e(3, 4));
  rec.expect("spectrum of [[1]] is e(0)", spectrum_euler(GradedEndo::point()) == e(0, 1));
  GradedEndo two;
  two.add_block(0, mat({{1}}));
  two.add_block(1, mat({{1}}));
  rec.expect("degrees 0 and 1: signed 0, unsigned 2e(0)",
             spectrum_euler(two, true).is_zero() && spectrum_euler(two) == e(0, 1, 2));
  const GradedEndo r2 = sigma(2, GradedEndo::single(0, rot));
  rec.expect("σ_2 of the rotation is −I with spectrum 2e(1/2)",
             r2.blocks().at(0) == mat({{-1, 0}, {0, -1}}) && spectrum_euler(r2) == e(1, 2, 2));
  const GradedEndo r4 = sigma(4, GradedEndo::single(0, rot));
  rec.expect("σ_4 of the rotation is I with spectrum 2e(0)",
             r4.blocks().at(0) == IntMatrix::Identity(2, 2) && spectrum_euler(r4) == e(0, 1, 2));
  const GradedEndo v2 = rho_tilde(2, GradedEndo::point());
  rec.expect("ρ̃_2[[1]] = [[0,1],[1,0]] with spectrum e(0) + e(1/2)",
             v2.blocks().at(0) == mat({{0, 1}, {1, 0}}) && spectrum_euler(v2) == e(0, 1) + e(1, 2));
  const GradedEndo v3 = rho_tilde(3, GradedEndo::point());
  rec.expect("ρ̃_3[[1]] is the 3-cycle with spectrum e(0) + e(1/3) + e(2/3)",
             v3.blocks().at(0) == cyclic_permutation_matrix(3) && spectrum_euler(v3) == e(0, 1) + e(1, 3) + e(2, 3));
  const GradedEndo u = disjoint_union(GradedEndo::point(), GradedEndo::single(0, mat({{-1}})));
  rec.expect("union of [[1]] and [[−1]] is diag(1, −1)",
             u.blocks().at(0) == mat({{1, 0}, {0, -1}}) && spectrum_euler(u) == e(0, 1) + e(1, 2));
  const GradedEndo p = product(GradedEndo::single(0, mat({{-1}})), GradedEndo::single(0, mat({{-1}})));
  rec.expect("[[−1]] × [[−1]] = [[1]]", p.blocks().at(0) == mat({{1}}) && spectrum_euler(p) == e(0, 1));
  const GradedEndo g = GradedEndo::single(1, rot);
  rec.expect("product with the point is the identity", product(g, GradedEndo::point()) == g);
  bool threw = false;
  try {
    spectrum_euler(GradedEndo::single(0, mat({{2}})));
  } catch (const DomainError&) {
    threw = true;
  }
  rec.expect("spectrum of a non-quasi-unipotent map is a domain error", threw);
}

}  // namespace

void register_dynamical(std::vector<Group>& out) {
  out.push_back({"dynamical", "charpoly", charpoly_group});
  out.push_back({"dynamical", "ring-homomorphism", ring_homomorphism_group});
  out.push_back({"dynamical", "sigma-rho-lifts", lifts_group});
  out.push_back({"dynamical", "verschiebung-intertwining", intertwining_group});
  out.push_back({"dynamical", "galois-stability", galois_group});
  out.push_back({"dynamical", "examples", examples_group});
}

}  // namespace bost::verify
