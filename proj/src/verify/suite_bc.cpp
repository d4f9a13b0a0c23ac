#include <numeric>

#include "bost/json_io.hpp"
#include "bost/verify/oracles.hpp"
#include "bost/verify/random.hpp"
#include "bost/verify/suites.hpp"

namespace bost::verify {

namespace {

std::string show(const BCElem& u) { return to_json(u).dump(); }

using BC = BCElem;
BC inj(const GroupRingZ& x) { return BC::inject(x); }
BC mt(std::int64_t n) { return BC::mu_tilde(n); }
BC ms(std::int64_t n) { return BC::mu_star(n); }
BC scalar(std::int64_t k) { return BC::inject(GroupRingZ::basis(QZ(), Integer(k))); }

void generator_relations_group(Recorder& rec, std::uint64_t) {
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t m = 1; m <= 12; ++m) {
      const std::string nm = "n = " + std::to_string(n) + ", m = " + std::to_string(m);
      rec.expect("μ̃_{nm} = μ̃_n·μ̃_m", mt(n * m) == mt(n) * mt(m), nm);
      rec.expect("μ*_{nm} = μ*_n·μ*_m", ms(n * m) == ms(n) * ms(m), nm);
      if (std::gcd(n, m) == 1) rec.expect("μ̃_n·μ*_m = μ*_m·μ̃_n for coprime n, m", mt(n) * ms(m) == ms(m) * mt(n), nm);
    }
  for (std::int64_t n = 1; n <= 12; ++n) rec.expect("μ*_n·μ̃_n = n", ms(n) * mt(n) == scalar(n), std::to_string(n));
}

void crossed_relations_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0x32);
  for (int trial = 0; trial < 1000; ++trial) {
    const GroupRingZ x = gen.group_ring();
    const std::int64_t n = gen.range(1, 12);
    const std::string d = to_json(x).dump() + ", n = " + std::to_string(n);
    rec.expect("μ̃_n·x·μ*_n = ρ̃_n(x)", mt(n) * inj(x) * ms(n) == inj(rho_tilde(n, x)), d);
    rec.expect("μ*_n·x = σ_n(x)·μ*_n", ms(n) * inj(x) == inj(sigma(n, x)) * ms(n), d);
    rec.expect("x·μ̃_n = μ̃_n·σ_n(x)", inj(x) * mt(n) == mt(n) * inj(sigma(n, x)), d);
  }
}

void group_ring_relations_in_algebra_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0x3a);
  for (int trial = 0; trial < 1000; ++trial) {
    const GroupRingZ x = gen.group_ring(), y = gen.group_ring();
    const std::int64_t n = gen.range(1, 12), m = gen.range(1, 12);
    // ρ̃_n as conjugation, σ_n from μ*_n·x·μ̃_n = n·σ_n(x).
    auto rho_alg = [](std::int64_t k, const BC& u) { return mt(k) * u * ms(k); };
    auto n_sigma_alg = [](std::int64_t k, const BC& u) { return ms(k) * u * mt(k); };
    rec.expect("μ*_n·x·μ̃_n = n·σ_n(x)", n_sigma_alg(n, inj(x)) == scalar(n) * inj(sigma(n, x)));
    rec.expect("ρ̃_n(σ_n(x)·y) = x·ρ̃_n(y) in the algebra",
               rho_alg(n, inj(sigma(n, x)) * inj(y)) == inj(x) * rho_alg(n, inj(y)),
               to_json(x).dump() + ", " + to_json(y).dump() + ", n = " + std::to_string(n));
    const std::int64_t g = std::gcd(n, m);
    rec.expect("n·σ_n(ρ̃_m(x)) = n·gcd·ρ̃_{m'}(σ_{n'}(x)) in the algebra",
               n_sigma_alg(n, rho_alg(m, inj(x))) == scalar(n * g) * inj(rho_tilde(m / g, sigma(n / g, x))),
               to_json(x).dump() + ", n = " + std::to_string(n) + ", m = " + std::to_string(m));
  }
}

template <class Elem, class Make>
std::int64_t associativity_failures(Make make, int triples, std::string* example) {
  std::int64_t failures = 0;
  for (int t = 0; t < triples; ++t) {
    const Elem u = make(), v = make(), w = make();
    if (!((u * v) * w == u * (v * w))) {
      if (failures++ == 0 && example) *example = to_json(map_coefficients<BCElem>(u, [](auto& x) { return x; })).dump();
    }
  }
  return failures;
}

void associativity_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0xa550);
  std::string example;
  const auto failures = associativity_failures<BC>([&] { return gen.bc_word(6, 12); }, 500, &example);
  rec.expect("(u·v)·w = u·(v·w) on 500 random word triples", failures == 0,
             std::to_string(failures) + " failures, first u = " + example);
  Gen gen2(seed ^ 0xa551);
  for (int t = 0; t < 100; ++t) {
    const BC u = gen2.bc(2, 4, 6), v = gen2.bc(2, 4, 6);
    const long double defect = representation_defect(u, v, u * v, 48);
    rec.expect("products agree with composition of operators on ℓ²(N)", defect < 1e-9L,
               show(u) + " · " + show(v));
  }
}

/// The Frobenius twist replaced by the identity: x·μ̃_n = μ̃_n·x.
struct FrobeniusDroppedRules : IntegralRules<GroupRingZ> {
  static GroupRingZ frobenius(std::int64_t, const GroupRingZ& x) { return x; }
};
/// μ*_g·μ̃_g = 1 instead of g.
struct CollisionDroppedRules : IntegralRules<GroupRingZ> {
  static GroupRingZ collision(std::int64_t, GroupRingZ z) { return z; }
};

void mutation_group(Recorder& rec, std::uint64_t seed) {
  auto run = [&](auto tag) {
    using Elem = CrossedProduct<GroupRingZ, decltype(tag)>;
    Gen gen(seed ^ 0xa550);
    return associativity_failures<Elem>(
        [&] {
          BC w = gen.bc_word(6, 12);
          while (w.terms().empty()) w = gen.bc_word(6, 12);
          const auto& [k, x] = *w.terms().begin();
          return Elem::word(k.first, x, k.second);
        },
        500, nullptr);
  };
  rec.expect("dropping the Frobenius twist breaks associativity", run(FrobeniusDroppedRules{}) > 0);
  rec.expect("dropping the collision factor breaks associativity", run(CollisionDroppedRules{}) > 0);
}

void agreement_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0x99);
  for (int t = 0; t < 300; ++t) {
    const GroupRingZ x = gen.group_ring(), y = gen.group_ring();
    rec.expect("products of injected elements agree with the group ring", inj(x) * inj(y) == inj(x * y));
  }
  rec.expect("inject(e(1/2)) is the single word (1, e(1/2), 1)",
             inj(GroupRingZ::basis(QZ(1, 2))).terms().size() == 1 &&
                 inj(GroupRingZ::basis(QZ(1, 2))).coeff(1, 1) == GroupRingZ::basis(QZ(1, 2)));
  rec.expect("μ*_1 is the unit", ms(1) == BC::one());
  rec.expect("μ*_2·μ̃_2 = 2", ms(2) * mt(2) == scalar(2));
  rec.expect("μ̃_2·μ*_3·μ̃_3·μ*_2 = 3·ρ̃_2(e(0))",
             (mt(2) * ms(3)) * (mt(3) * ms(2)) == scalar(3) * inj(rho_tilde(2, GroupRingZ::one())));
}

void rationalize_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0x41);
  using Q = BCElemQ;
  auto mu = [](std::int64_t n) { return Q::word(n, GroupRingQ::one(), 1); };
  auto mus = [](std::int64_t n) { return Q::word(1, GroupRingQ::one(), n); };
  for (std::int64_t n = 1; n <= 12; ++n) {
    rec.expect("μ*_n·μ_n = 1", mus(n) * mu(n) == Q::one(), std::to_string(n));
    rec.expect("μ̃_n ↦ n·μ_n", rationalize(mt(n)) == Q::word(n, GroupRingQ::basis(QZ(), Rational(n)), 1));
  }
  for (int t = 0; t < 300; ++t) {
    const GroupRingQ x = gen.group_ring_q();
    const std::int64_t n = gen.range(1, 12);
    rec.expect("μ_n·x·μ*_n = ρ_n(x)", mu(n) * Q::inject(x) * mus(n) == Q::inject(rho(n, x)));
    const BC u = gen.bc(2, 4, 8), v = gen.bc(2, 4, 8);
    rec.expect("rationalize is multiplicative", rationalize(u * v) == rationalize(u) * rationalize(v),
               show(u) + " · " + show(v));
  }
  rec.expect("rationalize(unit) = unit", rationalize(BC::one()) == Q::one());
  rec.expect("rationalize(μ̃_2·e(0)·μ*_2) = e(0) + e(1/2)",
             rationalize(mt(2) * ms(2)) == Q::inject(to_rational(rho_tilde(2, GroupRingZ::one()))));
}

}  // namespace

void register_bc(std::vector<Group>& out) {
  out.push_back({"bc", "generator-relations", generator_relations_group});
  out.push_back({"bc", "crossed-relations", crossed_relations_group});
  out.push_back({"bc", "group-ring-relations", group_ring_relations_in_algebra_group});
  out.push_back({"bc", "associativity", associativity_group});
  out.push_back({"bc", "mutation", mutation_group});
  out.push_back({"bc", "group-ring-agreement", agreement_group});
  out.push_back({"bc", "rationalize", rationalize_group});
}

}  // namespace bost::verify
