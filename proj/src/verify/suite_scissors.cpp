#include <mutex>

#include "bost/errors.hpp"
#include "bost/json_io.hpp"
#include "bost/scissors.hpp"
#include "bost/verify/random.hpp"
#include "bost/verify/suites.hpp"

namespace bost::verify {

namespace {

struct Presented {
  AssemblerPresentation p;
  K0Presentation k;
};

/// Assemblers are shared between groups; building level 12 dominates the suite.
const Presented& level(std::int64_t n) {
  static std::mutex mutex;
  static std::map<std::int64_t, Presented> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    AssemblerPresentation p = finite_set_assembler(n);
    K0Presentation k = k0_from_presentation(p);
    it = cache.emplace(n, Presented{std::move(p), std::move(k)}).first;
  }
  return it->second;
}

/// Orbit lengths of the generators when each is a single orbit with
/// multiplicity one, empty otherwise.
std::vector<std::int64_t> generator_orbits(const K0Presentation& k) {
  std::vector<std::int64_t> out;
  for (const auto& g : k.generators) {
    if (g.size() != 1 || g.begin()->second != 1) return {};
    const OrbitSum x = OrbitSum::parse_label(g.begin()->first);
    if (x.orbits().size() != 1 || x.orbits().begin()->second != 1) return {};
    out.push_back(x.orbits().begin()->first);
  }
  return out;
}

/// Matrix of f on orbit bases: column j holds the multiplicities of f(Z/d_j).
template <class F>
IntMatrix orbit_model_matrix(const std::vector<std::int64_t>& from, const std::vector<std::int64_t>& to, F&& f) {
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(to.size()), static_cast<Eigen::Index>(from.size()));
  for (std::size_t j = 0; j < from.size(); ++j) {
    const OrbitSum image = f(OrbitSum::orbit(from[j]));
    for (std::size_t i = 0; i < to.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = image.multiplicity(to[i]);
  }
  return m;
}

std::vector<std::int64_t> scaled_divisors(std::int64_t n, std::int64_t level_n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d : divisors(level_n)) out.push_back(n * d);
  return out;
}

OrbitSum from_coordinates(const std::vector<std::int64_t>& orbits, const IntMatrix& column) {
  OrbitSum x;
  for (std::size_t i = 0; i < orbits.size(); ++i) x.add_orbits(orbits[i], column(static_cast<Eigen::Index>(i), 0));
  return x;
}

IntMatrix to_coordinates(const std::vector<std::int64_t>& orbits, const OrbitSum& x) {
  IntMatrix v(static_cast<Eigen::Index>(orbits.size()), 1);
  for (std::size_t i = 0; i < orbits.size(); ++i) v(static_cast<Eigen::Index>(i), 0) = x.multiplicity(orbits[i]);
  return v;
}

void rank_group(Recorder& rec, std::uint64_t) {
  for (std::int64_t n = 1; n <= 12; ++n) {
    const auto& [p, k] = level(n);
    const std::string label = "N = " + std::to_string(n);
    rec.expect("K₀ is free of rank τ(N)", k.rank == static_cast<std::int64_t>(divisors(n).size()) && k.torsion.empty(),
               label + ": rank " + std::to_string(k.rank) + ", " + std::to_string(k.torsion.size()) + " torsion factors");
    const std::vector<std::int64_t> orbits = generator_orbits(k);
    rec.expect("the generators are the orbits Z/d, d | N", orbits == divisors(n), label);
    if (orbits != divisors(n)) continue;
    bool classes = true;
    for (const auto& object : p.objects()) {
      const OrbitSum x = OrbitSum::parse_label(object);
      std::vector<Integer> want;
      for (std::int64_t d : orbits) want.push_back(x.multiplicity(d));
      classes = classes && k.basis_map.at(object) == want;
    }
    rec.expect("each object's class is its orbit-multiplicity vector", classes, label);
  }
}

void induced_group(Recorder& rec, std::uint64_t) {
  for (std::int64_t big_n = 1; big_n <= 8; ++big_n) {
    const auto& [p, kp] = level(big_n);
    const std::vector<std::int64_t> orbits = generator_orbits(kp);
    for (std::int64_t n = 1; n <= 4; ++n) {
      const std::string label = "N = " + std::to_string(big_n) + ", n = " + std::to_string(n);
      const auto sigma_n = [n](const OrbitSum& x) { return sigma(n, x); };
      const auto rho_n = [n](const OrbitSum& x) { return rho_tilde(n, x); };
      rec.expect("induced σ_n equals the orbit-model matrix",
                 induced_k0_map(p, kp, p, kp, orbit_functor_images(p, sigma_n)) ==
                     orbit_model_matrix(orbits, orbits, sigma_n),
                 label);
      const AssemblerPresentation q = finite_set_assembler(scaled_divisors(n, big_n), 2 * n * big_n);
      const K0Presentation kq = k0_from_presentation(q);
      const std::vector<std::int64_t> target = generator_orbits(kq);
      rec.expect("the ρ̃_n target is free on the orbits Z/nd", target == scaled_divisors(n, big_n) && kq.torsion.empty(),
                 label);
      rec.expect("induced ρ̃_n equals the orbit-model matrix",
                 induced_k0_map(p, kp, q, kq, orbit_functor_images(p, rho_n)) ==
                     orbit_model_matrix(orbits, target, rho_n),
                 label);
    }
  }
}

void monoidal_group(Recorder& rec, std::uint64_t) {
  const std::int64_t big_n = 6;
  const auto& [p, kp] = level(big_n);
  const std::vector<std::int64_t> orbits = generator_orbits(kp);
  for (std::int64_t n = 2; n <= 4; ++n) {
    const IntMatrix s = induced_k0_map(p, kp, p, kp, orbit_functor_images(p, [n](const OrbitSum& x) { return sigma(n, x); }));
    const AssemblerPresentation q = finite_set_assembler(scaled_divisors(n, big_n), 2 * n * big_n);
    const K0Presentation kq = k0_from_presentation(q);
    const std::vector<std::int64_t> target = generator_orbits(kq);
    const IntMatrix r =
        induced_k0_map(p, kp, q, kq, orbit_functor_images(p, [n](const OrbitSum& x) { return rho_tilde(n, x); }));
    bool sigma_multiplicative = true, rho_multiplicative = true;
    for (std::int64_t d : orbits)
      for (std::int64_t e : orbits) {
        const IntMatrix a = to_coordinates(orbits, OrbitSum::orbit(d)), b = to_coordinates(orbits, OrbitSum::orbit(e));
        const IntMatrix ab = to_coordinates(orbits, OrbitSum::orbit(d) * OrbitSum::orbit(e));
        sigma_multiplicative = sigma_multiplicative &&
                               from_coordinates(orbits, s * ab) ==
                                   from_coordinates(orbits, s * a) * from_coordinates(orbits, s * b);
        rho_multiplicative = rho_multiplicative && from_coordinates(target, r * ab) ==
                                                       from_coordinates(target, r * a) * from_coordinates(target, r * b);
      }
    rec.expect("induced σ_n respects products", sigma_multiplicative, "n = " + std::to_string(n));
    rec.expect("induced ρ̃_n does not respect products", !rho_multiplicative, "n = " + std::to_string(n));
  }
}

void presentation_group(Recorder& rec, std::uint64_t seed) {
  const auto rank_torsion = [](const AssemblerPresentation& p) {
    const K0Presentation k = k0_from_presentation(p);
    return std::pair(k.rank, k.torsion);
  };
  using RT = std::pair<std::int64_t, std::vector<Integer>>;
  rec.expect("{a}: rank 1", rank_torsion(AssemblerPresentation({"a"}, {})) == RT{1, {}});
  rec.expect("{a, b, c} with a + b = c: rank 2",
             rank_torsion(AssemblerPresentation({"a", "b", "c"}, {{"c", {"a", "b"}}})) == RT{2, {}});
  rec.expect("a = a + a: rank 0", rank_torsion(AssemblerPresentation({"a"}, {{"a", {"a", "a"}}})) == RT{0, {}});
  rec.expect("a = 2b, b = 2a: Z/3",
             rank_torsion(AssemblerPresentation({"a", "b"}, {{"a", {"b", "b"}}, {"b", {"a", "a"}}})) == RT{0, {3}});
  rec.expect("a = 4a: Z/3", rank_torsion(AssemblerPresentation({"a"}, {{"a", {"a", "a", "a", "a"}}})) == RT{0, {3}});
  rec.expect("a = 3b, c = 4a: free on b", [&] {
    const K0Presentation k =
        k0_from_presentation(AssemblerPresentation({"a", "b", "c"}, {{"a", {"b", "b", "b"}}, {"c", {"a", "a", "a", "a"}}}));
    return k.rank == 1 && k.torsion.empty() && k.class_of({{"c", 1}}) == std::vector<Integer>{12} &&
           k.class_of({{"a", 1}}) == std::vector<Integer>{3};
  }());
  const auto& [p2, k2] = level(2);
  rec.expect("N = 1 is free on the point", level(1).k.rank == 1 && level(1).k.generators.size() == 1 &&
                                                level(1).k.generators[0] == ObjectCombination{{"Z/1", 1}});
  rec.expect("N = 2 is free on Z/1, Z/2", generator_orbits(k2) == std::vector<std::int64_t>{1, 2});
  rec.expect("N = 6 has rank 4", level(6).k.rank == 4 && level(6).k.torsion.empty());
  rec.expect("identity map is the identity matrix",
             induced_k0_map(p2, k2, p2, k2, orbit_functor_images(p2, [](const OrbitSum& x) { return x; })) ==
                 IntMatrix::Identity(2, 2));
  const auto& [p4, k4] = level(4);
  IntMatrix s2(3, 3);
  s2 << 1, 2, 0, 0, 0, 2, 0, 0, 0;
  rec.expect("σ_2 on level 4: Z/4 ↦ 2Z/2, Z/2 ↦ 2Z/1, Z/1 ↦ Z/1",
             induced_k0_map(p4, k4, p4, k4, orbit_functor_images(p4, [](const OrbitSum& x) { return sigma(2, x); })) ==
                     s2);
  bool violated = false;
  std::map<std::string, std::string> collapse;
  for (const auto& object : p2.objects()) collapse[object] = "Z/1";
  try {
    induced_k0_map(p2, p2, collapse);
  } catch (const RelationViolation&) {
    violated = true;
  }
  rec.expect("collapsing every object to a point violates the relations", violated);
  Gen gen(seed ^ 0x5c);
  for (int t = 0; t < 40; ++t) {
    const std::int64_t n = static_cast<std::int64_t>(level(12).p.objects().size());
    const auto& object = level(12).p.objects()[static_cast<std::size_t>(gen.range(0, n - 1))];
    const auto& other = level(12).p.objects()[static_cast<std::size_t>(gen.range(0, n - 1))];
    const OrbitSum x = OrbitSum::parse_label(object), y = OrbitSum::parse_label(other);
    std::vector<Integer> sum = level(12).k.class_of({{object, 1}, {other, 1}}), want;
    for (std::int64_t d : divisors(12)) want.push_back((x + y).multiplicity(d));
    rec.expect("classes add like orbit sums", sum == want, object + " + " + other);
  }
}

}  // namespace

void register_scissors(std::vector<Group>& out) {
  out.push_back({"scissors", "finite-set-rank", rank_group});
  out.push_back({"scissors", "induced-maps", induced_group});
  out.push_back({"scissors", "monoidal", monoidal_group});
  out.push_back({"scissors", "presentations", presentation_group});
}

}  // namespace bost::verify
