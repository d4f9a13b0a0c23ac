// One line per acceptance criterion; exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "bost/expectation.hpp"
#include "bost/group_ring.hpp"
#include "bost/verify/oracles.hpp"
#include "bost/verify/suites.hpp"
#include "process.hpp"

using namespace bost;
using namespace bost::verify;

namespace {

// Tolerances and time budgets.
constexpr double kHalfExpectationTol = 1e-9;
constexpr double kZetaTol = 1e-10;
constexpr double kPolylogDirectTol = 1e-6;
constexpr std::int64_t kPolylogDirectTerms = 1'000'000;
constexpr double kDistributionTol = 1e-8;
constexpr double kRelationsBudget = 10.0;
constexpr double kNumericsBudget = 5.0;
constexpr double kSelftestBudget = 60.0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

void require_groups(Outcome& out, const std::string& suite, const std::vector<std::string>& groups) {
  const auto reports = run_named(suite, groups, kDefaultSeed);
  out.require(reports.size() == groups.size(), suite + ": missing groups");
  for (const auto& r : reports)
    for (const auto& c : r.checks) out.require(c.passed, r.suite + "/" + r.group + ": " + c.name + " [" + c.detail + "]");
}

std::string seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

Outcome criterion_relations() {
  Outcome o;
  require_groups(o, "bc", {"generator-relations", "crossed-relations", "group-ring-relations"});
  return o;
}

Outcome criterion_orbit_relations() {
  Outcome o;
  require_groups(o, "equivariant", {"sigma-rho-relations", "permutation-oracles"});
  return o;
}

Outcome criterion_chi_diagrams() {
  Outcome o;
  require_groups(o, "equivariant", {"chi-sigma-diagram", "chi-rho-diagram"});
  return o;
}

Outcome criterion_associativity() {
  Outcome o;
  require_groups(o, "bc", {"associativity", "mutation"});
  return o;
}

Outcome criterion_witt() {
  Outcome o;
  require_groups(o, "witt", {"ghost-roundtrip", "frobenius-verschiebung", "burnside-homomorphism",
                             "sigma-rho-correspondence"});
  return o;
}

Outcome criterion_dynamical() {
  Outcome o;
  require_groups(o, "dynamical", {"ring-homomorphism", "sigma-rho-lifts", "examples"});
  return o;
}

Outcome criterion_numerics() {
  Outcome o;
  const double pi = std::numbers::pi;
  const double half = std::abs(expectation(GroupRingZ::basis(QZ(1, 2)), 2.0) - Complex(-0.5));
  o.require(half < kHalfExpectationTol, "⟨e(1/2)⟩_2 off by " + std::to_string(half));
  const double zeta = std::abs(riemann_zeta(2.0) - pi * pi / 6);
  o.require(zeta < kZetaTol, "ζ(2) off by " + std::to_string(zeta));
  for (const QZ r : {QZ(1, 3), QZ(1, 4), QZ(1, 5)}) {
    const std::complex<long double> direct = polylog_direct(2.0, r, kPolylogDirectTerms);
    const Complex formula = polylog_at_root(2.0, r);
    const double err = std::abs(Complex(static_cast<double>(direct.real()), static_cast<double>(direct.imag())) - formula);
    o.require(err < kPolylogDirectTol, "Li_2 at " + r.str() + " off by " + std::to_string(err));
  }
  const double beta = 2.0;
  for (std::int64_t n : {2, 3})
    for (std::int64_t den : {1, 2, 3, 5, 7}) {
      const QZ r(1 % den, den);
      GroupRingZ fibre;
      for (const QZ& s : preimages(r, n)) fibre.add_term(s, 1);
      const Complex lhs = expectation(fibre, beta);
      const Complex rhs = std::pow(double(n), 1 - beta) * expectation(GroupRingZ::basis(r), beta);
      const double err = std::abs(lhs - rhs);
      o.require(err < kDistributionTol,
                "distribution relation n = " + std::to_string(n) + " at " + r.str() + " off by " + std::to_string(err));
    }
  return o;
}

Outcome criterion_scissors() {
  Outcome o;
  require_groups(o, "scissors", {"finite-set-rank", "induced-maps"});
  return o;
}

Outcome criterion_selftest() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto r = bost::test::run_cli("selftest");
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(r.exit_code == 0, "selftest exited " + std::to_string(r.exit_code));
  o.require(elapsed < kSelftestBudget, "selftest took " + seconds(elapsed));
  using bost::test::quote;
  const std::vector<std::pair<std::string, std::string>> refeeds = {
      {"groupring sigma --n 1", R"([{"r":"5/10","c":"3"},{"r":"2/3","c":-1}])"},
      {"groupring sigma --rational --n 1", R"([{"r":"1/6","c":"-2/8"}])"},
      {"equiv sigma --n 1", R"({"orbits":{"4":3,"2":-1}})"},
      {"witt frob --n 1", R"({"trunc":[1,2,4],"coords":{"4":5}})"},
      {"dyn sigma --n 1", R"({"blocks":[{"degree":2,"matrix":[[1]]},{"degree":0,"matrix":[[0,-1],[1,-1]]}]})"},
  };
  for (const auto& [cmd, payload] : refeeds) {
    const auto first = bost::test::run_cli(cmd + " --elem " + quote(payload));
    const auto second = bost::test::run_cli(cmd + " --elem " + quote(first.out));
    o.require(first.exit_code == 0 && second.exit_code == 0 && first.out == second.out, "round-trip of " + cmd);
  }
  o.detail = (o.detail.empty() ? "" : o.detail + "; ") + "selftest " + seconds(elapsed);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string name;
    std::function<Outcome()> run;
    double budget;
  };
  const std::vector<Criterion> criteria = {
      {1, "Bost–Connes relations for n, m <= 12 and 1000 random elements", criterion_relations, kRelationsBudget},
      {2, "σ_n∘ρ̃_n = n and ρ̃_n∘σ_n = ·[Z_n] for d, n <= 12", criterion_orbit_relations, 0},
      {3, "χ intertwines σ_n and ρ̃_n for d, n <= 12", criterion_chi_diagrams, 0},
      {4, "normal-form associativity on 500 triples; corrupted rules fail", criterion_associativity, 0},
      {5, "Witt vectors: round-trip, projection formula, Burnside map, σ/ρ̃ ↔ F/V", criterion_witt, 0},
      {6, "spectra: ring homomorphism, lifts of σ_n and ρ̃_n, rotation example", criterion_dynamical, 0},
      {7, "numerics: expectations, ζ(2), polylogarithms, distribution relation", criterion_numerics, kNumericsBudget},
      {8, "finite-set K₀ ranks and induced maps", criterion_scissors, 0},
      {9, "selftest exits 0 within budget; CLI JSON round-trips byte-stable", criterion_selftest, 0},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0) o.require(elapsed < c.budget, "over budget of " + seconds(c.budget));
    all = all && o.ok;
    std::cout << "criterion " << c.number << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.name << " (" << seconds(elapsed)
              << ")";
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
