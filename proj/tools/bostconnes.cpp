#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "bost/errors.hpp"
#include "bost/json_io.hpp"
#include "bost/verify/suites.hpp"

using namespace bost;

namespace {

struct Options {
  std::int64_t n = 1;
  double beta = 2;
  double a = 1;
  bool signed_mode = false;
  bool allow_zero = false;
  bool rational = false;
  bool normalized = false;
  bool pretty = false;
  bool use_stdin = false;
  bool serial = false;
  std::string trunc = "24";
  std::string elem, x, y;
  std::string functor;
  std::int64_t level = 0;
  std::vector<std::string> suites;
  std::uint64_t seed = verify::kDefaultSeed;
};

std::string read_stream(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

/// Inline JSON, or a file when the value starts with '@'.
std::string payload_text(const std::string& value) {
  if (value.empty() || value[0] != '@') return value;
  std::ifstream in(value.substr(1));
  if (!in) throw InvalidInput("cannot read " + value.substr(1));
  return read_stream(in);
}

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) {}

  Json elem() const {
    if (o_.use_stdin) return parse_json_text(stdin_text(), "$");
    if (o_.elem.empty()) throw SchemaError("--elem", "missing payload");
    return parse_json_text(payload_text(o_.elem), "--elem");
  }

  /// --x and --y, or a two-element array on standard input.
  std::pair<Json, Json> operands() const {
    if (o_.use_stdin) {
      const Json j = parse_json_text(stdin_text(), "$");
      if (!j.is_array() || j.size() != 2) throw SchemaError("$", "expected an array [x, y]");
      return {j[0], j[1]};
    }
    if (o_.x.empty()) throw SchemaError("--x", "missing payload");
    if (o_.y.empty()) throw SchemaError("--y", "missing payload");
    return {parse_json_text(payload_text(o_.x), "--x"), parse_json_text(payload_text(o_.y), "--y")};
  }

  std::int64_t n() const {
    if (o_.n < 1) throw InvalidInput("--n must be a positive integer");
    return o_.n;
  }

  TruncationSet trunc() const {
    const Json j = parse_json_text(o_.trunc, "--trunc");
    if (j.is_array()) return truncation_from_json(j, "--trunc");
    const std::int64_t m = int64_from_json(j, "--trunc");
    if (m < 1) throw SchemaError("--trunc", "must be a positive integer");
    return TruncationSet::divisors_of(m);
  }

  bool trunc_given() const { return trunc_given_; }
  void set_trunc_given(bool given) { trunc_given_ = given; }

  const Options& opts() const { return o_; }

 private:
  const std::string& stdin_text() const {
    if (!stdin_read_) {
      stdin_ = read_stream(std::cin);
      stdin_read_ = true;
    }
    return stdin_;
  }

  const Options& o_;
  bool trunc_given_ = false;
  mutable bool stdin_read_ = false;
  mutable std::string stdin_;
};

/// In BC and group-ring JSON, rational coefficients select the rational mode.
bool is_rational_group_ring(const Json& j, bool forced) { return forced || group_ring_json_is_rational(j); }

bool is_rational_bc(const Json& j, bool forced) {
  if (forced) return true;
  if (!j.is_array()) return false;
  for (const auto& w : j)
    if (w.is_object() && w.contains("x") && group_ring_json_is_rational(w["x"])) return true;
  return false;
}

bool looks_like_bc(const Json& j) {
  return j.is_array() && !j.empty() && j[0].is_object() && j[0].contains("a");
}

Json complex_json(Complex z) { return format_complex(z); }

Json run_groupring(const std::string& cmd, const Runner& r) {
  const bool forced = r.opts().rational;
  if (cmd == "mul") {
    const auto [x, y] = r.operands();
    if (is_rational_group_ring(x, forced) || is_rational_group_ring(y, false))
      return to_json(group_ring_q_from_json(x, "--x") * group_ring_q_from_json(y, "--y"));
    return to_json(group_ring_z_from_json(x, "--x") * group_ring_z_from_json(y, "--y"));
  }
  if (cmd == "pi") return to_json(pi(r.n()));
  const Json e = r.elem();
  const bool rational = is_rational_group_ring(e, forced);
  if (cmd == "sigma") {
    if (rational) return to_json(sigma(r.n(), group_ring_q_from_json(e, "--elem")));
    return to_json(sigma(r.n(), group_ring_z_from_json(e, "--elem")));
  }
  if (cmd == "rho") {
    if (r.opts().normalized) {
      if (!rational) throw CoefficientModeError("ρ_n needs rational coefficients (pass --rational)");
      return to_json(rho(r.n(), group_ring_q_from_json(e, "--elem")));
    }
    if (rational) return to_json(rho_tilde(r.n(), group_ring_q_from_json(e, "--elem")));
    return to_json(rho_tilde(r.n(), group_ring_z_from_json(e, "--elem")));
  }
  if (cmd == "subring") {
    if (rational) throw CoefficientModeError("the subring test needs integer coefficients");
    return to_json(fixed_subring_membership(group_ring_z_from_json(e, "--elem")));
  }
  throw InvalidInput("unknown command " + cmd);
}

Json run_bc(const std::string& cmd, const Runner& r) {
  const bool forced = r.opts().rational;
  if (cmd == "mul") {
    const auto [x, y] = r.operands();
    if (is_rational_bc(x, forced) || is_rational_bc(y, false))
      return to_json(bc_q_from_json(x, "--x") * bc_q_from_json(y, "--y"));
    return to_json(bc_from_json(x, "--x") * bc_from_json(y, "--y"));
  }
  if (cmd == "rationalize") {
    const Json e = r.elem();
    if (is_rational_bc(e, false)) throw CoefficientModeError("rationalize expects integer coefficients");
    return to_json(rationalize(bc_from_json(e, "--elem")));
  }
  throw InvalidInput("unknown command " + cmd);
}

Json run_equiv(const std::string& cmd, const Runner& r) {
  if (cmd == "product") {
    const auto [x, y] = r.operands();
    if (x.is_array() || y.is_array()) return to_json(bold_k0_from_json(x, "--x") * bold_k0_from_json(y, "--y"));
    return to_json(orbit_sum_from_json(x, "--x") * orbit_sum_from_json(y, "--y"));
  }
  const Json e = r.elem();
  if (cmd == "chi") {
    if (e.is_array()) return to_json(bold_chi(bold_k0_from_json(e, "--elem")));
    return to_json(chi_hat_z(orbit_sum_from_json(e, "--elem")));
  }
  const OrbitSum x = orbit_sum_from_json(e, "--elem");
  if (cmd == "sigma") return to_json(sigma(r.n(), x));
  if (cmd == "rho") return to_json(rho_tilde(r.n(), x));
  throw InvalidInput("unknown command " + cmd);
}

Json run_witt(const std::string& cmd, const Runner& r) {
  if (cmd == "add" || cmd == "mul") {
    const auto [x, y] = r.operands();
    const WittVector a = witt_from_json(x, "--x"), b = witt_from_json(y, "--y");
    return to_json(cmd == "add" ? witt_add(a, b) : witt_mul(a, b));
  }
  const Json e = r.elem();
  if (cmd == "from-ghost") return to_json(witt_from_ghost(r.trunc(), ghost_from_json(e, "--elem")));
  if (cmd == "from-burnside") return to_json(burnside_to_witt(orbit_sum_from_json(e, "--elem"), r.trunc()));
  const WittVector w = witt_from_json(e, "--elem");
  if (cmd == "ghost") return to_json(witt_ghost(w));
  if (cmd == "frob") return to_json(witt_frobenius(r.n(), w));
  if (cmd == "versch") return to_json(r.trunc_given() ? witt_verschiebung(r.n(), w, r.trunc()) : witt_verschiebung(r.n(), w));
  throw InvalidInput("unknown command " + cmd);
}

Json run_dyn(const std::string& cmd, const Runner& r) {
  if (cmd == "product" || cmd == "union") {
    const auto [x, y] = r.operands();
    const GradedEndo g = graded_endo_from_json(x, "--x"), h = graded_endo_from_json(y, "--y");
    return to_json(cmd == "product" ? product(g, h) : disjoint_union(g, h));
  }
  const GradedEndo g = graded_endo_from_json(r.elem(), "--elem");
  if (cmd == "check") return to_json(quasi_unipotent_check(g, r.opts().allow_zero));
  if (cmd == "spectrum") return to_json(spectrum_euler(g, r.opts().signed_mode));
  if (cmd == "sigma") return to_json(sigma(r.n(), g));
  if (cmd == "rho") return to_json(rho_tilde(r.n(), g));
  throw InvalidInput("unknown command " + cmd);
}

/// Complex values print as bare "a+bi" text; the Hodge command prints JSON.
Json run_expect(const std::string& cmd, const Runner& r) {
  const double beta = r.opts().beta;
  if (cmd == "zeta") return format_real(hurwitz_zeta(beta, r.opts().a));
  const Json e = r.elem();
  if (cmd == "value") {
    if (looks_like_bc(e)) {
      if (is_rational_bc(e, false)) throw CoefficientModeError("BC expectations take integer coefficients");
      return complex_json(expectation(bc_from_json(e, "--elem"), beta));
    }
    if (is_rational_group_ring(e, r.opts().rational)) return complex_json(expectation(group_ring_q_from_json(e, "--elem"), beta));
    return complex_json(expectation(group_ring_z_from_json(e, "--elem"), beta));
  }
  if (cmd == "class") return complex_json(expectation_class(orbit_sum_from_json(e, "--elem"), beta));
  if (cmd == "hodge") {
    const HodgeExpectation h = hodge_expectation(hodge_from_json(e, "--elem"), beta);
    Json coeffs = Json::array();
    for (const auto& [pq, z] : h.coefficients) coeffs.push_back(Json{{"p", pq.first}, {"q", pq.second}, {"value", format_complex(z)}});
    Json weight = Json::array();
    for (const auto& [k, z] : h.weight_polynomial()) weight.push_back(Json{{"w", k}, {"value", format_complex(z)}});
    return Json{{"coefficients", coeffs}, {"weight", weight}, {"at_one", format_complex(h.at_one())}};
  }
  throw InvalidInput("unknown command " + cmd);
}

Json generators_json(const K0Presentation& k) {
  Json out = Json::array();
  for (const auto& g : k.generators) out.push_back(to_json(g));
  return out;
}

Json run_k0(const std::string& cmd, const Runner& r) {
  if (cmd == "finite-sets") return to_json(k0_from_presentation(finite_set_assembler(r.n())));
  if (cmd == "compute") return to_json(k0_from_presentation(assembler_from_json(r.elem(), "--elem")));
  if (cmd == "induced") {
    const Options& o = r.opts();
    if (!o.functor.empty()) {
      // Endofunctors of the finite-set model at level --level.
      if (o.level < 1) throw InvalidInput("--level must be a positive integer");
      const std::int64_t n = r.n();
      const AssemblerPresentation p = finite_set_assembler(o.level);
      const K0Presentation kp = k0_from_presentation(p);
      AssemblerPresentation q;
      std::map<std::string, ObjectCombination> images;
      if (o.functor == "sigma") {
        q = p;
        images = orbit_functor_images(p, [n](const OrbitSum& x) { return sigma(n, x); });
      } else if (o.functor == "rho") {
        std::vector<std::int64_t> lengths;
        for (std::int64_t d : divisors(o.level)) lengths.push_back(n * d);
        q = finite_set_assembler(lengths, 2 * n * o.level);
        images = orbit_functor_images(p, [n](const OrbitSum& x) { return rho_tilde(n, x); });
      } else {
        throw InvalidInput("--functor must be sigma or rho");
      }
      const K0Presentation kq = o.functor == "sigma" ? kp : k0_from_presentation(q);
      return Json{{"matrix", to_json(induced_k0_map(p, kp, q, kq, images))},
                  {"source_generators", generators_json(kp)},
                  {"target_generators", generators_json(kq)}};
    }
    const InducedMapRequest req = induced_request_from_json(r.elem(), "--elem");
    const K0Presentation kp = k0_from_presentation(req.p), kq = k0_from_presentation(req.q);
    std::map<std::string, ObjectCombination> images;
    for (const auto& label : req.p.objects()) {
      const auto it = req.object_map.find(label);
      if (it == req.object_map.end()) throw SchemaError("--elem.object_map." + label, "missing object");
      const auto m = req.multiplicity_map.find(label);
      images[label] = {{it->second, m == req.multiplicity_map.end() ? Integer(1) : m->second}};
    }
    return Json{{"matrix", to_json(induced_k0_map(req.p, kp, req.q, kq, images))},
                {"source_generators", generators_json(kp)},
                {"target_generators", generators_json(kq)}};
  }
  throw InvalidInput("unknown command " + cmd);
}

int run_selftest(const Options& o) {
  const auto known = verify::suite_names();
  for (const auto& s : o.suites)
    if (std::find(known.begin(), known.end(), s) == known.end()) throw InvalidInput("unknown suite " + s);
  const auto reports = verify::run_groups(o.suites, o.seed, !o.serial);
  std::fputs(verify::format_table(reports).c_str(), stdout);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& g) { return g.passed(); });
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bost–Connes maps, Witt vectors, spectra and scissors K-groups with exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  auto* trunc_opt = app.add_option("--trunc", o.trunc, "Truncation: N for the divisors of N, or a JSON list");
  app.add_option("--n", o.n, "Positive integer parameter");
  app.add_option("--beta", o.beta, "Inverse temperature, > 1");
  app.add_option("--a", o.a, "Hurwitz shift in (0, 1]");
  app.add_flag("--signed", o.signed_mode, "Alternating sum over degrees");
  app.add_flag("--allow-zero", o.allow_zero, "Accept zero eigenvalues");
  app.add_flag("--rational", o.rational, "Rational coefficient mode");
  app.add_flag("--normalized", o.normalized, "ρ_n = ρ̃_n / n instead of ρ̃_n");
  app.add_option("--elem", o.elem, "JSON payload, or @file");
  app.add_option("--x", o.x, "First JSON operand, or @file");
  app.add_option("--y", o.y, "Second JSON operand, or @file");
  app.add_flag("--stdin", o.use_stdin, "Read the payload from standard input");
  app.add_flag("--pretty", o.pretty, "Indent JSON output");
  app.add_option("--functor", o.functor, "sigma or rho, for induced maps on the finite-set model");
  app.add_option("--level", o.level, "Level N of the finite-set model");

  const std::vector<std::pair<std::string, std::vector<std::string>>> tree = {
      {"groupring", {"mul", "sigma", "rho", "pi", "subring"}},
      {"bc", {"mul", "rationalize"}},
      {"equiv", {"product", "sigma", "rho", "chi"}},
      {"witt", {"ghost", "from-ghost", "add", "mul", "frob", "versch", "from-burnside"}},
      {"dyn", {"check", "spectrum", "sigma", "rho", "product", "union"}},
      {"expect", {"value", "class", "hodge", "zeta"}},
      {"k0", {"compute", "induced", "finite-sets"}},
  };
  std::vector<std::pair<CLI::App*, std::vector<CLI::App*>>> commands;
  for (const auto& [group, leaves] : tree) {
    CLI::App* g = app.add_subcommand(group);
    g->require_subcommand(1);
    std::vector<CLI::App*> subs;
    for (const auto& leaf : leaves) subs.push_back(g->add_subcommand(leaf));
    commands.emplace_back(g, subs);
  }
  CLI::App* selftest = app.add_subcommand("selftest", "Run every property and oracle suite");
  selftest->add_option("--suite", o.suites, "Restrict to the named suites");
  selftest->add_option("--seed", o.seed, "Seed for the randomized checks");
  selftest->add_flag("--serial", o.serial, "Run the groups one after another");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (selftest->parsed()) return run_selftest(o);
    Runner runner(o);
    runner.set_trunc_given(trunc_opt->count() > 0);
    for (const auto& [g, subs] : commands) {
      if (!g->parsed()) continue;
      for (CLI::App* leaf : subs) {
        if (!leaf->parsed()) continue;
        const std::string group = g->get_name(), cmd = leaf->get_name();
        Json out;
        if (group == "groupring") out = run_groupring(cmd, runner);
        else if (group == "bc") out = run_bc(cmd, runner);
        else if (group == "equiv") out = run_equiv(cmd, runner);
        else if (group == "witt") out = run_witt(cmd, runner);
        else if (group == "dyn") out = run_dyn(cmd, runner);
        else if (group == "expect") out = run_expect(cmd, runner);
        else out = run_k0(cmd, runner);
        if (out.is_string()) std::cout << out.get<std::string>() << '\n';
        else std::cout << (o.pretty ? out.dump(2) : out.dump()) << '\n';
        return 0;
      }
    }
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const SchemaError& e) {
    std::cerr << "schema error at " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
}
