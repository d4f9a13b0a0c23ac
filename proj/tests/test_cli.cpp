#include <doctest.h>

#include <json.hpp>

#include "process.hpp"

using bost::test::quote;
using bost::test::run_cli;

namespace {

const std::string kRotation = R"({"blocks":[{"degree":0,"matrix":[[0,-1],[1,0]]}]})";

std::string elem(const std::string& json) { return "--elem " + quote(json); }

/// Output of `cmd --elem <out of first>` must reproduce the first output.
void check_refeed(const std::string& cmd, const std::string& payload) {
  const auto first = run_cli(cmd + " " + elem(payload));
  REQUIRE(first.exit_code == 0);
  const auto second = run_cli(cmd + " " + elem(first.out));
  CHECK(second.exit_code == 0);
  CHECK(second.out == run_cli(cmd + " " + elem(second.out)).out);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("documented examples") {
    const auto s = run_cli("groupring sigma --n 2 " + elem(R"([{"r":"1/3","c":1}])"));
    CHECK(s.exit_code == 0);
    CHECK(s.out == R"([{"r":"2/3","c":1}])");

    const auto v = run_cli("expect value --beta 2 " + elem(R"([{"r":"0/1","c":1}])"));
    CHECK(v.exit_code == 0);
    CHECK(v.out == "1.000000000000+0i");

    const auto k = run_cli("k0 finite-sets --n 6");
    REQUIRE(k.exit_code == 0);
    const auto j = nlohmann::json::parse(k.out);
    CHECK(j["rank"] == 4);
    CHECK(j["torsion"].empty());
  }

  TEST_CASE("subcommands") {
    CHECK(run_cli(R"(groupring mul --x '[{"r":"1/2","c":1}]' --y '[{"r":"1/3","c":1}]')").out ==
          R"([{"r":"5/6","c":1}])");
    CHECK(run_cli("groupring pi --n 2").out == R"([{"r":"0/1","c":"1/2"},{"r":"1/2","c":"1/2"}])");
    CHECK(run_cli("groupring subring " + elem(R"([{"r":"0/1","c":1},{"r":"1/2","c":1}])")).out ==
          R"({"member":true,"coefficients":{"2":1}})");
    CHECK(run_cli(R"(bc mul --x '[{"a":2,"b":3,"x":[{"r":"0/1","c":1}]}]' --y '[{"a":3,"b":2,"x":[{"r":"0/1","c":1}]}]')")
              .out == R"([{"a":1,"b":1,"x":[{"r":"0/1","c":3},{"r":"1/2","c":3}]}])");
    CHECK(run_cli("equiv rho --n 3 " + elem(R"({"orbits":{"2":1}})")).out == R"({"orbits":{"6":1}})");
    CHECK(run_cli("witt from-burnside --trunc 2 " + elem(R"({"orbits":{"2":1}})")).out ==
          R"({"trunc":[1,2],"coords":{"1":0,"2":1}})");
    CHECK(run_cli("dyn spectrum " + elem(kRotation)).out == R"([{"r":"1/4","c":1},{"r":"3/4","c":1}])");
    CHECK(run_cli("dyn sigma --n 2 " + elem(kRotation)).out ==
          R"({"blocks":[{"degree":0,"matrix":[[-1,0],[0,-1]]}]})");
    CHECK(run_cli("expect zeta --beta 2").out == "1.644934066848");
    CHECK(run_cli("expect class --beta 2 " + elem(R"({"orbits":{"2":1}})")).out == "0.500000000000+0i");
    const auto induced = run_cli("k0 induced --functor sigma --n 2 --level 4");
    REQUIRE(induced.exit_code == 0);
    CHECK(nlohmann::json::parse(induced.out)["matrix"] == nlohmann::json::parse("[[1,2,0],[0,0,2],[0,0,0]]"));
  }

  TEST_CASE("standard input") {
    const auto r = run_cli("groupring mul --stdin", R"([[{"r":"1/2","c":1}],[{"r":"1/3","c":1}]])");
    CHECK(r.exit_code == 0);
    CHECK(r.out == R"([{"r":"5/6","c":1}])");
    CHECK(run_cli("groupring sigma --n 3 --stdin", R"([{"r":"1/2","c":2}])").out == R"([{"r":"1/2","c":2}])");
  }

  TEST_CASE("pretty output parses to the same value") {
    const auto plain = run_cli("k0 finite-sets --n 3");
    const auto pretty = run_cli("k0 finite-sets --n 3 --pretty");
    CHECK(pretty.out != plain.out);
    CHECK(nlohmann::ordered_json::parse(pretty.out).dump() == plain.out);
  }

  TEST_CASE("schema errors exit 2 and name the field") {
    const auto missing = run_cli("groupring sigma --n 2 " + elem(R"([{"r":"1/3"}])"), "", true);
    CHECK(missing.exit_code == 2);
    CHECK(missing.out.find("[0].c") != std::string::npos);
    CHECK(run_cli("groupring mul --x '[{' --y '[]'").exit_code == 2);
    CHECK(run_cli("dyn spectrum " + elem(R"({"0":[[1]]})")).exit_code == 2);
    CHECK(run_cli("selftest --suite nonexistent").exit_code == 2);
    CHECK(run_cli("groupring sigma --n zero " + elem("[]")).exit_code == 2);
  }

  TEST_CASE("domain errors exit 3") {
    CHECK(run_cli("dyn spectrum " + elem(R"({"blocks":[{"degree":0,"matrix":[[2]]}]})")).exit_code == 3);
    CHECK(run_cli("expect zeta --beta 1").exit_code == 3);
    CHECK(run_cli("witt from-ghost --trunc '[1,2]' " + elem(R"({"1":0,"2":1})")).exit_code == 3);
    CHECK(run_cli("groupring rho --normalized --n 2 " + elem(R"([{"r":"0/1","c":1}])")).exit_code == 3);
    CHECK(run_cli("groupring rho --rational --normalized --n 2 " + elem(R"([{"r":"0/1","c":1}])")).exit_code == 0);
  }

  TEST_CASE("outputs re-parse to byte-identical outputs") {
    check_refeed("groupring sigma --n 1", R"([{"r":"3/6","c":"4"},{"r":"1/3","c":-1},{"r":"1/2","c":1}])");
    check_refeed("groupring sigma --rational --n 1", R"([{"r":"1/4","c":"6/4"}])");
    check_refeed("equiv sigma --n 1", R"({"orbits":{"6":2,"1":-1}})");
    check_refeed("dyn sigma --n 1", kRotation);
    check_refeed("witt frob --n 1", R"({"trunc":[1,2,3,6],"coords":{"3":-4,"1":2}})");
    const std::string unit = quote(R"([{"a":1,"b":1,"x":[{"r":"0/1","c":1}]}])");
    const auto bc = run_cli("bc mul --y " + unit + " --x " + quote(R"([{"b":3,"a":2,"x":[{"r":"2/4","c":1}]}])"));
    REQUIRE(bc.exit_code == 0);
    CHECK(run_cli("bc mul --y " + unit + " --x " + quote(bc.out)).out == bc.out);
    const auto first = run_cli("groupring sigma --n 5 " + elem(R"([{"r":"1/7","c":3}])"));
    CHECK(first.out == run_cli("groupring sigma --n 5 " + elem(R"([{"r":"1/7","c":3}])")).out);
  }

  TEST_CASE("selftest filter") {
    const auto r = run_cli("selftest --suite witt");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("witt") != std::string::npos);
    CHECK(r.out.find("dynamical") == std::string::npos);
  }
}
