#include <doctest.h>

#include <iostream>

#include "bost/verify/suites.hpp"

using namespace bost::verify;

namespace {

void run_suite(const std::string& suite) {
  const std::vector<GroupReport> reports = run_groups({suite}, kDefaultSeed, false);
  REQUIRE_FALSE(reports.empty());
  for (const auto& report : reports) {
    INFO(report.suite << "/" << report.group);
    for (const auto& check : report.checks) {
      INFO(check.name << ": " << check.detail);
      CHECK(check.passed);
    }
  }
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("qz") { run_suite("qz"); }
  TEST_CASE("group_ring") { run_suite("group_ring"); }
  TEST_CASE("bc") { run_suite("bc"); }
  TEST_CASE("equivariant") { run_suite("equivariant"); }
  TEST_CASE("witt") { run_suite("witt"); }
  TEST_CASE("dynamical") { run_suite("dynamical"); }
  TEST_CASE("expectation") { run_suite("expectation"); }
  TEST_CASE("scissors") { run_suite("scissors"); }
  TEST_CASE("json") { run_suite("json"); }
}
