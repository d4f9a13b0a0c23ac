#include "bost/verify/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bost::verify {

void Recorder::expect(const std::string& check, bool ok, const std::string& detail) {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.name == check; });
  if (it == checks_.end()) {
    checks_.push_back({check, true, ""});
    failures_.push_back(0);
    it = checks_.end() - 1;
  }
  if (ok) return;
  const auto idx = static_cast<std::size_t>(it - checks_.begin());
  if (failures_[idx]++ == 0) {
    it->passed = false;
    it->detail = detail;
  }
}

bool Recorder::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

bool GroupReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<Group>& all_groups() {
  static const std::vector<Group> groups = [] {
    std::vector<Group> g;
    register_qz(g);
    register_group_ring(g);
    register_bc(g);
    register_equivariant(g);
    register_witt(g);
    register_dynamical(g);
    register_expectation(g);
    register_scissors(g);
    register_json(g);
    return g;
  }();
  return groups;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& g : all_groups())
    if (std::find(names.begin(), names.end(), g.suite) == names.end()) names.push_back(g.suite);
  return names;
}

namespace {

GroupReport run_one(const Group& g, std::uint64_t seed) {
  GroupReport report{g.suite, g.name, {}, 0};
  Recorder rec(g.name);
  const auto start = std::chrono::steady_clock::now();
  try {
    g.run(rec, seed);
  } catch (const std::exception& e) {
    rec.expect("no exception", false, e.what());
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.checks = rec.checks();
  if (report.checks.empty()) report.checks.push_back({"ran", true, ""});
  return report;
}

}  // namespace

std::vector<GroupReport> run_groups(const std::vector<std::string>& suites, std::uint64_t seed, bool parallel) {
  const auto known = suite_names();
  for (const auto& s : suites)
    if (std::find(known.begin(), known.end(), s) == known.end()) throw std::invalid_argument("unknown suite '" + s + "'");
  std::vector<const Group*> selected;
  for (const auto& g : all_groups())
    if (suites.empty() || std::find(suites.begin(), suites.end(), g.suite) != suites.end()) selected.push_back(&g);

  std::vector<GroupReport> out(selected.size());
  if (!parallel) {
    for (std::size_t i = 0; i < selected.size(); ++i) out[i] = run_one(*selected[i], seed);
    return out;
  }
  std::vector<std::future<GroupReport>> futures;
  for (const Group* g : selected) futures.push_back(std::async(std::launch::async, run_one, std::cref(*g), seed));
  for (std::size_t i = 0; i < futures.size(); ++i) out[i] = futures[i].get();
  return out;
}

std::vector<GroupReport> run_named(const std::string& suite, const std::vector<std::string>& groups,
                                   std::uint64_t seed) {
  std::vector<GroupReport> out;
  for (const auto& name : groups) {
    auto it = std::find_if(all_groups().begin(), all_groups().end(),
                           [&](const Group& g) { return g.suite == suite && g.name == name; });
    if (it == all_groups().end()) throw std::invalid_argument("unknown check group " + suite + "/" + name);
    out.push_back(run_one(*it, seed));
  }
  return out;
}

std::string format_table(const std::vector<GroupReport>& reports) {
  std::ostringstream os;
  std::size_t failed = 0, width = 0;
  for (const auto& r : reports) width = std::max(width, r.suite.size() + 1 + r.group.size());
  for (const auto& r : reports) {
    const std::string id = r.suite + "/" + r.group;
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", r.seconds);
    os << (r.passed() ? "PASS  " : "FAIL  ") << id << std::string(width - id.size() + 2, ' ') << r.checks.size()
       << (r.checks.size() == 1 ? " check   " : " checks  ") << time << "\n";
    if (!r.passed()) {
      ++failed;
      for (const auto& c : r.checks)
        if (!c.passed) os << "      violated: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    }
  }
  os << reports.size() - failed << "/" << reports.size() << " groups passed\n";
  return os.str();
}

}  // namespace bost::verify
