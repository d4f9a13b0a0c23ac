#pragma once

// Property and oracle suites shared by the self-test command and the test
// binaries. Every suite is deterministic for a given seed.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bost::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Collects the outcome of one group of related checks.
class Recorder {
 public:
  explicit Recorder(std::string group) : group_(std::move(group)) {}

  /// Records the first failure per check name; later failures only count.
  void expect(const std::string& check, bool ok, const std::string& detail = "");
  /// Registers a check that passed so far (so it shows up in the table).
  void touch(const std::string& check) { expect(check, true); }

  const std::string& group() const noexcept { return group_; }
  const std::vector<Check>& checks() const noexcept { return checks_; }
  bool passed() const;

 private:
  std::string group_;
  std::vector<Check> checks_;
  std::vector<std::size_t> failures_;
};

struct GroupReport {
  std::string suite;
  std::string group;
  std::vector<Check> checks;
  double seconds = 0;
  bool passed() const;
};

using GroupFn = std::function<void(Recorder&, std::uint64_t seed)>;

struct Group {
  std::string suite;
  std::string name;
  GroupFn run;
};

/// Every check group, in display order.
const std::vector<Group>& all_groups();

std::vector<std::string> suite_names();

/// Runs the groups of the named suites (all when empty), concurrently when
/// parallel is set; results keep the display order.
std::vector<GroupReport> run_groups(const std::vector<std::string>& suites, std::uint64_t seed, bool parallel);

/// Runs the named groups of one suite.
std::vector<GroupReport> run_named(const std::string& suite, const std::vector<std::string>& groups,
                                   std::uint64_t seed);

/// One line per group plus a summary line.
std::string format_table(const std::vector<GroupReport>& reports);

// Registration hooks, one per suite file.
void register_qz(std::vector<Group>& out);
void register_group_ring(std::vector<Group>& out);
void register_bc(std::vector<Group>& out);
void register_equivariant(std::vector<Group>& out);
void register_witt(std::vector<Group>& out);
void register_dynamical(std::vector<Group>& out);
void register_expectation(std::vector<Group>& out);
void register_scissors(std::vector<Group>& out);
void register_json(std::vector<Group>& out);

}  // namespace bost::verify
