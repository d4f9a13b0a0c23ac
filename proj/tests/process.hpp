#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace bost::test {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

/// Single-quotes a shell argument.
inline std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

/// Runs the CLI with the given (already quoted) arguments; stderr is
/// discarded unless merge_stderr is set.
inline RunResult run_cli(const std::string& args, const std::string& stdin_text = "", bool merge_stderr = false) {
  std::string cmd = quote(BOSTCONNES_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  if (!stdin_text.empty()) cmd = "printf '%s' " + quote(stdin_text) + " | " + cmd;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  while (!r.out.empty() && (r.out.back() == '\n' || r.out.back() == '\r')) r.out.pop_back();
  return r;
}

}  // namespace bost::test
