#pragma once

// Small helper for driving the installed CLI binary from tests.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace proc {

struct Result {
  int exit_code = -1;
  std::string output;
};

/// Runs a shell command, capturing stdout (add 2>&1 to capture stderr too).
inline Result run(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  Result result;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

/// Path of the CLI under test, exported by the build as COINWEIGH_CLI.
inline std::string cli_path() {
  const char* path = std::getenv("COINWEIGH_CLI");
  if (!path || !*path) throw std::runtime_error("COINWEIGH_CLI is not set");
  return path;
}

}  // namespace proc
