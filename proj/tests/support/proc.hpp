#pragma once

// Runs the built CLI binary and captures stdout plus the exit code, for
// golden-trace and exit-code-matrix tests.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace bp::testing {

struct ProcResult {
  std::string output;  // stdout only
  int exit_code = -1;
};

inline ProcResult run_cli(const std::string& args,
                          const std::string& stdin_file = "") {
  std::string command = std::string(BP_CLI_BINARY) + " " + args;
  if (!stdin_file.empty()) {
    command += " < " + stdin_file;
  }
  command += " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + command);
  ProcResult result;
  std::array<char, 4096> buffer;
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace bp::testing
