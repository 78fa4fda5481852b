#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace lqca::testing {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

/// Runs the built lqca binary with `args` (already shell-quoted); stderr is
/// merged into the captured output.
inline CliResult run_cli(const std::string& args) {
  const std::string command = std::string("\"") + LQCA_CLI_PATH + "\" " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string fixture_arg(const std::string& name) {
  return std::string("\"") + LQCA_FIXTURE_DIR + "/" + name + ".json\"";
}

}  // namespace lqca::testing
