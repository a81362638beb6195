#pragma once

#include <string>
#include <vector>

namespace ldq::testing {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs the ldq binary (path baked in at compile time) with the given
// arguments; stdout and stderr are captured separately. `env` entries are
// KEY=VALUE prefixes for the child process.
CliResult run_cli(const std::vector<std::string>& args,
                  const std::vector<std::string>& env = {});

}  // namespace ldq::testing
