// Command-line front end. `run_cli` is the whole program minus process
// plumbing so the test suite can drive it in-process.
#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pdtc {

enum ExitCode : int {
  k_exit_clean = 0,
  k_exit_findings = 1,
  k_exit_failure = 2,
};

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Library operation -> the subcommand that exposes it.
const std::vector<std::pair<std::string_view, std::string_view>>& operation_coverage();

const std::vector<std::string_view>& subcommands();

}  // namespace pdtc
