#pragma once

// Named invariant suites driven by the CLI `verify` subcommand. Each
// check returns pass/fail plus a short detail on failure.

#include <string>
#include <vector>

namespace hyperoct {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

const std::vector<std::string>& verify_suite_names();
int verify_suite_max_n(const std::string& suite, bool long_tests);
std::vector<CheckResult> run_verify_suite(const std::string& suite, int n, bool long_tests);

}  // namespace hyperoct
