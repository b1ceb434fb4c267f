#pragma once

#include <string>
#include <vector>

namespace dimerwind {

struct CheckResult {
  std::string check_name;
  double value = 0.0;
  double target = 0.0;
  double residual = 0.0;
  bool pass = false;
};

// Named checks behind the CLI `verify` subcommand. Suites: "theta", "roots",
// "prop18", "corollaries", "lemma12-13", "free-energy". All grids and sample
// points are fixed, so repeated runs are byte-identical.
std::vector<CheckResult> verify_suite(const std::string& suite);

const std::vector<std::string>& verify_suite_names();

}  // namespace dimerwind
