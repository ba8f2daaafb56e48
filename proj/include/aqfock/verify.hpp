#pragma once

// Property suites run by `aqfock verify`. Each check records a residual and
// the bound it is held to; the suites never stop at the first failure.

#include <string>
#include <vector>

#include "aqfock/run_config.hpp"

namespace aqfock::verify {

struct Check {
  std::string suite;
  std::string name;
  double residual = 0.0;
  double bound = 0.0;
  bool passed = false;
  std::string note;
};

struct Report {
  std::vector<Check> checks;

  bool passed() const;
  std::size_t failures() const;
  /// One JSON object per line, in run order.
  std::string to_json_lines() const;
  std::string to_csv() const;
};

/// "all", "group", "fock", "operators", "partitions", "orthopoly".
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or an invalid config.
Report run_suite(const std::string& suite, const RunConfig& config);

}  // namespace aqfock::verify
