#pragma once

#include <string>
#include <vector>

namespace spcoh {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Suite names accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or "all") with ranks bounded by theta_max.
/// Throws std::invalid_argument for unknown suites.
std::vector<CheckResult> run_suite(const std::string& suite, int theta_max);

}  // namespace spcoh
