#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spcoh::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kDomainError = 3,
  kScaleGuard = 4,
  kVerifyFailed = 5,
};

/// Environment variable read by `oracle` as its default work cap.
inline constexpr const char* kMaxWorkEnv = "SPCOH_ORACLE_MAX_WORK";

/// Parses `args` (without the program name), runs the verb and writes the
/// document to `out`. Diagnostics go to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spcoh::cli
