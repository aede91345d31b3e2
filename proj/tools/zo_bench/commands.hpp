#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zo::cli {

enum ExitCode : int {
  kOk = 0,
  kParameterError = 2,
  kEvaluationFailure = 3,
  kMomentCheckFailure = 4,
};

/// Runs zo_bench with `args` (program name excluded). CSV goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zo::cli
