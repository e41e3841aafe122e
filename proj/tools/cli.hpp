#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankbound::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs one invocation. `args` excludes the program name.
/// Returns 0 on success, 1 when a verification fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankbound::cli
