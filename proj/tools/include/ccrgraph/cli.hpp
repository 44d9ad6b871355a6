#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccrgraph::cli {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsageError = 2,
    kResourceExhausted = 3,
};

inline constexpr const char* kSchemaVersion = "1";

// Runs one invocation. `args` excludes the program name. The JSON report
// goes to `out` only when the verb completes; diagnostics go to `err`.
// `in` backs the '-' input path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace ccrgraph::cli
