#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pascalian::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes returned by run_cli.
enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsage = 2,      // bad flags, out-of-domain arguments, unwritable output
    kResource = 3,   // enumeration or degree cap exceeded
    kNumeric = 4,    // root solver did not reach the residual tolerance
};

/// Parses `args` (without the program name), runs one command and writes its output
/// to `out` (or to --out). Diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pascalian::cli
