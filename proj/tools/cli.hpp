#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extremal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;  // a verified inequality does not hold
inline constexpr int kExitUsage = 2;  // usage, parse or budget error

// Runs one command line (without the program name). Reports go to `out`
// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extremal::cli
