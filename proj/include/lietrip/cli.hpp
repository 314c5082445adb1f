#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lietrip::cli {

/// Exit codes of `run`.
inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kInvalid = 2;

/// Runs one command line (without the program name). The report JSON goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lietrip::cli
