#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitNonConvergence = 3;
/// `verify` exits with this when a sweep fails.
inline constexpr int kExitSweepFailed = 1;

/// Runs one command line (args exclude the program name). JSON or CSV goes
/// to `out`, diagnostics to `err`; `-` as an input file reads from `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace qseq::cli
