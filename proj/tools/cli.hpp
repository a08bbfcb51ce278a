#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace freqlmi::cli {

inline constexpr std::uint64_t kDefaultSeed = 20070901;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Runs one command line (without the program name). Payload goes to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freqlmi::cli
