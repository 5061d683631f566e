#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace mproc::cli {

inline constexpr std::string_view kToolName = "mproc";
inline constexpr std::string_view kToolVersion = "0.1.0";

inline constexpr std::size_t kDefaultBudget = 100000;
inline constexpr std::uint64_t kDefaultSeed = 0;

/// Exit codes: 0 success / valid, 1 domain negative (invalid machine,
/// decode error, no contradiction), 2 usage or I/O error.
enum Exit : int { kOk = 0, kNegative = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FNV-1a 64 of `bytes`, rendered "fnv1a64:<16 hex digits>".
std::string digest(std::string_view bytes);

/// Parses "a..b" (inclusive) or "a,b,c". Throws std::invalid_argument.
std::vector<std::uint64_t> parse_seed_list(std::string_view text);

}  // namespace mproc::cli
