#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace pb::cli {

enum class PrecisionPolicy { kDefault, kStrict };

struct Config {
  std::uint64_t limit = 1'500'000'000;
  std::filesystem::path checkpoints;
  PrecisionPolicy precision = PrecisionPolicy::kDefault;
  unsigned jobs = 1;
};

/// Sieve limit used when --extended is given without --limit.
inline constexpr std::uint64_t kExtendedLimit = 8'100'000'000ULL;

/// Runs one command line (without the program name). Exit status: 0 pass,
/// 1 failure or runtime error, 2 usage error, 3 numerically indeterminate.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pb::cli
