#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "casimir/cartan_type.hpp"

namespace casimir::cli {

enum class Format { Json, Csv, Md };

struct RunConfig {
  std::string command;
  std::vector<CartanType> types;
  std::optional<int> k;
  std::optional<int> i;
  Format format = Format::Md;
  std::uint64_t budget = 10'000'000;
  std::optional<std::string> cache_dir;
  int jobs = 1;
  bool full = false;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

/// Parses argv-style arguments (without the program name) and runs the
/// command. Everything goes to the supplied streams; the return value is the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
