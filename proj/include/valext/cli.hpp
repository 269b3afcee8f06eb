#pragma once

#include "valext/json_io.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace valext::cli {

/// Exit codes of `run`.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInvalid = 2;
inline constexpr int kExhausted = 3;

struct Options {
  std::size_t budget = kDefaultPmtBudget;
  std::optional<std::int64_t> bound;
  std::size_t depth = 8;
  bool strict = false;
  std::filesystem::path fixtures_dir;
};

struct Outcome {
  io::Json body;
  int exit_code = kOk;
};

/// Runs one command ("group epsilon", "blowup divide", ...) on a parsed
/// input. Library errors become {"error", "detail"} bodies with exit 2 or 3.
Outcome execute(const std::string& command, const io::Json& input, const Options& options);

/// Every command name accepted by `execute`.
const std::vector<std::string>& command_names();

/// Full command line, without the program name. Writes JSON to `out` (or
/// to --output) and usage messages to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Directory holding the shipped fixtures.
std::filesystem::path default_fixtures_dir();

}  // namespace valext::cli
