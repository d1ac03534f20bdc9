#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gmforms::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // no representation, or --strict failure
  kUsage = 2,
  kRefuted = 3,
};

struct Config {
  unsigned long p_cap = 1200;
  unsigned workers = 1;
};

/// Reads `key = value` lines (keys p_cap, workers; '#' starts a comment).
/// Throws gmforms::InvalidArgument on unknown keys or malformed values.
Config load_config(const std::string& path, Config base = {});

/// Config file lookup: explicit path, then $GMFORMS_CONFIG, then
/// ./gmforms.conf when present.
std::optional<std::string> locate_config(const std::optional<std::string>& explicit_path);

/// Runs `gmforms <args...>` (args excludes the program name). The data
/// stream goes to `out` (or --out FILE); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmforms::cli
