#pragma once

// The `garside` command-line tool: subcommand dispatch, exit codes and the
// regression-freezing workflow.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "garside/io.hpp"

namespace garside::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kFalse = 1,
  kUsage = 2,
  kCapExceeded = 3,
  kTheoremViolation = 4,
};

enum class Format { Json, Dot, Text };

struct RunConfig {
  int e = 3;
  int n = 3;
  int k = 1;
  std::size_t group_cap = 0;    // 0 means default_group_cap()
  std::size_t rewrite_cap = 100000;
  Format format = Format::Json;
  std::uint64_t seed = 1;

  GroupParams params() const { return {e, n}; }
  std::size_t effective_group_cap() const;
  /// Throws std::invalid_argument on out-of-range parameters or caps.
  void validate() const;
};

struct RegressionRecord {
  std::string key;  // "homology e=6 n=3 k=2 order=2"
  io::Json value;
  std::string version = kVersion;

  /// One canonical JSON line, no trailing newline.
  std::string to_line() const;
};

/// e in 2..6, n in 2..4, every k, keeping |G| <= 1e5 and |[1,lambda^k]|^2 <= 1e7.
std::vector<RunConfig> default_grid();

/// Records for one grid point: interval size, length census, presentation
/// shape and, for n >= 3, H_1 and H_2.
std::vector<RegressionRecord> regression_records(const RunConfig& config);

struct FreezeOutcome {
  std::size_t written = 0;
  std::size_t matched = 0;
  std::vector<std::string> drifted;  // keys whose recomputed line differs
};

/// Appends records missing from `path` and compares the rest byte for byte.
/// Grid points are evaluated on a small thread pool; output order follows `grid`.
FreezeOutcome freeze_regressions(const std::vector<RunConfig>& grid, const std::string& path);

/// Entry point. Machine-readable results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace garside::cli
