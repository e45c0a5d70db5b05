#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace tvq {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitInternal = 2,
  kExitIdentity = 3,
};

struct RunConfig {
  std::optional<std::string> input;
  std::optional<std::string> manifold;
  /// Reference table row to compare a file against, e.g. "S3/Q8".
  std::optional<std::string> reference;
  int r_min = 3;
  int r_max = 7;
  std::string format = "table";
  int digits = 3;
  int workers = 1;
};

/// Parses "A:B" into r_min and r_max. Throws InvalidArgument.
void parse_r_range(const std::string& text, RunConfig& config);

/// Worker count from TVQ_WORKERS, or the hardware thread count.
int default_workers();

/// Entry point of the tvq command. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tvq
