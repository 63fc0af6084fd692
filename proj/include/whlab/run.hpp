#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "whlab/config.hpp"

namespace whlab {

/// Exit statuses of a run.
enum ExitStatus : int {
  exit_ok = 0,
  exit_validation = 2,
  exit_numeric = 3,
  exit_ledger = 4,
};

struct RunOutcome {
  int status = exit_ok;
  std::string diagnostic;           ///< empty on success
  std::vector<std::string> files;   ///< written files, relative to the output directory
};

/// Executes the experiment named by the config and writes its report files
/// into `directory` (created if missing). ValidationError and NumericError
/// propagate to the caller.
RunOutcome run(const RunConfig& config, const std::filesystem::path& directory, OutputFormat format);

struct Invocation {
  std::string config_path;
  std::string expected_kind;      ///< subcommand name; "validate" parses and pre-flights only
  std::string directory_override; ///< --out
  std::string format_override;    ///< --format
};

/// Parses the config, checks it against the subcommand, runs it, and maps
/// errors to exit statuses. A one-line summary goes to `out`, the diagnostic
/// line of a failure to `err`.
int run_invocation(const Invocation& call, std::ostream& out, std::ostream& err);

} // namespace whlab
