#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bohr::cli {

/// Process exit statuses of the `bohr` tool.
enum ExitCode : int {
  kOk = 0,
  kViolations = 1,
  kResidualBreach = 2,
  kUsage = 64,
  kDomain = 65,
  kMonotonicity = 66,
  kBudget = 67,
};

/// Runs one subcommand (constants | verify | radius | scan | lemma).
/// Reports go to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bohr::cli
