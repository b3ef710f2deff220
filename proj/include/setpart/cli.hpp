#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "setpart/verify.hpp"

namespace setpart::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kWriteFailed = 3,
};

struct Hooks {
  /// Partition source used by `verify`.
  PartitionSource verify_source = default_partition_source();
};

/// Parses args (args[0] is the program name) and runs one subcommand: bell,
/// enum, verify or bench. Data goes to out, diagnostics and totals to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace setpart::cli
