#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ucv::cli {

enum ExitCode : int {
  kOk = 0,
  kBoundFailed = 2,
  kUsage = 64,
  kNonMember = 65,
};

/// Runs one ucv invocation. args excludes the program name. UCV_THREADS, when
/// set, fixes the worker count for search commands.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ucv::cli
