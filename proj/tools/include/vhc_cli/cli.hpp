#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vhc::cli {

/// Exit statuses shared by every subcommand.
enum Exit : int { kOk = 0, kFailed = 1, kInputError = 2 };

/// Runs one command line (without the program name). The worker count for
/// searches comes from the VHC_WORKERS environment variable, default 1.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vhc::cli
