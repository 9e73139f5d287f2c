#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mcda::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kInconsistent = 1,  ///< domain inconsistency, report emitted
  kMalformed = 2,
  kLimit = 3,  ///< internal limit such as TooLarge, or bind failure
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Port of the running `serve` command, 0 when none is listening.
int serving_port();
/// Stops a running `serve` command so that run() returns.
void stop_serving();

}  // namespace mcda::cli
