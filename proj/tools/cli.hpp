#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cherfd::cli {

/// Stable exit codes.
enum Exit : int {
  ok = 0,
  inconclusive = 1,  // also: classification count mismatch
  dataset_error = 2,
  unknown_label = 3,
  unsupported = 4,
  self_test_failed = 5,
};

/// Directory holding the bundled datasets: $CHERFD_DATA when set.
std::string data_dir();

/// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cherfd::cli
