#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hodgekit::cli {

// Runs the full command-line interface on `args` (program name excluded),
// writing reports to `out` and diagnostics to `err`. Returns the process
// exit code: 0 success, 1 domain error or failed selftest, 2 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hodgekit::cli
