#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hodgekit {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;        // what was checked / why it failed
  long long elapsed_ms = 0;  // wall time, informational only
};

struct AcceptanceOptions {
  unsigned long long seed = 20260819ULL;  // fixed default for reproducibility
};

// Runs the eight acceptance criteria in order. When `progress` is non-null,
// a "PASS criterion N: name" line (with timing) is emitted as each criterion
// finishes; the returned vector always carries the full results.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {},
                                            std::ostream* progress = nullptr);

}  // namespace hodgekit
