#pragma once

// Reproduction of the published tables and identities, one entry per claim.
// Backs the CLI `check` subcommand.

#include <string>
#include <vector>

namespace nodal {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<CheckResult> run_reproduction_checks();

/// Published ratio cells (comma decimals), "---" where undefined; rows n = 1..14.
const std::vector<std::vector<std::string>>& printed_ratio_table();

}  // namespace nodal
