#pragma once

#include <string>
#include <vector>

#include "ordtop/report.hpp"

namespace ordtop {

struct cli_result {
  int exit_code = 0;
  json report;         // deterministic given inputs and seed
  std::string message; // diagnostics, written to stderr by the binary
};

/// Runs one command: classify | sets | verify | suite | zoo.
/// Exit codes: 0 pass/verified, 1 property fail / refuted / not decidable,
/// 2 input error.
cli_result cli_run(const std::vector<std::string>& args);

} // namespace ordtop
