#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace modelcomb::cli {

struct ClaimResult {
  std::string id;
  std::string status;  // PASS | FAIL | N-A
  double measured = 0.0;
  double bound = 0.0;
  std::string note;
};

struct RunResult {
  int exit_code = 0;
  std::vector<std::string> task_log;
  std::vector<ClaimResult> claims;
};

/// Executes the config's tasks in order, writing CSV/SVG artifacts and (for
/// verify/fixtures tasks) the claim lines into <out_dir>/verify_report.txt.
RunResult run_experiment(const ExperimentConfig& cfg, int threads, bool svg);

std::string format_claim(const ClaimResult& c);

}  // namespace modelcomb::cli
