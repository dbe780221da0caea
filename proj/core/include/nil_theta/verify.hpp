#pragma once

// Self-contained acceptance checks, one per shipped guarantee.  Each check
// fixes its own seeds and tolerances so a run is reproducible bit-for-bit;
// the CLI exposes them individually and the test suite gates on all twelve.

#include <string>
#include <vector>

namespace niltheta {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double elapsed_s = 0;
  double limit_s = 0;  // documented runtime budget
  std::string detail;
};

// id in 1..12; throws std::invalid_argument otherwise.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all_criteria();

}  // namespace niltheta
