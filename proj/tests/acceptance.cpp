// Acceptance gate: runs the twelve shipped guarantees and prints one
// PASS/FAIL line per criterion, including the runtime against its budget.
// Exit status is nonzero if any criterion fails or overruns.

#include <cstdio>

#include "nil_theta/verify.hpp"

int main() {
  int failures = 0;
  for (int id = 1; id <= 12; ++id) {
    auto r = niltheta::run_criterion(id);
    bool in_budget = r.elapsed_s <= r.limit_s;
    bool ok = r.pass && in_budget;
    if (!ok) ++failures;
    std::printf("[%2d] %s  %-55s (%.2fs / %.0fs)  %s\n", r.id,
                ok ? "PASS" : "FAIL", r.name.c_str(), r.elapsed_s, r.limit_s,
                r.detail.c_str());
    std::fflush(stdout);
  }
  if (failures == 0)
    std::printf("acceptance: all 12 criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
