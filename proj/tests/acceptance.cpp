// Acceptance suite runner: one pass/fail line per criterion, nonzero exit
// if any criterion fails.

#include <cstdio>

#include "wb/acceptance.hpp"

int main() {
  bool all = true;
  wb::run_acceptance([&](const wb::CriterionResult& r) {
    all = all && r.pass;
    std::printf("[%s] criterion %2d (%s): %s -- %s (%.1fs)\n",
                r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.description.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
  });
  std::printf("%s\n", all ? "acceptance: ALL CRITERIA PASSED"
                          : "acceptance: FAILURES PRESENT");
  return all ? 0 : 1;
}
