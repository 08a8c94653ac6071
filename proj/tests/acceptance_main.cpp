// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <iostream>

#include "srlab/acceptance.hpp"

int main() {
  srlab::AcceptanceOptions o;
  int failed = 0;
  double total = 0;
  for (const auto& c : srlab::acceptance_criteria()) {
    srlab::CriterionResult r = srlab::run_criterion(c, o);
    std::cout << srlab::criterion_line(r) << std::endl;
    total += r.seconds;
    failed += r.pass ? 0 : 1;
  }
  std::cout << (failed ? "FAILED " : "ALL PASS ") << "(" << failed << " failing, " << total << "s total)\n";
  return failed ? 1 : 0;
}
