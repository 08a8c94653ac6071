#pragma once
// The acceptance suite: one named criterion per theorem-level claim, each
// with a time budget. Shared by the acceptance test binary and `srlab corpus`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace srlab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;  // first failure or a one-line summary
};

struct AcceptanceOptions {
  std::uint64_t seed = 0;
  int corpus_size = 200;
  int koszul_corpus_size = 50;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  // Returns an empty string on success, otherwise the failure detail.
  std::function<std::string(const AcceptanceOptions&)> run;
};

const std::vector<Criterion>& acceptance_criteria();
CriterionResult run_criterion(const Criterion& c, const AcceptanceOptions& o);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o);
std::string criterion_line(const CriterionResult& r);

}  // namespace srlab
