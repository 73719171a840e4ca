#pragma once

/// \file acceptance.hpp
/// The acceptance suite: ten end-to-end criteria exercising every module,
/// each reporting a single pass/fail verdict with a short diagnostic.  The
/// same runner backs the `acceptance` test binary and `swb verify`.

#include <functional>
#include <string>
#include <vector>

namespace wb {

struct CriterionResult {
  int id = 0;                // 1-based criterion number
  std::string name;          // short slug, also the `verify --suite` key
  std::string description;   // one-line human description
  bool pass = false;
  std::string detail;        // first failures, or a summary of what was checked
  double seconds = 0;
};

/// Names of the ten criteria, index 0 = criterion 1.
const std::vector<std::pair<std::string, std::string>>& criterion_names();

/// Run one criterion (id in [1,10]); throws std::out_of_range otherwise.
CriterionResult run_criterion(int id);

/// Run all criteria in order, invoking the callback (if any) after each.
std::vector<CriterionResult> run_acceptance(
    const std::function<void(const CriterionResult&)>& progress = {});

}  // namespace wb
