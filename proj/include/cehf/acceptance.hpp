#pragma once

// The fixture acceptance suite: one pass/fail line per criterion.

#include <functional>
#include <string>
#include <vector>

namespace cehf {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  double seconds = 0;
  bool all_passed() const;
};

/// Runs every criterion; `progress` (may be empty) sees each result as it is
/// produced.
AcceptanceReport run_acceptance(const std::function<void(const CriterionResult&)>& progress = {});

/// "PASS  3  degree bound  (12.3 s)  detail".
std::string format_line(const CriterionResult& r);

}  // namespace cehf
