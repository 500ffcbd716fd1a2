#include <iostream>

#include "cehf/acceptance.hpp"

int main() {
  const auto report = cehf::run_acceptance([](const cehf::CriterionResult& r) { std::cout << cehf::format_line(r) << std::endl; });
  std::cout << (report.all_passed() ? "ALL PASS" : "FAILURES") << " (" << report.seconds << " s)" << std::endl;
  return report.all_passed() ? 0 : 1;
}
