#pragma once

// End-to-end checks of the construction and the surrounding loci. Every
// tolerance and sample count is fixed inside the implementation.

#include <string>
#include <vector>

namespace equitangent {

struct CheckResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 when there is no runtime limit
};

inline constexpr int kCheckCount = 10;

// Runs check `id` in [1, kCheckCount]. Never throws for geometry failures; they
// are reported as a failed check.
CheckResult run_check(int id);

std::vector<CheckResult> run_all_checks();

// "PASS  3  title  (0.01 s)  detail"
std::string format_check(const CheckResult& r);

}  // namespace equitangent
