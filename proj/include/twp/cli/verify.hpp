#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace twp::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 when the criterion has no hard runtime cap
  std::string tolerance;
  nlohmann::ordered_json measured = nlohmann::ordered_json::object();
  std::string error;
};

inline constexpr int kCriterionCount = 11;

// Criterion 9 (the g <= 8 convergence table) runs only in the full suite.
bool in_fast_suite(int id);

// Cache errors propagate; any other exception marks the criterion failed.
CriterionResult run_criterion(int id, long precision, std::uint64_t seed);

// One "criterion N: PASS|FAIL name" line, with the error when present.
std::string summary_line(const CriterionResult& r);

// Per-criterion verdicts, measured values and tolerances. Timings are left
// out so that reruns produce identical reports.
nlohmann::ordered_json report_json(const std::string& suite,
                                   const std::vector<CriterionResult>& results);

}  // namespace twp::cli
