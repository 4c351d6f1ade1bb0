#include <iostream>

#include "twp/cli/verify.hpp"
#include "twp/ring/real.hpp"

int main() {
  int failures = 0;
  for (int id = 1; id <= twp::cli::kCriterionCount; ++id) {
    const auto result = twp::cli::run_criterion(id, twp::kDefaultPrecision, 1);
    std::cout << twp::cli::summary_line(result) << std::endl;
    if (!result.pass) ++failures;
  }
  std::cout << (twp::cli::kCriterionCount - failures) << "/" << twp::cli::kCriterionCount
            << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
