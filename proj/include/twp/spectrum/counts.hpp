#pragma once

#include <vector>

#include "twp/ring/real.hpp"
#include "twp/spectrum/intensity.hpp"

namespace twp {

// Expected number of ordered r-tuples of disjoint simple tight geodesics,
// cutting into one connected piece, with normalized lengths in the windows.
Real expected_nonseparating_count(int g, const Real& mu, const IntervalSet& windows,
                                  long precision = kDefaultPrecision);

struct ConvergenceRow {
  int g;
  Real mu;
  Real expected;
  double target;
  Real ratio;
};

// Rows for mu_g = mu_c - g^{-beta}. beta <= 2 is rejected unless allow_any_beta.
std::vector<ConvergenceRow> mp_convergence_table(const std::vector<int>& genera, double beta,
                                                 const IntervalSet& windows,
                                                 bool allow_any_beta = false,
                                                 long precision = kDefaultPrecision);

}  // namespace twp
