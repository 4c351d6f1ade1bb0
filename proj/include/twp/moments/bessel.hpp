#pragma once

#include "twp/ring/real.hpp"

namespace twp {

// J_k(x) by its ascending series, for 0 <= x <= 10.
Real bessel_j(int k, const Real& x, long precision = kDefaultPrecision);

// First positive zero of J_0, by bisection on [2, 3].
Real find_j0(long precision = kDefaultPrecision);

// j0 * J_1(j0) / (4 pi^2)
Real mu_critical(long precision = kDefaultPrecision);

}  // namespace twp
