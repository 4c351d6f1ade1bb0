#pragma once

#include <vector>

#include "twp/moments/moments.hpp"
#include "twp/ring/log_value.hpp"
#include "twp/ring/real.hpp"

namespace twp {

struct PhiValue {
  LogValue value;
  bool in_range = true;  // false when |p| > 3g-3; value is then zero

  Real to_real(long precision) const { return value.to_real(precision); }
};

// (-1)^k <tau_{p_1+1}..tau_{p_k+1} tau_2^{3g-3-|p|}>_g (-M_1/M_0)^{3g-3+n-|p|}
//   (5g)^n / (3g-3-|p|)!
PhiValue phi(int g, int n, const std::vector<int>& pvec, const MomentFrame& frame);

// d^k P_{g,n} / dm_{p_1}..dm_{p_k} at L = 0, m = M(mu).
Real alpha_deriv(int g, int n, const std::vector<int>& pvec, const MomentFrame& frame);

// Coefficient of prod L_i^{2 q_i} in the derivative above after L -> sqrt(-m_1/3) L.
Real alpha_coeff(int g, int n, const std::vector<int>& pvec, const std::vector<int>& qvec,
                 const MomentFrame& frame);

}  // namespace twp
