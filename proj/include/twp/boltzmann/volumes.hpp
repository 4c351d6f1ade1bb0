#pragma once

#include <utility>
#include <vector>

#include "twp/moments/moments.hpp"
#include "twp/ring/log_value.hpp"
#include "twp/ring/real.hpp"

namespace twp {

struct TVolume {
  LogValue value;
  bool cancellation = false;
};

// M_0^{-(2g-2+n)} P_{g,n}(L, M/M_0) for 0 <= mu < mu_c.
TVolume t_volume(int g, int n, const std::vector<Real>& lengths, const MomentFrame& frame);
TVolume t_volume(int g, int n, const std::vector<Real>& lengths, const Real& mu,
                 long precision = kDefaultPrecision);

// Frame with moments up to max_index, rejecting mu outside [0, mu_c).
MomentFrame boltzmann_frame(const Real& mu, int max_index, long precision = kDefaultPrecision);

// (T_{g,n}(sqrt(-M_1/(3M_0)) L, mu) / T_{g,n}(0, mu), prod sinh(L_i)/L_i)
std::pair<Real, Real> boundary_ratio(int g, int n, const std::vector<Real>& lengths,
                                     const Real& mu, long precision = kDefaultPrecision);

// Sequences (g_1,n_1)..(g_q,n_q), ordered, with 2g_i+n_i >= 3, n_i >= 1,
// sum g_i = g+q-r-1 and sum n_i = 2r.
std::vector<std::vector<std::pair<int, int>>> separating_decompositions(int g, int r, int q);

// (M_0^r T_g)^{-1} sum over the decompositions of prod T_{g_i,n_i}(0, mu).
LogValue separating_sum(int g, int r, int q, const Real& mu,
                        long precision = kDefaultPrecision);

}  // namespace twp
