#pragma once

#include <vector>

#include "twp/ring/log_value.hpp"
#include "twp/ring/real.hpp"

namespace twp {

// E[(N)_{r+1}] = mu^{r+1} T_{g,r+1}(mu) / T_g(mu), g >= 2.
LogValue factorial_moment(int g, int r, const Real& mu, long precision = kDefaultPrecision);

struct CuspPmf {
  std::vector<Real> probabilities;  // renormalized over 0..pmax
  Real raw_mass;                    // sum of the raw terms over F_g(mu)
  int pmax = 0;

  double mean() const;
  double factorial_moment(int r) const;  // E[(N)_{r+1}] from the pmf
};

// pmax <= 0 starts at ceil(4 E[N]) + 40 and grows until the tail is below
// 1e-12. An explicit pmax throws UserError when the truncated
// tail exceeds 1e-12.
CuspPmf cusp_pmf(int g, const Real& mu, int pmax = 0, long precision = kDefaultPrecision);

struct MuSolution {
  Real mu;
  Real seed;  // mu_c (1 - 5g / (2 n_target))
  Real mean;  // E[N] at mu
};

MuSolution solve_mu_for_target(int g, double n_target, long precision = kDefaultPrecision);

// Var(N) / E[N]^2 from the first two factorial moments.
Real concentration_ratio(int g, const Real& mu, long precision = kDefaultPrecision);
Real concentration_from_moments(const Real& m1f, const Real& m2f);

}  // namespace twp
