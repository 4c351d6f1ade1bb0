#pragma once

#include <vector>

#include "twp/ring/real.hpp"

namespace twp {

// Z(r, mu) + mu as its power series in r.
Real z_series(const Real& r, long precision = kDefaultPrecision);
// dZ/dr, i.e. M_0 as a function of r.
Real z_derivative(const Real& r, long precision = kDefaultPrecision);

// Root of Z(., mu) on [0, j0^2 / (8 pi^2)] for 0 <= mu <= mu_c.
Real solve_R(const Real& mu, long precision = kDefaultPrecision);

// M_k as a function of r = R(mu): Bessel form, with the series form below
// r = 1e-8.
Real moment_at_r(int k, const Real& r, long precision = kDefaultPrecision);
Real moment(int k, const Real& mu, long precision = kDefaultPrecision);

// mu, R(mu) and M_0..M_D at one precision.
struct MomentFrame {
  Real mu;
  Real r_value;
  std::vector<Real> moments;
  long precision = kDefaultPrecision;

  int max_index() const { return static_cast<int>(moments.size()) - 1; }
  const Real& M(int k) const { return moments.at(k); }
  // M_k / M_0 for k = 1..count
  std::vector<Real> ratios(int count) const;
};

MomentFrame make_frame(const Real& mu, int max_index, long precision = kDefaultPrecision);

Real alpha1(long precision = kDefaultPrecision);
Real alpha2(long precision = kDefaultPrecision);

// Convenience grid points near mu_c.
Real mu_below_critical(const Real& gap, long precision = kDefaultPrecision);

}  // namespace twp
