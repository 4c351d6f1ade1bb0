#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twp/ring/real.hpp"

namespace twp {

// lambda_{a,b} = integral_a^b (cosh t - 1)/t dt by its power series.
double intensity(double a, double b);
// Same integral by adaptive Gauss-Kronrod quadrature.
double intensity_quadrature(double a, double b);

double systole_tail(double t);

// (sqrt(-M_1/(12 M_0)), alpha_1^{-1} (mu_c - mu)^{-1/4})
std::pair<Real, Real> normalization(const Real& mu, long precision = kDefaultPrecision);

// Disjoint ordered windows [a_i, b_i] with multiplicities r_i >= 1.
class IntervalSet {
 public:
  struct Window {
    double a;
    double b;
    int r;
  };

  IntervalSet() = default;
  explicit IntervalSet(std::vector<Window> windows);

  // "a1:b1:r1,a2:b2:r2"; r defaults to 1 when omitted.
  static IntervalSet parse(const std::string& text);

  const std::vector<Window>& windows() const { return windows_; }
  int total_order() const;
  // prod lambda_{a_i,b_i}^{r_i}
  double limit() const;

 private:
  std::vector<Window> windows_;
};

}  // namespace twp
