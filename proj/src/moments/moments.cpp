#include "twp/moments/moments.hpp"

#include "twp/errors.hpp"
#include "twp/moments/bessel.hpp"

namespace twp {

namespace {

// sum_m (-2 pi^2)^(m+k) r^m / (m! (m+k)!)
Real moment_series_value(int k, const Real& r, long wp) {
  const Real pi = Real::pi(wp);
  const Real c = -2L * pi * pi;
  Real term = pow(c, static_cast<long>(k)) / Real(factorial(k), wp);
  Real sum = term;
  const Real cr = c * r.with_precision(wp);
  for (long m = 1; m < 100000; ++m) {
    term = term * cr / (m * (m + k));
    sum += term;
    if (m > 8 && abs(term) <= abs(sum) * pow(Real(2L, wp), -wp)) break;
    if (term.is_zero()) break;
  }
  return sum;
}

}  // namespace

Real z_series(const Real& r, long precision) {
  // Z + mu = r * M(-1) with the k = -1 shift: sum_m (-2pi^2)^m r^(m+1)/(m!(m+1)!)
  const long wp = precision + 16;
  const Real pi = Real::pi(wp);
  const Real cr = -2L * pi * pi * r.with_precision(wp);
  Real term = r.with_precision(wp);
  Real sum = term;
  for (long m = 1; m < 100000; ++m) {
    term = term * cr / (m * (m + 1));
    sum += term;
    if (m > 8 && abs(term) <= abs(sum) * pow(Real(2L, wp), -wp)) break;
    if (term.is_zero()) break;
  }
  return sum.with_precision(precision);
}

Real z_derivative(const Real& r, long precision) {
  return moment_at_r(0, r, precision);
}

Real solve_R(const Real& mu, long precision) {
  const long wp = precision + 16;
  const Real mu_c = mu_critical(wp);
  const Real m = mu.with_precision(wp);
  if (m < 0.0 || m > mu_c) throw UserError("solve_R needs 0 <= mu <= mu_c");
  if (m.is_zero()) return Real(0L, precision);
  const Real j0 = find_j0(wp);
  const Real pi = Real::pi(wp);
  Real lo(0L, wp);
  Real hi = j0 * j0 / (8L * pi * pi);
  const Real rel = pow(Real(2L, wp), -(precision + 4));
  while (hi - lo > hi * rel) {
    const Real mid = (lo + hi) / 2L;
    if (z_series(mid, wp) < m) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return ((lo + hi) / 2L).with_precision(precision);
}

Real moment_at_r(int k, const Real& r, long precision) {
  if (k < 0) throw UserError("moment index must be >= 0");
  const long wp = precision + 16;
  const Real rr = r.with_precision(wp);
  if (rr < 1e-8) return moment_series_value(k, rr, wp).with_precision(precision);
  const Real pi = Real::pi(wp);
  const Real s = sqrt(rr);
  const Real x = 2L * pi * sqrt(Real(2L, wp)) * s;
  const Real prefactor = pow(-(sqrt(Real(2L, wp)) * pi) / s, static_cast<long>(k));
  return (prefactor * bessel_j(k, x, wp)).with_precision(precision);
}

Real moment(int k, const Real& mu, long precision) {
  const long wp = precision + 16;
  return moment_at_r(k, solve_R(mu, wp), wp).with_precision(precision);
}

std::vector<Real> MomentFrame::ratios(int count) const {
  if (count > max_index()) throw UserError("moment frame has too few moments");
  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) out.push_back(moments[k] / moments[0]);
  return out;
}

MomentFrame make_frame(const Real& mu, int max_index, long precision) {
  if (max_index < 0) throw UserError("moment frame needs max_index >= 0");
  const long wp = precision + 16;
  MomentFrame frame;
  frame.precision = precision;
  frame.mu = mu.with_precision(precision);
  const Real r = solve_R(mu, wp);
  frame.r_value = r.with_precision(precision);
  for (int k = 0; k <= max_index; ++k) {
    frame.moments.push_back(moment_at_r(k, r, wp).with_precision(precision));
  }
  return frame;
}

Real alpha1(long precision) {
  const long wp = precision + 16;
  const Real j0 = find_j0(wp);
  const Real inner = sqrt(2L * j0 / bessel_j(1, j0, wp));
  return sqrt(6L / Real::pi(wp) * inner).with_precision(precision);
}

Real alpha2(long precision) {
  const long wp = precision + 16;
  const Real j0 = find_j0(wp);
  return (sqrt(3L * j0 * sqrt(Real(5L, wp))) / Real::pi(wp)).with_precision(precision);
}

Real mu_below_critical(const Real& gap, long precision) {
  return (mu_critical(precision + 16) - gap.with_precision(precision + 16))
      .with_precision(precision);
}

}  // namespace twp
