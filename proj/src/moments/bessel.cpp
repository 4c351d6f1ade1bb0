#include "twp/moments/bessel.hpp"

#include <map>
#include <mutex>

#include "twp/errors.hpp"

namespace twp {

Real bessel_j(int k, const Real& x, long precision) {
  if (k < 0) throw UserError("bessel_j needs k >= 0");
  if (x < 0.0 || x > 10.0) throw UserError("bessel_j supports 0 <= x <= 10");
  const long wp = precision + 24;
  const Real half = x.with_precision(wp) / 2L;
  const Real q = half * half;
  Real term = pow(half, static_cast<long>(k)) / Real(factorial(k), wp);
  Real sum = term;
  if (term.is_zero()) return sum.with_precision(precision);
  // terms peak near m ~ x/2 and then decay factorially
  for (long m = 0;; ++m) {
    term = -(term * q) / ((m + 1) * (m + 1 + k));
    sum += term;
    if (m > 8 && abs(term) < abs(sum) * pow(Real(2L, wp), -wp)) break;
    if (term.is_zero()) break;
  }
  return sum.with_precision(precision);
}

namespace {

std::mutex cache_mutex;
std::map<long, Real> j0_cache;

}  // namespace

Real find_j0(long precision) {
  {
    std::lock_guard lock(cache_mutex);
    const auto it = j0_cache.find(precision);
    if (it != j0_cache.end()) return it->second;
  }
  const long wp = precision + 16;
  Real lo(2L, wp);
  Real hi(3L, wp);
  const Real tol = pow(Real(2L, wp), -(precision + 4));
  while (hi - lo > tol) {
    const Real mid = (lo + hi) / 2L;
    if (bessel_j(0, mid, wp).sign() > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Real out = ((lo + hi) / 2L).with_precision(precision);
  std::lock_guard lock(cache_mutex);
  j0_cache.emplace(precision, out);
  return out;
}

Real mu_critical(long precision) {
  const long wp = precision + 16;
  const Real j0 = find_j0(wp);
  const Real pi = Real::pi(wp);
  return (j0 * bessel_j(1, j0, wp) / (4L * pi * pi)).with_precision(precision);
}

}  // namespace twp
