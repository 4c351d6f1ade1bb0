#include "twp/intersection/diagnostics.hpp"

#include <numeric>

#include "twp/errors.hpp"
#include "twp/intersection/tau.hpp"

namespace twp {

namespace {

int total(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

Real mp_asymptotic_value(int g, const std::vector<int>& pvec, long precision) {
  if (g < 2) throw UserError("asymptotic ratio needs g >= 2");
  const int k = static_cast<int>(pvec.size());
  const int wp = precision + 32;
  Real log_value = Real(0L, wp);
  log_value += k * log(Real(15L, wp));
  log_value += (2 * k - total(pvec)) * log(Real(static_cast<long>(g), wp));
  for (int p : pvec) log_value -= log(Real(double_factorial(2 * p + 1), wp));
  log_value += g * log(Real(Rational(25, 24), wp));
  log_value += (g - 1) * log(Real(2L, wp));
  log_value += log(sqrt(Real(Rational(3, 5), wp)));
  log_value += log_factorial(3 * g - 3, wp);
  log_value += 2 * log_factorial(g - 1, wp);
  log_value -= 2 * log(Real::pi(wp));
  log_value -= log(Real(static_cast<long>((5 * g - 5) * (5 * g - 3)), wp));
  return exp(log_value).with_precision(precision);
}

Real mp_asymptotic_ratio(int g, const std::vector<int>& pvec, long precision) {
  const int k = static_cast<int>(pvec.size());
  if (g < 2) throw UserError("asymptotic ratio needs g >= 2");
  for (int p : pvec) {
    if (p < 2) throw UserError("asymptotic ratio needs entries >= 2");
  }
  const int twos = 3 * g - 3 + k - total(pvec);
  if (total(pvec) > 3 * g - 3 || twos < 0) {
    throw UserError("index vector too large for genus " + std::to_string(g));
  }
  std::vector<int> idx = pvec;
  idx.insert(idx.end(), static_cast<std::size_t>(twos), 2);
  const Rational exact = intersection_number(TauKey(g, idx));
  const int wp = precision + 32;
  return (Real(exact, wp) / mp_asymptotic_value(g, pvec, wp)).with_precision(precision);
}

ComparisonBound comparison_bound(int g, const std::vector<int>& pvec,
                                 const std::vector<int>& qvec) {
  if (g < 2) throw UserError("comparison bound needs g >= 2");
  for (int x : pvec) {
    if (x < 1) throw UserError("comparison bound needs entries >= 1");
  }
  for (int x : qvec) {
    if (x < 1) throw UserError("comparison bound needs entries >= 1");
  }
  const int p = total(pvec);
  const int q = total(qvec);
  if (p + q > 3 * g - 3) {
    throw UserError("|p| + |q| exceeds 3g-3 for genus " + std::to_string(g));
  }
  std::vector<int> base;
  for (int x : pvec) base.push_back(x + 1);
  std::vector<int> big = base;
  for (int x : qvec) big.push_back(x + 1);
  big.insert(big.end(), static_cast<std::size_t>(3 * g - 3 - p - q), 2);
  base.insert(base.end(), static_cast<std::size_t>(3 * g - 3 - p), 2);

  ComparisonBound out;
  out.lhs = intersection_number(TauKey(g, big)) / Rational(factorial(3 * g - 3 - p - q));
  Rational factor = Rational(Integer(1));
  for (int i = 0; i < q; ++i) factor *= 3;
  for (std::size_t i = 0; i < qvec.size(); ++i) factor *= 15 * g;
  for (int x : qvec) factor /= Rational(double_factorial(2 * x + 3));
  out.rhs = intersection_number(TauKey(g, base)) / Rational(factorial(3 * g - 3 - p)) * factor;
  return out;
}

bool check_comparison_bound(int g, const std::vector<int>& pvec,
                            const std::vector<int>& qvec) {
  return comparison_bound(g, pvec, qvec).holds();
}

}  // namespace twp
