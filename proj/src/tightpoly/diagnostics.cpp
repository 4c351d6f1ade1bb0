#include "twp/tightpoly/diagnostics.hpp"

#include <numeric>

#include "twp/errors.hpp"
#include "twp/intersection/tau.hpp"
#include "twp/tightpoly/poly.hpp"

namespace twp {

PhiValue phi(int g, int n, const std::vector<int>& pvec, const MomentFrame& frame) {
  if (g < 2) throw UserError("phi needs g >= 2");
  if (n < 0) throw UserError("phi needs n >= 0");
  const int p = std::accumulate(pvec.begin(), pvec.end(), 0);
  PhiValue out;
  if (p > 3 * g - 3) {
    out.in_range = false;
    return out;
  }
  const long wp = frame.precision + 32;
  std::vector<int> idx;
  for (int x : pvec) {
    if (x < 1) throw UserError("phi needs entries >= 1");
    idx.push_back(x + 1);
  }
  idx.insert(idx.end(), static_cast<std::size_t>(3 * g - 3 - p), 2);
  const Rational tau = intersection_number(TauKey(g, idx));
  if (tau == 0) return out;
  const Real ratio = -(frame.M(1).with_precision(wp) / frame.M(0).with_precision(wp));
  if (ratio.sign() <= 0) throw UserError("phi needs -M_1/M_0 > 0");
  Real log_mag = log(abs(Real(tau, wp)));
  log_mag += (3 * g - 3 + n - p) * log(ratio);
  log_mag += n * log(Real(5L * g, wp));
  log_mag -= log_factorial(3 * g - 3 - p, wp);
  const int sign = (pvec.size() % 2 == 0 ? 1 : -1) * sgn(tau);
  out.value = LogValue(sign, log_mag);
  return out;
}

namespace {

std::vector<Real> m_values(const TightPoly& p, const MomentFrame& frame) {
  if (frame.max_index() < p.m_count()) {
    throw UserError("moment frame needs M_0..M_" + std::to_string(p.m_count()));
  }
  return frame.ratios(p.m_count());
}

}  // namespace

Real alpha_deriv(int g, int n, const std::vector<int>& pvec, const MomentFrame& frame) {
  const auto cell = default_poly_cache().get(g, n);
  const TightPoly d = poly_dm_multi(cell->poly, pvec);
  if (d.is_zero()) return Real(0L, frame.precision);
  const std::vector<Real> ell(static_cast<std::size_t>(n), Real(0L, frame.precision));
  return poly_eval(d, ell, m_values(d, frame), frame.precision + 32)
      .value.with_precision(frame.precision);
}

Real alpha_coeff(int g, int n, const std::vector<int>& pvec, const std::vector<int>& qvec,
                 const MomentFrame& frame) {
  if (static_cast<int>(qvec.size()) != n) throw UserError("qvec must have n entries");
  const auto cell = default_poly_cache().get(g, n);
  const TightPoly d = poly_dm_multi(cell->poly, pvec);
  // keep the monomials whose l-block equals qvec, as a polynomial in m only
  TightPoly slice(0, d.m_count());
  for (const auto& [e, c] : d.terms()) {
    bool match = true;
    for (int i = 0; i < n && match; ++i) match = e[i] == qvec[i];
    if (!match) continue;
    slice.add_term(Exponents(e.begin() + n, e.end()), c);
  }
  if (slice.is_zero()) return Real(0L, frame.precision);
  const long wp = frame.precision + 32;
  const Real value = poly_eval(slice, {}, m_values(slice, frame), wp).value;
  const int q = std::accumulate(qvec.begin(), qvec.end(), 0);
  const Real scale = -(frame.M(1).with_precision(wp) / frame.M(0).with_precision(wp)) / 3L;
  return (value * pow(scale, static_cast<long>(q))).with_precision(frame.precision);
}

}  // namespace twp
