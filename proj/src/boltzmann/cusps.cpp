#include "twp/boltzmann/cusps.hpp"

#include <algorithm>
#include <cmath>

#include "twp/boltzmann/volumes.hpp"
#include "twp/errors.hpp"
#include "twp/moments/bessel.hpp"
#include "twp/moments/series.hpp"

namespace twp {

namespace {

constexpr int kMaxAdaptivePmax = 2000;

void require_genus(int g) {
  if (g < 2) throw UserError("cusp statistics need g >= 2");
}

LogValue moment_from_frame(int g, int r, const MomentFrame& frame) {
  if (frame.mu.is_zero()) return LogValue::zero();
  const auto zeros = std::vector<Real>(static_cast<std::size_t>(r + 1), Real(0L));
  const LogValue top = t_volume(g, r + 1, zeros, frame).value;
  const LogValue bottom = t_volume(g, 0, {}, frame).value;
  return LogValue::from_real(frame.mu).pow(r + 1) * top / bottom;
}

}  // namespace

LogValue factorial_moment(int g, int r, const Real& mu, long precision) {
  require_genus(g);
  if (r < 0) throw UserError("factorial moment order must be >= 0");
  const MomentFrame frame = boltzmann_frame(mu, 3 * g - 2 + r, precision);
  return moment_from_frame(g, r, frame);
}

double CuspPmf::mean() const { return factorial_moment(0); }

double CuspPmf::factorial_moment(int r) const {
  Real sum(0L, probabilities.empty() ? kDefaultPrecision : probabilities[0].precision());
  for (int p = 0; p <= pmax; ++p) {
    long falling = 1;
    for (int j = 0; j <= r; ++j) falling *= (p - j);
    if (falling != 0) sum += probabilities[p] * falling;
  }
  return sum.to_double();
}

CuspPmf cusp_pmf(int g, const Real& mu, int pmax, long precision) {
  require_genus(g);
  const long wp = precision + 32;
  const MomentFrame frame = boltzmann_frame(mu, 3 * g - 2, wp);
  const bool adaptive = pmax <= 0;
  if (adaptive) {
    const double mean = moment_from_frame(g, 0, frame).to_double();
    pmax = static_cast<int>(std::ceil(4.0 * mean)) + 40;
  }
  const Real f = t_volume(g, 0, {}, frame).value.to_real(wp);
  const Real m = mu.with_precision(wp);
  std::vector<Real> terms;
  Real total(0L, wp);
  CuspPmf out;
  for (;;) {
    const std::vector<PiPoly> volumes = volume_extract(g, 0, pmax);
    terms.clear();
    terms.reserve(volumes.size());
    Real mu_power(1L, wp);
    total = Real(0L, wp);
    for (int p = 0; p <= pmax; ++p) {
      terms.push_back(volumes[p].evaluate(wp) * mu_power / Real(factorial(p), wp));
      total += terms.back();
      mu_power *= m;
    }
    out.pmax = pmax;
    out.raw_mass = (total / f).with_precision(precision);
    if (!(out.raw_mass < 1.0 - 1e-12)) break;
    if (!adaptive || pmax >= kMaxAdaptivePmax) {
      throw UserError("cusp pmf truncated at pmax = " + std::to_string(pmax) +
                      " keeps only " + out.raw_mass.to_string(15) +
                      " of the mass; use a larger pmax");
    }
    pmax = std::min(kMaxAdaptivePmax, pmax * 3 / 2);
  }
  for (const auto& t : terms) out.probabilities.push_back((t / total).with_precision(precision));
  return out;
}

MuSolution solve_mu_for_target(int g, double n_target, long precision) {
  require_genus(g);
  if (!(n_target > 0.0)) throw UserError("target cusp count must be > 0");
  const long wp = precision + 16;
  const Real mu_c = mu_critical(wp);
  const auto mean_at = [&](const Real& log_gap) {
    const Real mu = mu_c - exp(log_gap);
    return factorial_moment(g, 0, mu, wp).to_real(wp);
  };
  // bracket in x = log(mu_c - mu): x_hi is mu = 0 where the mean vanishes
  Real x_hi = log(mu_c);
  Real x_lo = x_hi - 5L;
  const Real floor_x = log(mu_c) - 55L;
  while (mean_at(x_lo) < n_target) {
    x_hi = x_lo;
    x_lo -= 5L;
    if (x_lo < floor_x) {
      throw UserError("target " + std::to_string(n_target) +
                      " is not reachable below mu_c within tolerance");
    }
  }
  for (int it = 0; it < 400 && x_hi - x_lo > 1e-15; ++it) {
    const Real mid = (x_lo + x_hi) / 2L;
    if (mean_at(mid) < n_target) {
      x_hi = mid;
    } else {
      x_lo = mid;
    }
  }
  MuSolution out;
  const Real x = (x_lo + x_hi) / 2L;
  out.mu = (mu_c - exp(x)).with_precision(precision);
  out.mean = mean_at(x).with_precision(precision);
  out.seed = (mu_c * (1.0 - 5.0 * g / (2.0 * n_target))).with_precision(precision);
  return out;
}

Real concentration_from_moments(const Real& m1f, const Real& m2f) {
  return (m2f + m1f - m1f * m1f) / (m1f * m1f);
}

Real concentration_ratio(int g, const Real& mu, long precision) {
  require_genus(g);
  const long wp = precision + 16;
  const MomentFrame frame = boltzmann_frame(mu, 3 * g - 1, wp);
  const Real m1f = moment_from_frame(g, 0, frame).to_real(wp);
  const Real m2f = moment_from_frame(g, 1, frame).to_real(wp);
  return concentration_from_moments(m1f, m2f).with_precision(precision);
}

}  // namespace twp
