#include "twp/spectrum/counts.hpp"

#include <cmath>

#include "twp/boltzmann/volumes.hpp"
#include "twp/errors.hpp"
#include "twp/moments/bessel.hpp"
#include "twp/tightpoly/poly.hpp"

namespace twp {

Real expected_nonseparating_count(int g, const Real& mu, const IntervalSet& windows,
                                  long precision) {
  const int r = windows.total_order();
  const int gp = g - r;
  const int np = 2 * r;
  if (g < 2 || gp < 0 || !admissible(gp, np)) {
    throw UserError("cutting " + std::to_string(r) + " curves from genus " + std::to_string(g) +
                    " does not leave an admissible surface");
  }
  const long wp = precision + 32;
  const int d = 3 * g - 3;
  const MomentFrame frame = boltzmann_frame(mu, d, wp);
  const std::vector<Real> ratios = frame.ratios(d);
  const Real c2 = -(frame.M(1) / frame.M(0)) / 12L;

  // squared scaled endpoints for each curve, window by window
  std::vector<Real> lo;
  std::vector<Real> hi;
  for (const auto& w : windows.windows()) {
    for (int i = 0; i < w.r; ++i) {
      lo.push_back(c2 * (w.a * w.a));
      hi.push_back(c2 * (w.b * w.b));
    }
  }

  // both boundaries of a cut curve share one length: l_{2j-1} = l_{2j} = t_j
  const auto cell = default_poly_cache().get(gp, np);
  const int dp = cell->degree();
  TightPoly collapsed(r, dp);
  for (const auto& [e, coef] : cell->poly.terms()) {
    Exponents out(static_cast<std::size_t>(r + dp));
    for (int j = 0; j < r; ++j) out[j] = static_cast<std::uint8_t>(e[2 * j] + e[2 * j + 1]);
    for (int k = 0; k < dp; ++k) out[r + k] = e[np + k];
    collapsed.add_term(std::move(out), coef);
  }

  // integral_{c a}^{c b} x (x^2)^q dx = (B^{q+1} - A^{q+1}) / (2q + 2)
  int qmax = 0;
  for (const auto& [e, coef] : collapsed.terms()) {
    for (int j = 0; j < r; ++j) qmax = std::max<int>(qmax, e[j]);
  }
  std::vector<std::vector<Real>> factor(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) {
    Real pa = lo[j];
    Real pb = hi[j];
    for (int q = 0; q <= qmax; ++q) {
      factor[j].push_back((pb - pa) / (2L * q + 2L));
      pa *= lo[j];
      pb *= hi[j];
    }
  }
  std::vector<std::vector<Real>> mpow(static_cast<std::size_t>(dp));
  for (int k = 0; k < dp; ++k) mpow[k].push_back(Real(1L, wp));

  Real sum(0L, wp);
  for (const auto& [e, coef] : collapsed.terms()) {
    Real term(coef, wp);
    for (int j = 0; j < r; ++j) term *= factor[j][e[j]];
    for (int k = 0; k < dp; ++k) {
      const int x = e[r + k];
      if (x == 0) continue;
      auto& table = mpow[k];
      while (static_cast<int>(table.size()) <= x) table.push_back(table.back() * ratios[k]);
      term *= table[x];
    }
    sum += term;
  }

  const auto top = default_poly_cache().get(g, 0);
  const Real pg = poly_eval(top->poly, {}, ratios, wp).value;
  return (sum / (pg * pow(Real(2L, wp), static_cast<long>(r)))).with_precision(precision);
}

std::vector<ConvergenceRow> mp_convergence_table(const std::vector<int>& genera, double beta,
                                                 const IntervalSet& windows, bool allow_any_beta,
                                                 long precision) {
  if (beta <= 2.0 && !allow_any_beta) {
    throw UserError("beta must exceed 2: the limit law needs mu_c - mu_g = o(g^-2)");
  }
  const long wp = precision + 16;
  const Real mu_c = mu_critical(wp);
  const double target = windows.limit();
  std::vector<ConvergenceRow> rows;
  for (int g : genera) {
    const Real mu = mu_c - pow(Real(static_cast<long>(g), wp), Real(-beta, wp));
    if (mu < 0.0) throw UserError("mu_g is negative for g = " + std::to_string(g));
    ConvergenceRow row{g, mu.with_precision(precision), Real(0L), target, Real(0L)};
    row.expected = expected_nonseparating_count(g, mu, windows, precision);
    row.ratio = row.expected / target;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace twp
