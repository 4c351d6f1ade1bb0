#include "twp/moments/series.hpp"

#include "twp/errors.hpp"
#include "twp/tightpoly/poly.hpp"

namespace twp {

namespace {

// (-2 pi^2)^(j+k) / ((j+k)! j!)
PiPoly moment_coefficient(int k, int j) {
  Integer num = 1;
  num <<= static_cast<mp_bitcnt_t>(j + k);
  Rational c(num, factorial(j + k) * factorial(j));
  c.canonicalize();
  if ((j + k) % 2 != 0) c = -c;
  return PiPoly::monomial(j + k, c);
}

}  // namespace

std::vector<MuSeries> moment_series_all(int kmax, int order) {
  if (kmax < 0 || order < 0) throw UserError("moment series needs kmax, order >= 0");
  std::vector<MuSeries> out;
  if (order == 0) {
    for (int k = 0; k <= kmax; ++k) out.push_back(MuSeries::constant(moment_coefficient(k, 0), 0));
    return out;
  }
  const MuSeries r = series_invert_z(order);
  const std::vector<MuSeries> powers = series_powers(r, order);
  for (int k = 0; k <= kmax; ++k) {
    MuSeries m(order);
    for (int j = 0; j <= order; ++j) m = m + powers[j] * moment_coefficient(k, j);
    out.push_back(std::move(m));
  }
  return out;
}

MuSeries moment_series(int k, int order) { return moment_series_all(k, order).back(); }

MuSeries t_series(int g, int n, int order) {
  const auto cell = default_poly_cache().get(g, n);
  const TightPoly& p = cell->poly;
  const int d = p.m_count();
  const std::vector<MuSeries> moments = moment_series_all(d, order);
  const MuSeries inv0 = moments[0].inverse();

  std::vector<int> max_exp(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& [e, c] : p.terms()) {
    for (int k = 1; k <= d; ++k) max_exp[k] = std::max<int>(max_exp[k], e[n + k - 1]);
  }
  std::vector<std::vector<MuSeries>> powers(static_cast<std::size_t>(d) + 1);
  for (int k = 1; k <= d; ++k) {
    if (max_exp[k] > 0) powers[k] = series_powers(moments[k] * inv0, max_exp[k]);
  }

  MuSeries sum(order);
  for (const auto& [e, c] : p.terms()) {
    bool at_zero = true;
    for (int i = 0; i < n && at_zero; ++i) at_zero = e[i] == 0;
    if (!at_zero) continue;
    MuSeries term = MuSeries::constant(PiPoly(c), order);
    for (int k = 1; k <= d; ++k) {
      if (e[n + k - 1] > 0) term = term * powers[k][e[n + k - 1]];
    }
    sum = sum + term;
  }
  return sum * inv0.pow(2 * g - 2 + n);
}

std::vector<PiPoly> volume_extract(int g, int n, int pmax) {
  if (pmax < 0) throw UserError("volume_extract needs pmax >= 0");
  const MuSeries t = t_series(g, n, pmax);
  if (t.order() < pmax) throw UserError("series order below the requested pmax");
  std::vector<PiPoly> out;
  out.reserve(static_cast<std::size_t>(pmax) + 1);
  for (int p = 0; p <= pmax; ++p) out.push_back(t[p] * Rational(factorial(p)));
  return out;
}

}  // namespace twp
