#include "twp/boltzmann/volumes.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "twp/errors.hpp"
#include "twp/moments/bessel.hpp"
#include "twp/tightpoly/poly.hpp"

namespace twp {

MomentFrame boltzmann_frame(const Real& mu, int max_index, long precision) {
  if (mu < 0.0 || !(mu < mu_critical(precision + 16))) {
    throw UserError("mu must lie in [0, mu_c)");
  }
  return make_frame(mu, max_index, precision);
}

TVolume t_volume(int g, int n, const std::vector<Real>& lengths, const MomentFrame& frame) {
  if (static_cast<int>(lengths.size()) != n) {
    throw UserError("t_volume needs exactly n boundary lengths");
  }
  const auto cell = default_poly_cache().get(g, n);
  const int d = cell->degree();
  if (frame.max_index() < d) throw UserError("moment frame has too few moments");
  if (frame.M(0).sign() <= 0) throw UserError("t_volume needs M_0 > 0 (mu < mu_c)");
  const long wp = frame.precision + 32;
  std::vector<Real> ell;
  ell.reserve(lengths.size());
  for (const auto& l : lengths) {
    if (l < 0.0) throw UserError("boundary lengths must be >= 0");
    const Real x = l.with_precision(wp);
    ell.push_back(x * x);
  }
  const auto eval = poly_eval(cell->poly, ell, frame.ratios(d), wp,
                              std::ldexp(1e6, -static_cast<int>(wp)));
  TVolume out;
  out.cancellation = eval.cancellation;
  if (eval.value.is_zero()) return out;
  const Real log_m0 = log(frame.M(0).with_precision(wp));
  out.value = LogValue(eval.value.sign(), log(abs(eval.value)) - (2 * g - 2 + n) * log_m0);
  return out;
}

TVolume t_volume(int g, int n, const std::vector<Real>& lengths, const Real& mu,
                 long precision) {
  if (!admissible(g, n)) throw UserError("(g,n) is not admissible");
  return t_volume(g, n, lengths, boltzmann_frame(mu, 3 * g - 3 + n, precision));
}

std::pair<Real, Real> boundary_ratio(int g, int n, const std::vector<Real>& lengths,
                                     const Real& mu, long precision) {
  if (!admissible(g, n)) throw UserError("(g,n) is not admissible");
  const MomentFrame frame = boltzmann_frame(mu, 3 * g - 3 + n, precision);
  const long wp = precision + 32;
  const Real scale = sqrt(-(frame.M(1).with_precision(wp) / frame.M(0)) / 3L);
  std::vector<Real> scaled;
  Real target(1L, wp);
  for (const auto& l : lengths) {
    const Real x = l.with_precision(wp);
    scaled.push_back(scale * x);
    if (!x.is_zero()) target *= sinh(x) / x;
  }
  const LogValue top = t_volume(g, n, scaled, frame).value;
  const LogValue bottom = t_volume(g, n, std::vector<Real>(lengths.size(), Real(0L, wp)),
                                   frame).value;
  return {(top / bottom).to_real(precision), target.with_precision(precision)};
}

std::vector<std::vector<std::pair<int, int>>> separating_decompositions(int g, int r, int q) {
  if (r <= 0 || q <= 1 || q > r + 1) throw UserError("separating sum needs r > 0, 1 < q <= r+1");
  std::vector<std::vector<std::pair<int, int>>> out;
  const int total_genus = g + q - r - 1;
  if (total_genus < 0) return out;
  std::vector<std::pair<int, int>> current;
  std::function<void(int, int)> walk = [&](int genus_left, int n_left) {
    const int placed = static_cast<int>(current.size());
    if (placed == q - 1) {
      if (n_left >= 1 && 2 * genus_left + n_left >= 3) {
        current.emplace_back(genus_left, n_left);
        out.push_back(current);
        current.pop_back();
      }
      return;
    }
    // keep at least one boundary for each remaining piece
    const int later = q - placed - 1;
    for (int gi = 0; gi <= genus_left; ++gi) {
      for (int ni = 1; ni <= n_left - later; ++ni) {
        if (2 * gi + ni < 3) continue;
        current.emplace_back(gi, ni);
        walk(genus_left - gi, n_left - ni);
        current.pop_back();
      }
    }
  };
  walk(total_genus, 2 * r);
  return out;
}

LogValue separating_sum(int g, int r, int q, const Real& mu, long precision) {
  if (g < 2) throw UserError("separating sum needs g >= 2");
  const auto pieces = separating_decompositions(g, r, q);
  if (pieces.empty()) return LogValue::zero();
  int d = 3 * g - 3;
  for (const auto& seq : pieces) {
    for (const auto& [gi, ni] : seq) d = std::max(d, 3 * gi - 3 + ni);
  }
  const MomentFrame frame = boltzmann_frame(mu, d, precision);
  std::map<std::pair<int, int>, LogValue> t_cache;
  const auto t_of = [&](int gi, int ni) {
    const auto it = t_cache.find({gi, ni});
    if (it != t_cache.end()) return it->second;
    const LogValue v =
        t_volume(gi, ni, std::vector<Real>(static_cast<std::size_t>(ni), Real(0L)), frame).value;
    t_cache.emplace(std::make_pair(gi, ni), v);
    return v;
  };
  LogValue sum;
  for (const auto& seq : pieces) {
    LogValue prod = LogValue::from_real(Real(1L, precision));
    for (const auto& [gi, ni] : seq) prod = prod * t_of(gi, ni);
    sum = sum + prod;
  }
  const LogValue m0 = LogValue::from_real(frame.M(0));
  return sum / (m0.pow(r) * t_of(g, 0));
}

}  // namespace twp
