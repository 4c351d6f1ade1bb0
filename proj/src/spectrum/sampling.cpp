#include "twp/spectrum/sampling.hpp"

#include <algorithm>

#include "twp/boltzmann/cusps.hpp"
#include "twp/errors.hpp"
#include "twp/spectrum/intensity.hpp"

namespace twp {

int PointSample::count_in(double a, double b) const {
  const auto lo = std::lower_bound(points.begin(), points.end(), a);
  const auto hi = std::upper_bound(points.begin(), points.end(), b);
  return static_cast<int>(hi - lo);
}

PointSample sample_poisson_process(double t_max, std::mt19937_64& rng) {
  if (!(t_max > 0.0)) throw UserError("t_max must be > 0");
  const double total = intensity(0.0, t_max);
  std::poisson_distribution<long> count(total);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const long n = count(rng);
  PointSample out;
  out.points.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    const double level = uniform(rng) * total;
    double lo = 0.0;
    double hi = t_max;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (intensity(0.0, mid) < level) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    out.points.push_back(0.5 * (lo + hi));
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

PointSample sample_poisson_process(double t_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_poisson_process(t_max, rng);
}

CuspSampler::CuspSampler(int g, const Real& mu, int pmax) {
  const CuspPmf pmf = cusp_pmf(g, mu, pmax);
  double acc = 0.0;
  for (const auto& p : pmf.probabilities) {
    acc += p.to_double();
    cdf_.push_back(acc);
  }
  mean_ = pmf.mean();
}

int CuspSampler::draw(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> uniform(0.0, cdf_.back());
  const double u = uniform(rng);
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return std::min(static_cast<int>(it - cdf_.begin()), pmax());
}

int sample_cusp_count(int g, const Real& mu, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return CuspSampler(g, mu).draw(rng);
}

}  // namespace twp
