#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "twp/ring/real.hpp"

namespace twp {

struct PointSample {
  std::vector<double> points;  // ascending

  int count_in(double a, double b) const;
};

// Poisson process with intensity (cosh t - 1)/t dt on [0, t_max].
PointSample sample_poisson_process(double t_max, std::uint64_t seed);
PointSample sample_poisson_process(double t_max, std::mt19937_64& rng);

// Inverse-CDF draws from the Boltzmann cusp-count law.
class CuspSampler {
 public:
  CuspSampler(int g, const Real& mu, int pmax = 0);

  int draw(std::mt19937_64& rng) const;
  int pmax() const { return static_cast<int>(cdf_.size()) - 1; }
  double mean() const { return mean_; }

 private:
  std::vector<double> cdf_;
  double mean_ = 0.0;
};

int sample_cusp_count(int g, const Real& mu, std::uint64_t seed);

}  // namespace twp
