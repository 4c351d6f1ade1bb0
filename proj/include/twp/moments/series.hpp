#pragma once

#include <vector>

#include "twp/ring/mu_series.hpp"
#include "twp/ring/pi_poly.hpp"

namespace twp {

// M_k(mu) as an exact series to the given order.
MuSeries moment_series(int k, int order);

// M_0..M_kmax sharing one inversion of Z.
std::vector<MuSeries> moment_series_all(int kmax, int order);

// T_{g,n}(0, mu) as an exact series in mu.
MuSeries t_series(int g, int n, int order);

// V_{g,n+p}(0) = p! [mu^p] T_{g,n}(0, mu) for p = 0..pmax.
std::vector<PiPoly> volume_extract(int g, int n, int pmax);

}  // namespace twp
