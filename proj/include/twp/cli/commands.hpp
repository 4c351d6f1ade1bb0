#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twp/cli/config.hpp"
#include "twp/spectrum/intensity.hpp"

namespace twp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUser = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitCache = 4;

Report cmd_tau(const RunConfig& cfg, int genus, const std::vector<int>& indices);
Report cmd_poly(const RunConfig& cfg, int g, int n);
// order > 0 switches to the series table V_{g,n+p}(0), p = 0..order.
Report cmd_volumes(const RunConfig& cfg, int g, int n, const std::vector<double>& lengths,
                   const Real& mu, int order);
Report cmd_moments(const RunConfig& cfg, const Real& mu, int max_index);
Report cmd_cusps(const RunConfig& cfg, int g, const Real& mu, int pmax);
Report cmd_cusps_target(const RunConfig& cfg, int g, double target);
Report cmd_spectrum(const RunConfig& cfg, const std::vector<int>& genera, double beta,
                    const IntervalSet& windows, bool allow_any_beta);
Report cmd_sample_poisson(const RunConfig& cfg, double t_max, int runs,
                          const std::optional<IntervalSet>& windows);
Report cmd_sample_cusps(const RunConfig& cfg, int g, const Real& mu, int runs);

// Parses argv, runs one subcommand and maps errors to exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twp::cli
