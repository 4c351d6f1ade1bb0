#include "twp/cli/commands.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>

#include "twp/boltzmann/cusps.hpp"
#include "twp/boltzmann/volumes.hpp"
#include "twp/cli/verify.hpp"
#include "twp/errors.hpp"
#include "twp/intersection/tau.hpp"
#include "twp/moments/bessel.hpp"
#include "twp/moments/moments.hpp"
#include "twp/moments/series.hpp"
#include "twp/spectrum/counts.hpp"
#include "twp/spectrum/sampling.hpp"
#include "twp/tightpoly/poly.hpp"

namespace twp::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string monomial_text(const Exponents& e, int n) {
  std::string out;
  const auto add = [&](const std::string& var, int power) {
    if (power == 0) return;
    if (!out.empty()) out += " ";
    out += var;
    if (power > 1) out += "^" + std::to_string(power);
  };
  for (int i = 0; i < n; ++i) add("l" + std::to_string(i + 1), e[i]);
  for (std::size_t k = n; k < e.size(); ++k) add("m" + std::to_string(k - n + 1), e[k]);
  return out.empty() ? "1" : out;
}

std::string exponent_list(const Exponents& e, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) out += (i > from ? " " : "") + std::to_string(e[i]);
  return out;
}

std::string real_text(const Real& x, long precision) {
  return decimal(x, std::max(17, digits_for(precision)));
}

std::string ratio_target(int g, const Real& mu, const Real& mu_c, int r) {
  const Real base = mu_c * (5L * g) / ((mu_c - mu) * 2L);
  return decimal(pow(base, static_cast<long>(r + 1)));
}

}  // namespace

Report cmd_tau(const RunConfig& cfg, int genus, const std::vector<int>& indices) {
  const TauKey key(genus, indices);
  const Rational value = intersection_number(key);
  Report rep;
  rep.fields["value"] = to_display_string(value);
  rep.fields["canonical"] = to_canonical_string(value);
  rep.fields["decimal"] = real_text(Real(value, cfg.precision), cfg.precision);
  rep.fields["correlator"] = key.to_string();
  rep.fields["dimension_ok"] = key.dimension_ok();
  return rep;
}

Report cmd_poly(const RunConfig& cfg, int g, int n) {
  const auto cell = default_poly_cache().get(g, n);
  const auto verdict = validate_cell_report(*cell, 2, cfg.seed);
  Report rep;
  rep.fields["g"] = g;
  rep.fields["n"] = n;
  rep.fields["degree"] = cell->degree();
  rep.fields["terms"] = cell->poly.size();
  rep.fields["verdict"] = std::string("symmetric ") + (verdict.symmetric ? "✓" : "✗") +
                          " graded " + (verdict.graded ? "✓" : "✗");
  if (!verdict.detail.empty()) rep.fields["detail"] = verdict.detail;
  const auto terms = cell->poly.sorted_terms();
  if (cfg.format == Format::json) {
    rep.fields["serialization"] = Json::parse(cell->poly.to_json().dump());
    return rep;
  }
  Table t;
  if (cfg.format == Format::csv) {
    t.columns = {"l_exponents", "m_exponents", "coefficient"};
    for (const auto& [e, c] : terms) {
      t.rows.push_back({exponent_list(e, 0, n), exponent_list(e, n, e.size()),
                        to_canonical_string(c)});
    }
  } else {
    t.columns = {"coefficient", "monomial"};
    for (const auto& [e, c] : terms) t.rows.push_back({to_canonical_string(c), monomial_text(e, n)});
  }
  rep.table = std::move(t);
  return rep;
}

Report cmd_volumes(const RunConfig& cfg, int g, int n, const std::vector<double>& lengths,
                   const Real& mu, int order) {
  Report rep;
  rep.fields["g"] = g;
  rep.fields["n"] = n;
  if (order > 0) {
    const auto vols = volume_extract(g, n, order);
    Table t{{"p", "volume", "decimal"}, {}};
    for (std::size_t p = 0; p < vols.size(); ++p) {
      t.rows.push_back({std::to_string(p), vols[p].to_string(),
                        decimal(vols[p].evaluate(cfg.precision))});
    }
    rep.fields["quantity"] = "V_{g,n+p}(0)";
    rep.table = std::move(t);
    return rep;
  }
  std::vector<Real> ls;
  for (double x : lengths) ls.emplace_back(x, cfg.precision);
  if (ls.empty()) ls.assign(static_cast<std::size_t>(n), Real(0L, cfg.precision));
  if (static_cast<int>(ls.size()) != n) throw UserError("--lengths needs exactly n values");
  const TVolume v = t_volume(g, n, ls, mu, cfg.precision);
  rep.fields["mu"] = real_text(mu, cfg.precision);
  rep.fields["precision"] = cfg.precision;
  rep.fields["T"] = v.value.to_string(digits_for(cfg.precision));
  rep.fields["cancellation"] = v.cancellation;
  if (n > 0) {
    const auto [ratio, target] = boundary_ratio(g, n, ls, mu, cfg.precision);
    Table t{{"g", "mu", "quantity", "target", "ratio"}, {}};
    t.rows.push_back({std::to_string(g), decimal(mu), decimal(ratio), decimal(target),
                      decimal(ratio / target)});
    rep.table = std::move(t);
  }
  return rep;
}

Report cmd_moments(const RunConfig& cfg, const Real& mu, int max_index) {
  const MomentFrame frame = make_frame(mu, max_index, cfg.precision);
  const int digits = digits_for(cfg.precision);
  Report rep;
  rep.fields["mu"] = decimal(mu, digits);
  rep.fields["mu_c"] = decimal(mu_critical(cfg.precision), digits);
  rep.fields["R"] = decimal(frame.r_value, digits);
  rep.fields["precision"] = cfg.precision;
  Table t{{"k", "M_k"}, {}};
  for (int k = 0; k <= max_index; ++k) t.rows.push_back({std::to_string(k), decimal(frame.M(k), digits)});
  rep.table = std::move(t);
  return rep;
}

Report cmd_cusps(const RunConfig& cfg, int g, const Real& mu, int pmax) {
  const long wp = cfg.precision;
  const Real mu_c = mu_critical(wp);
  Report rep;
  rep.fields["g"] = g;
  rep.fields["mu"] = decimal(mu);
  rep.fields["mu_c"] = decimal(mu_c);
  rep.fields["concentration"] = decimal(concentration_ratio(g, mu, wp));
  if (pmax > 0) {
    const CuspPmf pmf = cusp_pmf(g, mu, pmax, wp);
    rep.fields["pmf_mean"] = decimal(pmf.mean());
    rep.fields["pmf_raw_mass"] = decimal(pmf.raw_mass);
  }
  Table t{{"g", "mu", "quantity", "target", "ratio"}, {}};
  for (int r = 0; r <= 2; ++r) {
    const Real fm = factorial_moment(g, r, mu, wp).to_real(wp);
    const Real target = pow(mu_c * (5L * g) / ((mu_c - mu) * 2L), static_cast<long>(r + 1));
    t.rows.push_back({std::to_string(g), decimal(mu), decimal(fm), ratio_target(g, mu, mu_c, r),
                      decimal(fm / target)});
  }
  rep.table = std::move(t);
  return rep;
}

Report cmd_cusps_target(const RunConfig& cfg, int g, double target) {
  const MuSolution s = solve_mu_for_target(g, target, cfg.precision);
  Report rep;
  rep.fields["g"] = g;
  rep.fields["target"] = decimal(target);
  rep.fields["mu"] = decimal(s.mu);
  rep.fields["seed"] = decimal(s.seed);
  rep.fields["mean"] = decimal(s.mean);
  rep.fields["mu_c"] = decimal(mu_critical(cfg.precision));
  return rep;
}

Report cmd_spectrum(const RunConfig& cfg, const std::vector<int>& genera, double beta,
                    const IntervalSet& windows, bool allow_any_beta) {
  const auto rows = mp_convergence_table(genera, beta, windows, allow_any_beta, cfg.precision);
  Report rep;
  rep.fields["beta"] = decimal(beta);
  rep.fields["windows"] = windows.windows().size();
  rep.fields["order"] = windows.total_order();
  Table t{{"g", "mu", "expected", "target", "ratio"}, {}};
  for (const auto& r : rows) {
    t.rows.push_back({std::to_string(r.g), decimal(r.mu), decimal(r.expected), decimal(r.target),
                      decimal(r.ratio)});
  }
  rep.table = std::move(t);
  return rep;
}

Report cmd_sample_poisson(const RunConfig& cfg, double t_max, int runs,
                          const std::optional<IntervalSet>& windows) {
  if (runs < 1) throw UserError("--runs must be >= 1");
  std::mt19937_64 rng(cfg.seed);
  Report rep;
  rep.fields["kind"] = "poisson";
  rep.fields["t_max"] = decimal(t_max);
  rep.fields["seed"] = cfg.seed;
  rep.fields["runs"] = runs;
  if (runs == 1 && !windows) {
    const PointSample s = sample_poisson_process(t_max, rng);
    Table t{{"index", "t"}, {}};
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      t.rows.push_back({std::to_string(i), decimal(s.points[i])});
    }
    rep.table = std::move(t);
    return rep;
  }
  const IntervalSet w = windows ? *windows : IntervalSet::parse("0:" + decimal(t_max));
  std::vector<double> sums(w.windows().size(), 0.0);
  for (int run = 0; run < runs; ++run) {
    const PointSample s = sample_poisson_process(t_max, rng);
    for (std::size_t i = 0; i < sums.size(); ++i) {
      sums[i] += s.count_in(w.windows()[i].a, w.windows()[i].b);
    }
  }
  Table t{{"a", "b", "lambda", "mean"}, {}};
  for (std::size_t i = 0; i < sums.size(); ++i) {
    const auto& win = w.windows()[i];
    t.rows.push_back({decimal(win.a), decimal(win.b), decimal(intensity(win.a, win.b)),
                      decimal(sums[i] / runs)});
  }
  rep.table = std::move(t);
  return rep;
}

Report cmd_sample_cusps(const RunConfig& cfg, int g, const Real& mu, int runs) {
  if (runs < 1) throw UserError("--runs must be >= 1");
  std::mt19937_64 rng(cfg.seed);
  const CuspSampler sampler(g, mu);
  Report rep;
  rep.fields["kind"] = "cusps";
  rep.fields["g"] = g;
  rep.fields["mu"] = decimal(mu);
  rep.fields["seed"] = cfg.seed;
  rep.fields["runs"] = runs;
  rep.fields["exact_mean"] = decimal(sampler.mean());
  Table t{{"draw", "cusps"}, {}};
  double total = 0.0;
  for (int i = 0; i < runs; ++i) {
    const int n = sampler.draw(rng);
    total += n;
    if (runs <= 1000) t.rows.push_back({std::to_string(i), std::to_string(n)});
  }
  rep.fields["empirical_mean"] = decimal(total / runs);
  if (!t.rows.empty()) rep.table = std::move(t);
  return rep;
}

namespace {

struct MuArgs {
  std::string mu;
  std::string gap;

  void add(CLI::App* sub) {
    sub->add_option("--mu", mu, "Cusp fugacity");
    sub->add_option("--mu-gap", gap, "Distance below mu_c");
  }
  bool given() const { return !mu.empty() || !gap.empty(); }
  Real resolve(long precision) const {
    if (!mu.empty() && !gap.empty()) throw UserError("give --mu or --mu-gap, not both");
    if (!gap.empty()) return mu_critical(precision) - Real::from_string(gap, precision);
    if (!mu.empty()) return Real::from_string(mu, precision);
    throw UserError("--mu or --mu-gap is required");
  }
};

int suite_exit(const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tight Weil-Petersson volumes, cusp statistics and length-spectrum limits"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg = default_config();
  std::string format = "text";
  std::string cache_dir;
  app.add_option("--precision", cfg.precision, "Working precision in bits");
  app.add_option("--format", format, "json, csv or text");
  app.add_option("--cache-dir", cache_dir, "Cache directory (default $TWP_CACHE_DIR)");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--budget", cfg.budget, "Monomial budget per polynomial cell");

  int genus = 0;
  int boundaries = 0;
  std::vector<int> indices;
  std::vector<int> genera = {3, 4, 5, 6, 7, 8};
  std::vector<double> lengths;
  MuArgs mu_args;
  double beta = 4.0;
  bool allow_any_beta = false;
  std::string windows_text;
  int order = 0;
  int pmax = 0;
  double target = 0.0;
  std::string suite = "fast";
  std::string report_path = "verify_report.json";
  std::string kind = "poisson";
  double t_max = 3.0;
  int runs = 1;

  std::function<int()> action;
  const auto emit_report = [&](const std::function<Report()>& make) {
    action = [&, make] {
      emit(make(), cfg.format, out);
      return kExitOk;
    };
  };

  auto* tau = app.add_subcommand("tau", "Intersection number <tau_d1...tau_dn>_g");
  tau->add_option("-g,--genus,--g", genus)->required();
  tau->add_option("--indices", indices)->delimiter(',')->required();
  tau->callback([&] { emit_report([&] { return cmd_tau(cfg, genus, indices); }); });

  auto* poly = app.add_subcommand("poly", "Tight polynomial P_{g,n} with its validation verdict");
  poly->add_option("-g,--genus,--g", genus)->required();
  poly->add_option("-n,--boundaries,--n", boundaries)->required();
  poly->callback([&] { emit_report([&] { return cmd_poly(cfg, genus, boundaries); }); });

  auto* volumes = app.add_subcommand("volumes", "Tight volume T_{g,n}(L, mu) or its mu-series");
  volumes->add_option("-g,--genus,--g", genus)->required();
  volumes->add_option("-n,--boundaries,--n", boundaries)->required();
  volumes->add_option("-L,--lengths", lengths)->delimiter(',');
  volumes->add_option("--order", order, "Series order; switches to V_{g,n+p}(0)");
  mu_args.add(volumes);
  volumes->callback([&] {
    emit_report([&] {
      const Real mu = order > 0 ? Real(0L) : mu_args.resolve(cfg.precision);
      return cmd_volumes(cfg, genus, boundaries, lengths, mu, order);
    });
  });

  auto* moments = app.add_subcommand("moments", "Moment frame M_0..M_k at mu");
  mu_args.add(moments);
  moments->add_option("--order", order, "Largest moment index (default 4)");
  moments->callback([&] {
    emit_report([&] {
      return cmd_moments(cfg, mu_args.resolve(cfg.precision), order > 0 ? order : 4);
    });
  });

  auto* cusps = app.add_subcommand("cusps", "Cusp-count statistics, or mu for a target mean");
  cusps->add_option("-g,--genus,--g", genus)->required();
  mu_args.add(cusps);
  cusps->add_option("--target", target, "Target mean cusp count");
  cusps->add_option("--pmax", pmax, "Truncation for the pmf");
  cusps->callback([&] {
    emit_report([&] {
      if (target > 0.0) {
        if (mu_args.given()) throw UserError("give --target or a mu, not both");
        return cmd_cusps_target(cfg, genus, target);
      }
      return cmd_cusps(cfg, genus, mu_args.resolve(cfg.precision), pmax);
    });
  });

  auto* spectrum = app.add_subcommand("spectrum", "Expected non-separating counts against the limit");
  spectrum->add_option("-g,--genus,--g", genera, "Genera")->delimiter(',');
  spectrum->add_option("--beta", beta, "mu_g = mu_c - g^-beta");
  spectrum->add_option("--windows", windows_text, "a1:b1:r1,...")->default_str("1:2:1");
  spectrum->add_flag("--allow-any-beta", allow_any_beta, "Permit beta <= 2 with a warning");
  spectrum->callback([&] {
    emit_report([&] {
      if (allow_any_beta && beta <= 2.0) {
        err << "warning: beta <= 2 is outside mu_c - mu_g = o(g^-2)\n";
      }
      const IntervalSet w = IntervalSet::parse(windows_text.empty() ? "1:2:1" : windows_text);
      return cmd_spectrum(cfg, genera, beta, w, allow_any_beta);
    });
  });

  auto* sample = app.add_subcommand("sample", "Seeded draws: Poisson process or cusp counts");
  sample->add_option("--kind", kind, "poisson or cusps")
      ->check(CLI::IsMember({"poisson", "cusps"}));
  sample->add_option("-g,--genus,--g", genus);
  mu_args.add(sample);
  sample->add_option("--t-max", t_max, "Poisson window end");
  sample->add_option("--runs", runs, "Number of runs");
  sample->add_option("--windows", windows_text, "Windows for the run summary");
  sample->callback([&] {
    emit_report([&] {
      if (kind == "cusps") return cmd_sample_cusps(cfg, genus, mu_args.resolve(cfg.precision), runs);
      std::optional<IntervalSet> w;
      if (!windows_text.empty()) w = IntervalSet::parse(windows_text);
      return cmd_sample_poisson(cfg, t_max, runs, w);
    });
  });

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite and write a JSON report");
  verify->add_option("--suite", suite, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--report", report_path, "Report path");
  verify->callback([&] {
    action = [&] {
      std::vector<CriterionResult> results;
      for (int id = 1; id <= kCriterionCount; ++id) {
        if (suite == "fast" && !in_fast_suite(id)) continue;
        results.push_back(run_criterion(id, cfg.precision, cfg.seed));
        out << summary_line(results.back()) << "\n" << std::flush;
      }
      std::ofstream file(report_path);
      if (!file) throw UserError("cannot write report " + report_path);
      file << report_json(suite, results).dump(2) << "\n";
      return suite_exit(results);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUser;
  }

  try {
    if (!cache_dir.empty()) cfg.cache_dir = std::filesystem::path(cache_dir);
    cfg.format = parse_format(format);
    cfg.validate();
    cfg.apply();
    const int code = action();
    default_poly_cache().flush_intersections();
    return code;
  } catch (const UserError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUser;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const CacheError& e) {
    err << "cache error: " << e.what() << "\n";
    return kExitCache;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace twp::cli
