#include <doctest.h>

#include <cmath>
#include <numbers>

#include "twp/boltzmann/cusps.hpp"
#include "twp/boltzmann/volumes.hpp"
#include "twp/errors.hpp"
#include "twp/moments/bessel.hpp"

using namespace twp;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long kWp = 160;

Real mu_c() { return mu_critical(kWp); }

std::vector<Real> zeros(int n) {
  return std::vector<Real>(static_cast<std::size_t>(n), Real(0L, kWp));
}

}  // namespace

TEST_SUITE("boltzmann") {

TEST_CASE("T at mu = 0 is the classical volume") {
  const Real zero(0L, kWp);
  CHECK(t_volume(0, 3, zeros(3), zero, kWp).value.to_double() == doctest::Approx(1.0));
  CHECK(t_volume(0, 4, zeros(4), zero, kWp).value.to_double() == doctest::Approx(2 * kPi * kPi));
  CHECK(t_volume(1, 1, zeros(1), zero, kWp).value.to_double() == doctest::Approx(kPi * kPi / 12));
  CHECK(t_volume(0, 5, zeros(5), zero, kWp).value.to_double() == doctest::Approx(10 * std::pow(kPi, 4)));
  const double L = 1.5;
  CHECK(t_volume(1, 1, {Real(L, kWp)}, zero, kWp).value.to_double() ==
        doctest::Approx((L * L + 4 * kPi * kPi) / 48));
  CHECK(t_volume(2, 0, {}, zero, kWp).value.to_double() ==
        doctest::Approx(43 * std::pow(kPi, 6) / 2160));
}

TEST_CASE("mu outside the allowed range") {
  CHECK_THROWS_AS(t_volume(2, 0, {}, mu_c() + Real(1e-12, kWp), kWp), UserError);
  CHECK_THROWS_AS(t_volume(2, 0, {}, Real(-0.01, kWp), kWp), UserError);
  CHECK_THROWS_AS(t_volume(1, 1, {}, Real(0.01, kWp), kWp), UserError);
  CHECK_THROWS_AS(t_volume(0, 2, zeros(2), Real(0.01, kWp), kWp), UserError);
}

TEST_CASE("factorial moments") {
  CHECK(factorial_moment(3, 0, Real(0L, kWp), kWp).to_double() == 0.0);
  double previous = 0.0;
  for (int i = 1; i <= 9; ++i) {
    const double m = factorial_moment(3, 0, mu_c() * (i / 10.0), kWp).to_double();
    CHECK(m > previous);
    previous = m;
  }
}

TEST_CASE("pmf reproduces the factorial moments") {
  for (auto [g, frac] : {std::pair{3, 0.5}, std::pair{4, 0.25}, std::pair{2, 0.7}}) {
    const Real mu = mu_c() * frac;
    const CuspPmf pmf = cusp_pmf(g, mu, 0, kWp);
    double total = 0.0;
    for (const Real& p : pmf.probabilities) {
      CHECK(p.sign() >= 0);
      total += p.to_double();
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pmf.raw_mass.to_double() == doctest::Approx(1.0).epsilon(1e-10));
    for (int r = 0; r <= 2; ++r) {
      const double exact = factorial_moment(g, r, mu, kWp).to_double();
      CHECK(std::abs(pmf.factorial_moment(r) - exact) <= 1e-8 * exact);
    }
  }
}

TEST_CASE("solving for a target cusp count") {
  double previous = 0.0;
  for (double target : {2.0, 5.0, 12.0}) {
    const MuSolution s = solve_mu_for_target(3, target, kWp);
    CHECK(std::abs(s.mean.to_double() - target) <= 1e-8 * target);
    CHECK(s.mu.to_double() > previous);
    CHECK(s.mu.to_double() < mu_c().to_double());
    previous = s.mu.to_double();
  }
  // the seed mu_c (1 - 5g / (2n)) improves with n
  const MuSolution far = solve_mu_for_target(3, 400.0, kWp);
  CHECK(far.seed.to_double() == doctest::Approx(mu_c().to_double() * (1 - 15.0 / 800)));
  CHECK(std::abs(far.seed.to_double() / far.mu.to_double() - 1) < 0.02);
  CHECK_THROWS_AS(solve_mu_for_target(3, -1.0, kWp), UserError);
}

TEST_CASE("concentration") {
  for (double frac : {0.2, 0.6, 0.95}) {
    const Real mu = mu_c() * frac;
    const Real c = concentration_ratio(4, mu, kWp);
    CHECK(c.sign() >= 0);
    const Real f1 = factorial_moment(4, 0, mu, kWp).to_real(kWp);
    const Real f2 = factorial_moment(4, 1, mu, kWp).to_real(kWp);
    const double direct = ((f2 + f1 - f1 * f1) / (f1 * f1)).to_double();
    CHECK(c.to_double() == doctest::Approx(direct).epsilon(1e-12));
    CHECK(concentration_from_moments(f1, f2).to_double() == doctest::Approx(direct));
  }
}

TEST_CASE("boundary ratio") {
  const Real mu = mu_c() / 2L;
  const auto [r0, t0] = boundary_ratio(2, 1, {Real(0L, kWp)}, mu, kWp);
  CHECK(r0.to_double() == doctest::Approx(1.0));
  CHECK(t0.to_double() == doctest::Approx(1.0));
  for (double L : {0.5, 1.0, 2.0}) {
    const auto [r, t] = boundary_ratio(1, 1, {Real(L, kWp)}, mu, kWp);
    CHECK(r.to_double() == doctest::Approx(1 + L * L / 6));
    CHECK(t.to_double() == doctest::Approx(std::sinh(L) / L));
  }
  double prev_gap = 1e9;
  for (int j = 2; j <= 6; ++j) {
    const Real m = mu_c() - Real(std::pow(10.0, -j), kWp);
    const auto [r, t] = boundary_ratio(3, 1, {Real(1.0, kWp)}, m, kWp);
    const double gap = std::abs(r.to_double() / t.to_double() - 1);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
}

TEST_CASE("separating decompositions") {
  const auto d = separating_decompositions(5, 1, 2);
  CHECK(d.size() == 4);
  for (const auto& seq : d) {
    REQUIRE(seq.size() == 2);
    CHECK(seq[0].second == 1);
    CHECK(seq[1].second == 1);
    CHECK(seq[0].first + seq[1].first == 5);
  }
  CHECK(separating_decompositions(3, 2, 2).size() > 0);
  for (int g = 4; g <= 6; ++g) {
    const LogValue s = separating_sum(g, 1, 2, mu_c() / 2L, kWp);
    CHECK(s.to_double() >= 0.0);
  }
}

}  // TEST_SUITE
