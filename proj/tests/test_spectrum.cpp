#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "twp/errors.hpp"
#include "twp/moments/bessel.hpp"
#include "twp/spectrum/counts.hpp"
#include "twp/spectrum/intensity.hpp"
#include "twp/spectrum/sampling.hpp"

using namespace twp;

TEST_SUITE("spectrum") {

TEST_CASE("intensity") {
  CHECK(intensity(0.7, 0.7) == 0.0);
  CHECK(intensity(0.0, 1.0) == doctest::Approx(0.2606512760786754).epsilon(1e-15));
  for (double b : {0.5, 2.0, 6.0}) {
    CHECK(std::abs(intensity(0.0, b) - intensity(0.0, 0.3) - intensity(0.3, b)) < 1e-12);
    CHECK(std::abs(intensity(0.2, b) - intensity_quadrature(0.2, b)) < 1e-10 * intensity(0.2, b));
  }
  CHECK_THROWS_AS(intensity(1.0, 0.5), UserError);
  CHECK_THROWS_AS(intensity(-1.0, 0.5), UserError);
}

TEST_CASE("systole tail") {
  CHECK(systole_tail(0.0) == 1.0);
  CHECK(systole_tail(1.0) == doctest::Approx(0.77054).epsilon(1e-4));
  double previous = 1.0;
  for (double t = 0.5; t < 5; t += 0.5) {
    CHECK(systole_tail(t) < previous);
    previous = systole_tail(t);
  }
}

TEST_CASE("length normalization") {
  const long wp = 160;
  const auto [c0, a0] = normalization(Real(0L, wp), wp);
  CHECK(c0.to_double() == doctest::Approx(std::numbers::pi / std::sqrt(6.0)));
  const Real near = mu_critical(wp) - Real(1e-8, wp);
  const auto [c, a] = normalization(near, wp);
  const double ratio = (c / a).to_double();
  CHECK(ratio > 0.99);
  CHECK(ratio < 1.01);
}

TEST_CASE("interval sets") {
  const IntervalSet s = IntervalSet::parse("0:1:2,1.5:2");
  REQUIRE(s.windows().size() == 2);
  CHECK(s.windows()[0].r == 2);
  CHECK(s.windows()[1].r == 1);
  CHECK(s.total_order() == 3);
  CHECK(s.limit() == doctest::Approx(std::pow(intensity(0, 1), 2) * intensity(1.5, 2)));
  CHECK_THROWS_AS(IntervalSet::parse(""), UserError);
  CHECK_THROWS_AS(IntervalSet::parse("1:0"), UserError);
  CHECK_THROWS_AS(IntervalSet::parse("0:1:0"), UserError);
  CHECK_THROWS_AS(IntervalSet::parse("0:1,0.5:2"), UserError);
  CHECK_THROWS_AS(IntervalSet::parse("0:1,1:2"), UserError);
  CHECK_THROWS_AS(IntervalSet::parse("a:b"), UserError);
}

TEST_CASE("expected counts") {
  const long wp = 128;
  const Real mu = mu_critical(wp) - Real(std::pow(5.0, -4), wp);
  CHECK(expected_nonseparating_count(5, mu, IntervalSet::parse("1:1"), wp).is_zero());
  const double one = expected_nonseparating_count(5, mu, IntervalSet::parse("0:1"), wp).to_double();
  const double wider = expected_nonseparating_count(5, mu, IntervalSet::parse("0:2"), wp).to_double();
  CHECK(one > 0.0);
  CHECK(wider > one);
  const double pair =
      expected_nonseparating_count(5, mu, IntervalSet::parse("0:1,1.5:2"), wp).to_double();
  CHECK(pair > 0.0);
  CHECK_THROWS_AS(expected_nonseparating_count(2, mu, IntervalSet::parse("0:1:3"), wp), UserError);
}

TEST_CASE("convergence table") {
  const IntervalSet w = IntervalSet::parse("1:2");
  CHECK_THROWS_AS(mp_convergence_table({8}, 2.0, w), UserError);
  CHECK_NOTHROW(mp_convergence_table({8}, 2.0, w, true));
  CHECK_THROWS_AS(mp_convergence_table({4}, 2.0, w, true), UserError);
  const auto rows = mp_convergence_table({4, 6, 8}, 4.0, w);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::abs(rows[i].ratio.to_double() - 1) < std::abs(rows[i - 1].ratio.to_double() - 1));
  }
  CHECK(rows[0].target == doctest::Approx(w.limit()));
}

TEST_CASE("poisson sampler") {
  const PointSample a = sample_poisson_process(3.0, 42);
  const PointSample b = sample_poisson_process(3.0, 42);
  CHECK(a.points == b.points);
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i] >= 0.0);
    CHECK(a.points[i] <= 3.0);
    if (i > 0) CHECK(a.points[i - 1] <= a.points[i]);
  }
  std::mt19937_64 rng(9);
  const int runs = 20000;
  double s1 = 0, s2 = 0, s12 = 0;
  for (int i = 0; i < runs; ++i) {
    const PointSample p = sample_poisson_process(2.0, rng);
    const double x = p.count_in(0, 1);
    const double y = p.count_in(1, 2);
    s1 += x;
    s2 += y;
    s12 += x * y;
  }
  const double cov = s12 / runs - (s1 / runs) * (s2 / runs);
  CHECK(std::abs(cov) < 0.05);
  CHECK(s1 / runs == doctest::Approx(intensity(0, 1)).epsilon(0.05));
}

TEST_CASE("cusp sampler") {
  const Real mu = mu_critical(128) / 2L;
  const CuspSampler s(3, mu);
  std::mt19937_64 rng(5);
  double total = 0;
  const int runs = 20000;
  for (int i = 0; i < runs; ++i) {
    const int k = s.draw(rng);
    CHECK(k >= 0);
    CHECK(k <= s.pmax());
    total += k;
  }
  CHECK(total / runs == doctest::Approx(s.mean()).epsilon(0.03));
  CHECK(sample_cusp_count(3, mu, 11) == sample_cusp_count(3, mu, 11));
}

}  // TEST_SUITE
