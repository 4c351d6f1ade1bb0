#include <doctest.h>

#include <cmath>
#include <random>

#include "twp/errors.hpp"
#include "twp/ring/log_value.hpp"
#include "twp/ring/mu_series.hpp"
#include "twp/ring/pi_poly.hpp"
#include "twp/ring/rational.hpp"
#include "twp/ring/real.hpp"
#include "twp/ring/tight_poly.hpp"

using namespace twp;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

Exponents ex(std::initializer_list<int> e) {
  Exponents out;
  for (int x : e) out.push_back(static_cast<std::uint8_t>(x));
  return out;
}

const double kPi = 3.14159265358979323846;

}  // namespace

TEST_SUITE("ring") {

TEST_CASE("rationals stay canonical") {
  const Rational r = make_rational(6, -4);
  CHECK(to_canonical_string(r) == "-3/2");
  CHECK(to_canonical_string(q(5)) == "5/1");
  CHECK(to_display_string(q(5)) == "5");
  CHECK(parse_rational("10/4") == q(5, 2));
  CHECK(parse_rational("-7") == q(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), UserError);
  CHECK_THROWS_AS(parse_rational("x"), UserError);
  CHECK(factorial(6) == 720);
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(-1) == 1);
  CHECK(binomial(10, 3) == 120);
}

TEST_CASE("exact rational sums never round") {
  Rational s = 0;
  for (int k = 1; k <= 50; ++k) s += q(1, k * (k + 1));
  CHECK(s == q(50, 51));
}

TEST_CASE("real precision follows the wider operand") {
  const Real a(1L, 60);
  const Real b(3L, 200);
  CHECK((a / b).precision() == 200);
  CHECK(Real::pi(200).with_precision(53).precision() == 53);
  CHECK(std::abs(Real::pi(113).to_double() - kPi) < 1e-15);
  const Real third = Real(1L, 300) / 3L;
  CHECK(abs(third * 3L - 1L).to_double() < 1e-85);
}

TEST_CASE("log values multiply, divide and add with signs") {
  const LogValue a = LogValue::from_real(Real(-2.5));
  const LogValue b = LogValue::from_real(Real(4.0));
  CHECK((a * b).to_double() == doctest::Approx(-10.0));
  CHECK((a / b).to_double() == doctest::Approx(-0.625));
  CHECK((a + b).to_double() == doctest::Approx(1.5));
  CHECK((a - b).to_double() == doctest::Approx(-6.5));
  CHECK((b - b).is_zero());
  CHECK(a.pow(3).to_double() == doctest::Approx(-15.625));
  // far beyond double range
  LogValue big = LogValue::from_real(Real(1e300));
  big = big * big * big;
  CHECK(big.log_magnitude().to_double() == doctest::Approx(3 * 300 * std::log(10.0)));
  CHECK((big / big).to_double() == doctest::Approx(1.0));
}

TEST_CASE("pi polynomials") {
  const PiPoly a = PiPoly::monomial(1, q(2));
  const PiPoly b = PiPoly(q(1)) + a;
  CHECK((b * b).coefficient(2) == q(4));
  CHECK((b * b).coefficient(1) == q(4));
  CHECK((a + a * q(-1)).is_zero());
  CHECK(b.evaluate(113).to_double() == doctest::Approx(1 + 2 * kPi * kPi));
  CHECK(PiPoly::from_json(b.to_json()) == b);
  CHECK(b.evaluate(200).to_string(30) == b.evaluate(200).to_string(30));
}

TEST_CASE("series inversion of Z") {
  const MuSeries r1 = series_invert_z(1);
  CHECK(r1[0].is_zero());
  CHECK(r1[1] == PiPoly(q(1)));
  const MuSeries r2 = series_invert_z(2);
  CHECK(r2[2] == PiPoly::monomial(1, q(1)));

  // Z(R(mu)) + mu expands as sum_m (-2 pi^2)^m R^{m+1} / (m! (m+1)!)
  const int order = 8;
  const MuSeries r = series_invert_z(order);
  const auto powers = series_powers(r, order + 1);
  MuSeries z(order);
  for (int m = 0; m <= order; ++m) {
    Rational c = q(1);
    for (int i = 0; i < m; ++i) c *= -2;
    c /= Rational(factorial(m) * factorial(m + 1));
    z = z + powers[m + 1] * PiPoly::monomial(m, c);
  }
  CHECK(z == MuSeries::variable(order));
}

TEST_CASE("series composition") {
  const MuSeries r = series_invert_z(2);
  CHECK(series_compose(MuSeries::variable(2), r) == r);
  // 1 - 2 pi^2 R + pi^4 R^2 composed with R = mu + pi^2 mu^2
  MuSeries outer(2);
  outer[0] = PiPoly(q(1));
  outer[1] = PiPoly::monomial(1, q(-2));
  outer[2] = PiPoly::monomial(2, q(1));
  const MuSeries m0 = series_compose(outer, r);
  CHECK(m0[0] == PiPoly(q(1)));
  CHECK(m0[1] == PiPoly::monomial(1, q(-2)));
  CHECK(m0[2] == PiPoly::monomial(2, q(-1)));
  // truncation commutes with composition
  const MuSeries big = series_invert_z(6);
  const MuSeries lhs = series_compose(big, big).truncated(3);
  const MuSeries rhs = series_compose(big.truncated(3), big.truncated(3));
  CHECK(lhs == rhs);
  MuSeries bad = MuSeries::constant(PiPoly(q(1)), 2);
  CHECK_THROWS_AS(series_compose(r, bad), UserError);
}

TEST_CASE("series inverse and powers") {
  MuSeries s(5);
  s[0] = PiPoly(q(1));
  s[1] = PiPoly::monomial(1, q(-2));
  const MuSeries inv = s.inverse();
  CHECK(s * inv == MuSeries::constant(PiPoly(q(1)), 5));
  CHECK(s.pow(-2) == inv * inv);
  CHECK(s.pow(3) == s * s * s);
  MuSeries zero_const = MuSeries::variable(3);
  CHECK_THROWS_AS(zero_const.inverse(), UserError);
  // mixed orders truncate to the smaller one
  CHECK((MuSeries::variable(5) + MuSeries::variable(2)).order() == 2);
}

TEST_CASE("tight polynomial addition") {
  const TightPoly m1 = TightPoly::m(1, 1, 1);
  const TightPoly l1 = TightPoly::ell(1, 1, 1);
  const TightPoly p = m1 * q(-1) + l1 * q(1, 2);
  CHECK(p.size() == 2);
  CHECK(p + TightPoly(1, 1) == p);
  CHECK((p + (-p)).is_zero());
  CHECK((p - p).terms().empty());
}

TEST_CASE("tight polynomial products") {
  const TightPoly m1 = TightPoly::m(2, 1, 1);
  const TightPoly a = m1 * q(-1) + TightPoly::ell(2, 1, 1) * q(1, 2);
  const TightPoly b = m1 * q(-1) + TightPoly::ell(2, 1, 2) * q(1, 2);
  CHECK(a * TightPoly::constant(2, 1, q(1)) == a);
  const TightPoly sq = m1 * m1;
  CHECK(sq.size() == 1);
  CHECK(sq.coefficient(ex({0, 0, 2})) == q(1));
  const TightPoly prod = a * b;
  CHECK(prod.size() == 4);
  CHECK(prod.coefficient(ex({0, 0, 2})) == q(1));
  CHECK(prod.coefficient(ex({0, 1, 1})) == q(-1, 2));
  CHECK(prod.coefficient(ex({1, 0, 1})) == q(-1, 2));
  CHECK(prod.coefficient(ex({1, 1, 0})) == q(1, 4));
}

TEST_CASE("m derivatives") {
  TightPoly p11(1, 1);
  p11.add_term(ex({0, 1}), q(-1, 24));
  p11.add_term(ex({1, 0}), q(1, 48));
  const TightPoly d = poly_dm(p11, 1);
  CHECK(d.size() == 1);
  CHECK(d.coefficient(ex({0, 0})) == q(-1, 24));

  TightPoly p04(4, 2);
  p04.add_term(ex({0, 0, 0, 0, 1, 0}), q(-1));
  for (int i = 0; i < 4; ++i) {
    Exponents e(6, 0);
    e[i] = 1;
    p04.add_term(e, q(1, 2));
  }
  CHECK(poly_dm(p04, 2).is_zero());

  const TightPoly m = TightPoly::m(0, 1, 1);
  CHECK(poly_dm(m * m, 1) == m * q(2));
}

TEST_CASE("boundary integrals") {
  const TightPoly one = TightPoly::constant(2, 1, q(1));
  const TightPoly i1 = poly_integrate_boundary(one, 2);
  CHECK(i1 == TightPoly::ell(2, 1, 2) * q(1, 2));

  TightPoly p(2, 1);
  p.add_term(ex({0, 0, 1}), q(-1, 24));
  p.add_term(ex({0, 1, 0}), q(1, 48));
  const TightPoly ip = poly_integrate_boundary(p, 2);
  CHECK(ip.coefficient(ex({0, 1, 1})) == q(-1, 48));
  CHECK(ip.coefficient(ex({0, 2, 0})) == q(1, 192));

  TightPoly sq(2, 0);
  sq.add_term(ex({0, 2}), q(1));
  CHECK(poly_integrate_boundary(sq, 2).coefficient(ex({0, 3})) == q(1, 6));
}

TEST_CASE("evaluation") {
  const TightPoly p03 = TightPoly::constant(3, 0, q(1));
  const std::vector<Real> ls = {Real(1.5), Real(2.0), Real(7.0)};
  CHECK(poly_eval(p03, ls, {}, 113).value.to_double() == 1.0);

  TightPoly p04(4, 1);
  p04.add_term(ex({0, 0, 0, 0, 1}), q(-1));
  for (int i = 0; i < 4; ++i) {
    Exponents e(5, 0);
    e[i] = 1;
    p04.add_term(e, q(1, 2));
  }
  const Real pi = Real::pi(113);
  const std::vector<Real> zero(4, Real(0L));
  const std::vector<Real> m = {-(pi * pi) * 2L};
  CHECK(poly_eval(p04, zero, m, 113).value.to_double() == doctest::Approx(19.7392088021787));

  TightPoly p11(1, 1);
  p11.add_term(ex({0, 1}), q(-1, 24));
  p11.add_term(ex({1, 0}), q(1, 48));
  const std::vector<Real> l2 = {Real(2.0)};
  const std::vector<Real> m0 = {Real(0L)};
  CHECK(poly_eval(p11, l2, m0, 113).value.to_double() == doctest::Approx(1.0 / 24));

  std::vector<PiPoly> mex = {PiPoly::monomial(1, q(-2))};
  std::vector<PiPoly> lex = {PiPoly(q(0))};
  CHECK(poly_eval_exact(p11, lex, mex) == PiPoly::monomial(1, q(1, 12)));
}

TEST_CASE("cancellation flag") {
  TightPoly p(0, 2);
  p.add_term(ex({2, 0}), q(1));
  p.add_term(ex({0, 1}), q(-1));
  const Real x(1e10);
  const std::vector<Real> m = {x, x * x * (1.0 + 1e-30)};
  const auto r = poly_eval(p, {}, m, 53);
  CHECK(r.cancellation);
}

TEST_CASE("sorted order and serialization") {
  TightPoly p(2, 2);
  p.add_term(ex({0, 0, 0, 1}), q(-1, 24));
  p.add_term(ex({0, 0, 2, 0}), q(1, 12));
  p.add_term(ex({1, 0, 1, 0}), q(-1, 24));
  p.add_term(ex({0, 1, 1, 0}), q(-1, 24));
  p.add_term(ex({2, 0, 0, 0}), q(1, 192));
  const auto terms = p.sorted_terms();
  for (std::size_t i = 0; i < terms.size(); ++i) CHECK(p.graded_degree(terms[i].first) == 2);
  const auto j = p.to_json();
  CHECK(j.size() == 5);
  CHECK(j[0][2].get<std::string>().find('/') != std::string::npos);
  CHECK(TightPoly::from_json(2, 2, j) == p);
  CHECK(j.dump() == TightPoly::from_json(2, 2, j).to_json().dump());
}

TEST_CASE("no stored zeros and shape checks") {
  TightPoly p(1, 1);
  p.add_term(ex({1, 0}), q(1, 2));
  p.add_term(ex({1, 0}), q(-1, 2));
  CHECK(p.is_zero());
  p.add_term(ex({0, 0}), q(0));
  CHECK(p.is_zero());
  CHECK_THROWS(p + TightPoly(2, 1));
}

TEST_CASE("permuting boundaries") {
  TightPoly p(3, 0);
  p.add_term(ex({2, 1, 0}), q(1));
  const std::vector<int> perm = {2, 0, 1};
  const TightPoly r = p.permuted_boundaries(perm);
  CHECK(r.coefficient(ex({1, 0, 2})) == q(1));
}

}  // TEST_SUITE
