#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <map>
#include <fstream>
#include <sstream>

#include "twp/errors.hpp"
#include "twp/intersection/tau.hpp"
#include "twp/moments/bessel.hpp"
#include "twp/moments/moments.hpp"
#include "twp/ring/pi_poly.hpp"
#include "twp/tightpoly/diagnostics.hpp"
#include "twp/tightpoly/poly.hpp"
#include "twp/tightpoly/store.hpp"

using namespace twp;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

Exponents ex(std::initializer_list<int> e) {
  Exponents out;
  for (int x : e) out.push_back(static_cast<std::uint8_t>(x));
  return out;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("twp_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// m_k -> (-2 pi^2)^k / k!, leaving the l-block symbolic
std::map<std::vector<int>, PiPoly> at_mu_zero(const TightPoly& p) {
  const int n = p.n_boundaries();
  std::map<std::vector<int>, PiPoly> out;
  for (const auto& [e, coef] : p.terms()) {
    PiPoly v(coef);
    for (int k = 1; k <= p.m_count(); ++k) {
      Rational c = 1;
      for (int i = 0; i < k; ++i) c *= -2;
      const PiPoly mk = PiPoly::monomial(k, c / Rational(factorial(k)));
      for (int i = 0; i < e[n + k - 1]; ++i) v = v * mk;
    }
    out[std::vector<int>(e.begin(), e.begin() + n)] += v;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// Expands a product of factors, each a list of (l-exponents, coefficient of pi^2j) terms.
using Sym = std::map<std::vector<int>, PiPoly>;
Sym mul(const Sym& a, const Sym& b) {
  Sym out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

TEST_SUITE("tightpoly") {

TEST_CASE("admissibility") {
  CHECK_FALSE(admissible(0, 2));
  CHECK(admissible(0, 3));
  CHECK_FALSE(admissible(1, 0));
  CHECK(admissible(1, 1));
  CHECK(admissible(2, 0));
  CHECK_THROWS_AS(p_gn(0, 2), UserError);
  CHECK_THROWS_AS(p_gn(1, 0), UserError);
}

TEST_CASE("closed genus-two polynomial") {
  const TightPoly p = p_g0(2).poly;
  CHECK(p.size() == 3);
  CHECK(p.coefficient(ex({0, 0, 1})) == -intersection_number(TauKey(2, {4})));
  CHECK(p.coefficient(ex({0, 0, 1})) == q(-1, 1152));
  CHECK(p.coefficient(ex({1, 1, 0})) == intersection_number(TauKey(2, {2, 3})));
  CHECK(p.coefficient(ex({3, 0, 0})) == -intersection_number(TauKey(2, {2, 2, 2})) / 6);
  for (const auto& [e, c] : p.terms()) CHECK(p.graded_degree(e) == 3);
}

TEST_CASE("hand-derived low cells") {
  CHECK(p_gn(0, 3).poly == TightPoly::constant(3, 0, q(1)));
  TightPoly p11(1, 1);
  p11.add_term(ex({1, 0}), q(1, 48));
  p11.add_term(ex({0, 1}), q(-1, 24));
  CHECK(p_gn(1, 1).poly == p11);
  TightPoly p04(4, 1);
  p04.add_term(ex({0, 0, 0, 0, 1}), q(-1));
  for (int i = 0; i < 4; ++i) {
    Exponents e(5, 0);
    e[i] = 1;
    p04.add_term(e, q(1, 2));
  }
  CHECK(p_gn(0, 4).poly == p04);
  TightPoly p12(2, 2);
  p12.add_term(ex({0, 0, 0, 1}), q(-1, 24));
  p12.add_term(ex({0, 0, 2, 0}), q(1, 12));
  p12.add_term(ex({1, 0, 1, 0}), q(-1, 24));
  p12.add_term(ex({0, 1, 1, 0}), q(-1, 24));
  p12.add_term(ex({2, 0, 0, 0}), q(1, 192));
  p12.add_term(ex({0, 2, 0, 0}), q(1, 192));
  p12.add_term(ex({1, 1, 0, 0}), q(1, 96));
  CHECK(p_gn(1, 2).poly == p12);
}

TEST_CASE("classical volumes at mu = 0") {
  const PiPoly one(q(1));
  const auto pi2 = [](long a, long b) { return PiPoly::monomial(1, make_rational(a, b)); };
  const auto pi4 = [](long a, long b) { return PiPoly::monomial(2, make_rational(a, b)); };

  // V_{0,5} = sum l_i^2/8 + sum_{i<j} l_i l_j / 2 + 3 pi^2 sum l_i + 10 pi^4, l = L^2
  Sym v05;
  v05[{0, 0, 0, 0, 0}] = pi4(10, 1);
  for (int i = 0; i < 5; ++i) {
    std::vector<int> e(5, 0);
    e[i] = 1;
    v05[e] = pi2(3, 1);
    e[i] = 2;
    v05[e] = PiPoly(q(1, 8));
    for (int j = i + 1; j < 5; ++j) {
      std::vector<int> f(5, 0);
      f[i] = f[j] = 1;
      v05[f] = PiPoly(q(1, 2));
    }
  }
  CHECK(at_mu_zero(p_gn(0, 5).poly) == v05);

  // V_{2,1}(L) = (4pi^2 + l)(12 pi^2 + l)(6960 pi^4 + 384 pi^2 l + 5 l^2) / 2211840
  const Sym a = {{{0}, pi2(4, 1)}, {{1}, one}};
  const Sym b = {{{0}, pi2(12, 1)}, {{1}, one}};
  const Sym c = {{{0}, pi4(6960, 1)}, {{1}, pi2(384, 1)}, {{2}, PiPoly(q(5))}};
  Sym v21 = mul(mul(a, b), c);
  for (auto& [e, v] : v21) v = v * q(1, 2211840);
  CHECK(at_mu_zero(p_gn(2, 1).poly) == v21);

  // V_{1,2}(0) = pi^4 / 4 and V_{1,3}(0) = 14 pi^6 / 9
  CHECK(at_mu_zero(p_gn(1, 2).poly).at({0, 0}) == pi4(1, 4));
  CHECK(at_mu_zero(p_gn(1, 3).poly).at({0, 0, 0}) == PiPoly::monomial(3, q(14, 9)));
}

TEST_CASE("validator accepts built cells and rejects a mutation") {
  for (int g = 0; g <= 3; ++g) {
    for (int n = 0; n <= 4; ++n) {
      if (!admissible(g, n)) continue;
      const PolyCell cell = p_gn(g, n);
      CHECK_MESSAGE(validate_cell(cell, 3), "P_" << g << "," << n);
    }
  }
  PolyCell bad = p_gn(1, 2);
  bad.poly.add_term(ex({2, 0, 0, 0}), q(1, 7));
  const auto rep = validate_cell_report(bad, 3);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.symmetric);

  PolyCell off_degree = p_gn(0, 4);
  off_degree.poly.add_term(ex({1, 1, 0, 0, 0}), q(1));
  CHECK_FALSE(validate_cell_report(off_degree, 3).graded);
}

TEST_CASE("derivatives in several m variables") {
  const TightPoly p = p_g0(2).poly;
  const TightPoly d = poly_dm_multi(p, {1, 2});
  CHECK(d == TightPoly::constant(0, 3, intersection_number(TauKey(2, {2, 3}))));
  CHECK(poly_dm_multi(p, {9}).is_zero());
}

TEST_CASE("cell store round trip") {
  const auto dir = scratch("store");
  const PolyCell cell = p_gn(1, 2);
  store_cell(dir, cell);
  const auto loaded = load_cell(dir, 1, 2);
  REQUIRE(loaded.has_value());
  CHECK(loaded->poly == cell.poly);
  CHECK_FALSE(load_cell(dir, 3, 3).has_value());
  std::ifstream in(cell_path(dir, 1, 2));
  std::string header;
  std::getline(in, header);
  CHECK(header == "TWPCACHE v1 poly 1 2 2");
  std::filesystem::remove_all(dir);
}

TEST_CASE("damaged cache files are rejected") {
  const auto dir = scratch("damage");
  store_cell(dir, p_gn(1, 2));
  const auto path = cell_path(dir, 1, 2);
  std::string text;
  {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  SUBCASE("truncated") {
    std::ofstream(path, std::ios::trunc) << text.substr(0, text.size() - 10);
    CHECK_THROWS_AS(load_cell(dir, 1, 2), CacheError);
  }
  SUBCASE("tampered") {
    std::string t = text;
    t[t.size() - 5] = t[t.size() - 5] == '1' ? '2' : '1';
    std::ofstream(path, std::ios::trunc) << t;
    CHECK_THROWS_AS(load_cell(dir, 1, 2), CacheError);
  }
  SUBCASE("wrong version") {
    std::string t = text;
    t.replace(t.find("v1"), 2, "v9");
    std::ofstream(path, std::ios::trunc) << t;
    CHECK_THROWS_AS(load_cell(dir, 1, 2), CacheError);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache builds, persists and reloads") {
  const auto dir = scratch("cache");
  {
    PolyCache cache(dir);
    const auto cell = cache.get(2, 2);
    CHECK(cell->poly.size() > 0);
    CHECK(std::filesystem::exists(cell_path(dir, 2, 1)));
    CHECK(std::filesystem::exists(cell_path(dir, 2, 2)));
  }
  PolyCache warm(dir);
  CHECK(warm.get(2, 2)->poly == p_gn(2, 2).poly);
  std::filesystem::remove_all(dir);
}

TEST_CASE("budget") {
  PolyCache small(std::nullopt, 50);
  CHECK_NOTHROW(small.get(2, 0));
  CHECK_THROWS_AS(small.get(3, 3), BudgetError);
}

TEST_CASE("phi and alpha") {
  const long wp = 160;
  const MomentFrame zero = make_frame(Real(0L, wp), 8, wp);
  // n = 0, p empty, g = 2 at mu = 0: <tau_2^3>_2 (2 pi^2)^3 / 3!
  const Real pi = Real::pi(wp);
  const Real expect = Real(intersection_number(TauKey(2, {2, 2, 2})), wp) *
                      pow(pi * pi * 2L, 3L) / 6L;
  const PhiValue v = phi(2, 0, {}, zero);
  CHECK(v.in_range);
  CHECK(v.to_real(wp).to_double() == doctest::Approx(expect.to_double()).epsilon(1e-14));

  const Real mu = mu_critical(wp) / 2L;
  const MomentFrame frame = make_frame(mu, 12, wp);
  const Real ratio = -(frame.M(1) / frame.M(0));
  for (int n = 0; n <= 3; ++n) {
    const Real lhs = phi(3, n, {1}, frame).to_real(wp) / phi(3, 0, {1}, frame).to_real(wp);
    const Real rhs = pow(ratio * 15L, static_cast<long>(n));
    CHECK(abs(lhs / rhs - 1L).to_double() < 1e-30);
  }
  CHECK(phi(3, 0, {2}, frame).value.sign() < 0);
  CHECK_FALSE(phi(2, 0, {4}, frame).in_range);

  CHECK(alpha_deriv(3, 0, {}, frame).to_double() ==
        doctest::Approx(poly_eval(p_g0(3).poly, {}, frame.ratios(6), wp).value.to_double()));
  CHECK(alpha_deriv(2, 1, {5}, frame).is_zero());
  for (const auto& pv : std::vector<std::vector<int>>{{}, {1}, {2, 1}}) {
    CHECK(alpha_coeff(3, 2, pv, {0, 0}, frame).to_double() ==
          doctest::Approx(alpha_deriv(3, 2, pv, frame).to_double()).epsilon(1e-14));
  }
}

TEST_CASE("rescaled coefficient of P_{1,1}") {
  const long wp = 160;
  const Real mu = mu_critical(wp) / 3L;
  const MomentFrame frame = make_frame(mu, 4, wp);
  const Real m1 = frame.M(1) / frame.M(0);
  // (1/48) l after l -> (-m_1/3) l
  const Real expect = -m1 / 144L;
  CHECK(alpha_coeff(1, 1, {}, {1}, frame).to_double() == doctest::Approx(expect.to_double()));
  CHECK(alpha_coeff(1, 1, {}, {0}, frame).to_double() ==
        doctest::Approx((-m1 / 24L).to_double()));
}

TEST_CASE("alpha over phi approaches one as mu -> mu_c") {
  const long wp = 200;
  const Real mu_c = mu_critical(wp);
  double previous = 1.0;
  for (int j = 2; j <= 7; ++j) {
    const MomentFrame frame = make_frame(mu_c * (1.0 - std::pow(10.0, -j)), 9, wp);
    const double r = (alpha_deriv(4, 0, {1}, frame) / phi(4, 0, {1}, frame).to_real(wp)).to_double();
    CHECK(std::abs(r - 1.0) < previous);
    previous = std::abs(r - 1.0);
  }
  CHECK(previous < 0.01);
}

}  // TEST_SUITE
