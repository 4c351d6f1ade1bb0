#include "twp/ring/mu_series.hpp"

#include <algorithm>

#include "twp/errors.hpp"

namespace twp {

MuSeries::MuSeries(int order) {
  if (order < 0) throw UserError("series order must be non-negative");
  coefficients_.resize(static_cast<std::size_t>(order) + 1);
}

MuSeries::MuSeries(std::vector<PiPoly> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) coefficients_.resize(1);
}

MuSeries MuSeries::constant(const PiPoly& c, int order) {
  MuSeries s(order);
  s.coefficients_[0] = c;
  return s;
}

MuSeries MuSeries::variable(int order) {
  MuSeries s(order);
  if (order >= 1) s.coefficients_[1] = PiPoly(1L);
  return s;
}

MuSeries MuSeries::truncated(int order) const {
  if (order < 0) throw UserError("series order must be non-negative");
  MuSeries s(order);
  for (int j = 0; j <= std::min(order, this->order()); ++j) {
    s.coefficients_[j] = coefficients_[j];
  }
  return s;
}

MuSeries MuSeries::operator-() const {
  MuSeries r = *this;
  for (auto& c : r.coefficients_) c = -c;
  return r;
}

MuSeries operator+(const MuSeries& a, const MuSeries& b) {
  const int p = std::min(a.order(), b.order());
  MuSeries r(p);
  for (int j = 0; j <= p; ++j) r.coefficients_[j] = a[j] + b[j];
  return r;
}

MuSeries operator-(const MuSeries& a, const MuSeries& b) {
  const int p = std::min(a.order(), b.order());
  MuSeries r(p);
  for (int j = 0; j <= p; ++j) r.coefficients_[j] = a[j] - b[j];
  return r;
}

MuSeries operator*(const MuSeries& a, const MuSeries& b) {
  const int p = std::min(a.order(), b.order());
  MuSeries r(p);
  for (int i = 0; i <= p; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= p; ++j) {
      if (b[j].is_zero()) continue;
      r.coefficients_[i + j] += a[i] * b[j];
    }
  }
  return r;
}

MuSeries operator*(const MuSeries& a, const PiPoly& c) {
  MuSeries r = a;
  for (auto& x : r.coefficients_) x = x * c;
  return r;
}

MuSeries MuSeries::inverse() const {
  const PiPoly& a0 = coefficients_[0];
  if (a0.is_zero() || !a0.is_rational()) {
    throw UserError("series inverse needs a nonzero rational constant term");
  }
  const Rational inv0 = 1 / a0.coefficient(0);
  MuSeries r(order());
  r.coefficients_[0] = PiPoly(inv0);
  for (int j = 1; j <= order(); ++j) {
    PiPoly acc;
    for (int i = 1; i <= j; ++i) {
      if (coefficients_[i].is_zero() || r[j - i].is_zero()) continue;
      acc += coefficients_[i] * r[j - i];
    }
    r.coefficients_[j] = acc * (-inv0);
  }
  return r;
}

MuSeries MuSeries::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  MuSeries result = constant(PiPoly(1L), order());
  MuSeries base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Real MuSeries::evaluate(const Real& mu) const {
  const long prec = mu.precision();
  Real acc(0L, prec);
  for (int j = order(); j >= 0; --j) {
    acc = acc * mu + coefficients_[j].evaluate(prec);
  }
  return acc;
}

std::vector<MuSeries> series_powers(const MuSeries& s, int max_power) {
  std::vector<MuSeries> out;
  out.reserve(static_cast<std::size_t>(std::max(max_power, 0)) + 1);
  out.push_back(MuSeries::constant(PiPoly(1L), s.order()));
  for (int k = 1; k <= max_power; ++k) out.push_back(out.back() * s);
  return out;
}

MuSeries series_invert_z(int order) {
  if (order < 1) throw UserError("series_invert_z needs order >= 1");
  const int p = order;
  // forward coefficients: mu = r + sum_{m>=1} c_m r^(m+1)
  std::vector<PiPoly> c(static_cast<std::size_t>(p) + 1);
  for (int m = 1; m <= p; ++m) {
    Rational coef = make_rational(1, factorial(m) * factorial(m + 1));
    if (m % 2 != 0) coef = -coef;
    mpz_class two_m;
    mpz_ui_pow_ui(two_m.get_mpz_t(), 2, static_cast<unsigned long>(m));
    c[m] = PiPoly::monomial(m, coef * two_m);
  }
  // power[k][j] = [mu^j] R^k; R^k starts at mu^k so only j >= k is stored.
  std::vector<std::vector<PiPoly>> power(
      static_cast<std::size_t>(p) + 1,
      std::vector<PiPoly>(static_cast<std::size_t>(p) + 1));
  std::vector<PiPoly> r(static_cast<std::size_t>(p) + 1);
  for (int j = 1; j <= p; ++j) {
    for (int k = 2; k <= j; ++k) {
      PiPoly acc;
      for (int i = 1; i <= j - k + 1; ++i) {
        if (r[i].is_zero() || power[k - 1][j - i].is_zero()) continue;
        acc += r[i] * power[k - 1][j - i];
      }
      power[k][j] = std::move(acc);
    }
    PiPoly rj = j == 1 ? PiPoly(1L) : PiPoly();
    for (int k = 2; k <= j; ++k) {
      if (power[k][j].is_zero()) continue;
      rj -= c[k - 1] * power[k][j];
    }
    r[j] = rj;
    power[1][j] = std::move(rj);
  }
  return MuSeries(std::move(r));
}

MuSeries series_compose(const MuSeries& outer, const MuSeries& inner) {
  if (!inner[0].is_zero()) {
    throw UserError("series_compose needs an inner series with zero constant term");
  }
  const int p = std::min(outer.order(), inner.order());
  const MuSeries in = inner.truncated(p);
  MuSeries acc = MuSeries::constant(outer[p], p);
  for (int j = p - 1; j >= 0; --j) {
    acc = acc * in;
    acc[0] += outer[j];
  }
  return acc;
}

}  // namespace twp
