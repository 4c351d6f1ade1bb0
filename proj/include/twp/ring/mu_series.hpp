#pragma once

#include <vector>

#include "twp/ring/pi_poly.hpp"
#include "twp/ring/real.hpp"

namespace twp {

// Truncated power series sum_{j<=P} c_j mu^j with coefficients in Q[pi^2].
// Binary operations first truncate both operands to the smaller order.
class MuSeries {
 public:
  explicit MuSeries(int order = 0);
  explicit MuSeries(std::vector<PiPoly> coefficients);

  static MuSeries constant(const PiPoly& c, int order);
  static MuSeries variable(int order);  // the series "mu"

  int order() const { return static_cast<int>(coefficients_.size()) - 1; }
  const PiPoly& operator[](int j) const { return coefficients_.at(j); }
  PiPoly& operator[](int j) { return coefficients_.at(j); }
  const std::vector<PiPoly>& coefficients() const { return coefficients_; }

  MuSeries truncated(int order) const;

  MuSeries operator-() const;
  friend MuSeries operator+(const MuSeries& a, const MuSeries& b);
  friend MuSeries operator-(const MuSeries& a, const MuSeries& b);
  friend MuSeries operator*(const MuSeries& a, const MuSeries& b);
  friend MuSeries operator*(const MuSeries& a, const PiPoly& c);
  friend MuSeries operator*(const PiPoly& c, const MuSeries& a) { return a * c; }
  friend bool operator==(const MuSeries& a, const MuSeries& b) {
    return a.coefficients_ == b.coefficients_;
  }

  // Requires a nonzero rational constant term; throws UserError otherwise.
  MuSeries inverse() const;
  // Negative exponents go through inverse().
  MuSeries pow(long e) const;

  Real evaluate(const Real& mu) const;

 private:
  std::vector<PiPoly> coefficients_;
};

// [s^0, s^1, ..., s^max_power], each truncated to s.order().
std::vector<MuSeries> series_powers(const MuSeries& s, int max_power);

// R(mu) with Z(R(mu), mu) = 0 and R(0) = 0, i.e. the compositional inverse of
// mu = sum_{m>=0} (-2 pi^2)^m r^(m+1) / (m! (m+1)!), to the given order.
MuSeries series_invert_z(int order);

// outer(inner(mu)); inner must have zero constant term.
MuSeries series_compose(const MuSeries& outer, const MuSeries& inner);

}  // namespace twp
