#include "twp/spectrum/intensity.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "twp/errors.hpp"
#include "twp/moments/bessel.hpp"
#include "twp/moments/moments.hpp"

namespace twp {

double intensity(double a, double b) {
  if (!(a >= 0.0) || !(b >= a)) throw UserError("intensity needs 0 <= a <= b");
  if (a == b) return 0.0;
  // sum_k (b^{2k} - a^{2k}) / (2k (2k)!)
  double sum = 0.0;
  double pb = 1.0;  // b^{2k} / (2k)!
  double pa = 1.0;
  for (int k = 1; k < 400; ++k) {
    const double f = 1.0 / ((2.0 * k - 1.0) * (2.0 * k));
    pb *= b * b * f;
    pa *= a * a * f;
    const double term = (pb - pa) / (2.0 * k);
    sum += term;
    if (k > b && term < 1e-18 * sum) break;
  }
  return sum;
}

double intensity_quadrature(double a, double b) {
  if (!(a >= 0.0) || !(b >= a)) throw UserError("intensity needs 0 <= a <= b");
  if (a == b) return 0.0;
  const auto f = [](double t) {
    if (t == 0.0) return 0.0;
    const double s = std::sinh(t / 2.0);
    return 2.0 * s * s / t;
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-15);
}

double systole_tail(double t) {
  if (!(t >= 0.0)) throw UserError("systole tail needs t >= 0");
  return std::exp(-intensity(0.0, t));
}

std::pair<Real, Real> normalization(const Real& mu, long precision) {
  const long wp = precision + 16;
  const Real mu_c = mu_critical(wp);
  if (mu < 0.0 || !(mu < mu_c)) throw UserError("normalization needs 0 <= mu < mu_c");
  const MomentFrame frame = make_frame(mu, 1, wp);
  const Real c = sqrt(-(frame.M(1) / frame.M(0)) / 12L);
  const Real gap = mu_c - mu.with_precision(wp);
  const Real asym = 1L / (alpha1(wp) * sqrt(sqrt(gap)));
  return {c.with_precision(precision), asym.with_precision(precision)};
}

IntervalSet::IntervalSet(std::vector<Window> windows) : windows_(std::move(windows)) {
  if (windows_.empty()) throw UserError("interval set needs at least one window");
  for (std::size_t i = 0; i < windows_.size(); ++i) {
    const auto& w = windows_[i];
    if (!(w.a >= 0.0) || !(w.b >= w.a)) throw UserError("windows need 0 <= a <= b");
    if (w.r < 1) throw UserError("window multiplicities must be >= 1");
    if (i > 0 && !(windows_[i - 1].b < w.a)) {
      throw UserError("windows must be disjoint and in increasing order");
    }
  }
}

IntervalSet IntervalSet::parse(const std::string& text) {
  std::vector<Window> out;
  std::stringstream all(text);
  std::string item;
  while (std::getline(all, item, ',')) {
    std::stringstream parts(item);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(parts, field, ':')) fields.push_back(field);
    if (fields.size() < 2 || fields.size() > 3) {
      throw UserError("window '" + item + "' must look like a:b or a:b:r");
    }
    try {
      Window w{std::stod(fields[0]), std::stod(fields[1]),
               fields.size() == 3 ? std::stoi(fields[2]) : 1};
      out.push_back(w);
    } catch (const std::logic_error&) {
      throw UserError("window '" + item + "' has a malformed number");
    }
  }
  return IntervalSet(std::move(out));
}

int IntervalSet::total_order() const {
  int r = 0;
  for (const auto& w : windows_) r += w.r;
  return r;
}

double IntervalSet::limit() const {
  double out = 1.0;
  for (const auto& w : windows_) out *= std::pow(intensity(w.a, w.b), w.r);
  return out;
}

}  // namespace twp
