#include "twp/ring/log_value.hpp"

#include <cmath>
#include <cstdio>

#include "twp/errors.hpp"

namespace twp {

LogValue::LogValue(int sign, Real log_magnitude)
    : sign_(sign > 0 ? 1 : (sign < 0 ? -1 : 0)),
      log_magnitude_(std::move(log_magnitude)) {
  if (sign_ == 0) log_magnitude_ = Real(0L, log_magnitude_.precision());
}

LogValue LogValue::from_real(const Real& x) {
  if (x.is_zero()) return LogValue();
  return LogValue(x.sign(), log(abs(x)));
}

Real LogValue::to_real(long precision) const {
  if (sign_ == 0) return Real(0L, precision);
  Real r = exp(log_magnitude_.with_precision(precision));
  return sign_ < 0 ? -r : r;
}

double LogValue::to_double() const {
  if (sign_ == 0) return 0.0;
  const double m = std::exp(log_magnitude_.to_double());
  return sign_ < 0 ? -m : m;
}

LogValue LogValue::operator-() const {
  LogValue r = *this;
  r.sign_ = -r.sign_;
  return r;
}

LogValue operator*(const LogValue& a, const LogValue& b) {
  if (a.is_zero() || b.is_zero()) return LogValue();
  return LogValue(a.sign_ * b.sign_, a.log_magnitude_ + b.log_magnitude_);
}

LogValue operator/(const LogValue& a, const LogValue& b) {
  if (b.is_zero()) throw UserError("LogValue division by zero");
  if (a.is_zero()) return LogValue();
  return LogValue(a.sign_ * b.sign_, a.log_magnitude_ - b.log_magnitude_);
}

LogValue operator+(const LogValue& a, const LogValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const bool a_larger = a.log_magnitude_ >= b.log_magnitude_;
  const LogValue& big = a_larger ? a : b;
  const LogValue& small = a_larger ? b : a;
  // |big| * (1 +/- exp(small - big))
  const Real ratio = exp(small.log_magnitude_ - big.log_magnitude_);
  if (big.sign_ == small.sign_) {
    return LogValue(big.sign_, big.log_magnitude_ + log1p(ratio));
  }
  const Real factor = 1L - ratio;
  if (factor.is_zero()) return LogValue();
  return LogValue(big.sign_, big.log_magnitude_ + log(factor));
}

LogValue LogValue::pow(long e) const {
  if (sign_ == 0) {
    if (e <= 0) throw UserError("LogValue zero to a non-positive power");
    return LogValue();
  }
  const int s = (sign_ < 0 && (e % 2 != 0)) ? -1 : 1;
  return LogValue(s, log_magnitude_ * e);
}

std::string LogValue::to_string(int significant_digits) const {
  if (sign_ == 0) return "0";
  // Print mantissa and decimal exponent without ever materializing the value.
  const long prec = log_magnitude_.precision() + 16;
  const Real log10_value = log_magnitude_.with_precision(prec) / log(Real(10L, prec));
  Real exponent = log10_value;
  mpfr_floor(exponent.get(), exponent.get());
  Real mantissa = exp((log10_value - exponent) * log(Real(10L, prec)));
  std::string m = mantissa.to_string(significant_digits);
  // mantissa is printed as d.ddde+00; drop that suffix and use our exponent.
  const auto e_pos = m.find('e');
  if (e_pos != std::string::npos) {
    const long inner = std::stol(m.substr(e_pos + 1));
    m = m.substr(0, e_pos);
    exponent += inner;
  }
  const long e10 = static_cast<long>(exponent.to_double());
  char buf[32];
  std::snprintf(buf, sizeof(buf), "e%+03ld", e10);
  return (sign_ < 0 ? "-" : "") + m + buf;
}

}  // namespace twp
