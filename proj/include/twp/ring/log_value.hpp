#pragma once

#include <string>

#include "twp/ring/real.hpp"

namespace twp {

// Signed value stored as sign and natural log of its magnitude. Products and
// quotients add logs; sums shift by the larger magnitude before combining.
class LogValue {
 public:
  LogValue() = default;  // zero
  LogValue(int sign, Real log_magnitude);

  static LogValue zero() { return LogValue(); }
  static LogValue from_real(const Real& x);

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  const Real& log_magnitude() const { return log_magnitude_; }

  // Rounds to a Real at the given precision; MPFR's exponent range absorbs
  // magnitudes far beyond double.
  Real to_real(long precision) const;
  double to_double() const;

  LogValue operator-() const;
  friend LogValue operator*(const LogValue& a, const LogValue& b);
  friend LogValue operator/(const LogValue& a, const LogValue& b);
  friend LogValue operator+(const LogValue& a, const LogValue& b);
  friend LogValue operator-(const LogValue& a, const LogValue& b) {
    return a + (-b);
  }
  LogValue pow(long e) const;

  std::string to_string(int significant_digits) const;

 private:
  int sign_ = 0;
  Real log_magnitude_ = Real(0L);
};

}  // namespace twp
