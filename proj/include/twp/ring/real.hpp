#pragma once

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <string>
#include <utility>

#include "twp/ring/rational.hpp"

namespace twp {

inline constexpr long kDefaultPrecision = 113;

// Binary floating-point value with a per-value precision (in bits), backed by
// MPFR. Binary operations round to the larger precision of their operands;
// mixed operations with machine scalars keep the precision of the Real.
class Real {
 public:
  Real() : Real(0L) {}
  template <std::integral I>
  Real(I v, long precision = kDefaultPrecision) {  // NOLINT: implicit by intent
    mpfr_init2(value_, precision);
    if constexpr (std::is_signed_v<I>) {
      mpfr_set_si(value_, static_cast<long>(v), MPFR_RNDN);
    } else {
      mpfr_set_ui(value_, static_cast<unsigned long>(v), MPFR_RNDN);
    }
  }
  Real(double v, long precision = kDefaultPrecision) {  // NOLINT
    mpfr_init2(value_, precision);
    mpfr_set_d(value_, v, MPFR_RNDN);
  }
  Real(const Rational& q, long precision);
  Real(const Integer& z, long precision);

  static Real from_string(const std::string& text, long precision);
  static Real pi(long precision);
  static Real infinity(long precision, int sign = 1);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  Real with_precision(long precision) const;

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long exponent2() const;  // e with |x| in [2^(e-1), 2^e); 0 for zero

  // Decimal scientific notation with the given number of significant digits.
  std::string to_string(int significant_digits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator/(long a, const Real& b);
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator*(long a, const Real& b) { return b * a; }

  friend Real operator+(const Real& a, double b);
  friend Real operator-(const Real& a, double b);
  friend Real operator-(double a, const Real& b);
  friend Real operator*(const Real& a, double b);
  friend Real operator/(const Real& a, double b);
  friend Real operator/(double a, const Real& b);
  friend Real operator+(double a, const Real& b) { return b + a; }
  friend Real operator*(double a, const Real& b) { return b * a; }

  friend Real operator+(const Real& a, int b) { return a + static_cast<long>(b); }
  friend Real operator-(const Real& a, int b) { return a - static_cast<long>(b); }
  friend Real operator-(int a, const Real& b) { return static_cast<long>(a) - b; }
  friend Real operator*(const Real& a, int b) { return a * static_cast<long>(b); }
  friend Real operator/(const Real& a, int b) { return a / static_cast<long>(b); }
  friend Real operator/(int a, const Real& b) { return static_cast<long>(a) / b; }
  friend Real operator+(int a, const Real& b) { return b + static_cast<long>(a); }
  friend Real operator*(int a, const Real& b) { return b * static_cast<long>(a); }

  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, double b) {
    return mpfr_cmp_d(a.value_, b) == 0;
  }
  friend std::partial_ordering operator<=>(const Real& a, double b);

 private:
  struct Uninit {};
  Real(Uninit, long precision) { mpfr_init2(value_, precision); }
  static Real make(long precision) { return Real(Uninit{}, precision); }

  friend Real sqrt(const Real& x);
  friend Real exp(const Real& x);
  friend Real log(const Real& x);
  friend Real abs(const Real& x);
  friend Real pow(const Real& x, long e);
  friend Real pow(const Real& x, const Real& e);
  friend Real sinh(const Real& x);
  friend Real cosh(const Real& x);
  friend Real expm1(const Real& x);
  friend Real log1p(const Real& x);
  friend Real log_factorial(long n, long precision);

  mpfr_t value_;
};

Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real abs(const Real& x);
Real pow(const Real& x, long e);
Real pow(const Real& x, const Real& e);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real expm1(const Real& x);
Real log1p(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

// log(n!) at the given precision.
Real log_factorial(long n, long precision);

}  // namespace twp
