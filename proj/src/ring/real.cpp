#include "twp/ring/real.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>

#include "twp/errors.hpp"

namespace twp {

namespace {

long joint_precision(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Real::Real(const Rational& q, long precision) {
  mpfr_init2(value_, precision);
  mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Integer& z, long precision) {
  mpfr_init2(value_, precision);
  mpfr_set_z(value_, z.get_mpz_t(), MPFR_RNDN);
}

Real Real::from_string(const std::string& text, long precision) {
  Real r = make(precision);
  char* end = nullptr;
  if (mpfr_strtofr(r.value_, text.c_str(), &end, 10, MPFR_RNDN) != 0 &&
      end == text.c_str()) {
    throw UserError("malformed number '" + text + "'");
  }
  if (end == text.c_str() || *end != '\0') {
    throw UserError("malformed number '" + text + "'");
  }
  return r;
}

Real Real::pi(long precision) {
  Real r = make(precision);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::infinity(long precision, int sign) {
  Real r = make(precision);
  mpfr_set_inf(r.value_, sign);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_precision(long precision) const {
  Real r = make(precision);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

long Real::exponent2() const {
  if (is_zero() || !is_finite()) return 0;
  return static_cast<long>(mpfr_get_exp(value_));
}

std::string Real::to_string(int significant_digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", std::max(0, significant_digits - 1), value_);
  std::unique_ptr<char, void (*)(char*)> guard(buffer, mpfr_free_str);
  return std::string(buffer);
}

Real Real::operator-() const {
  Real r = make(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

Real operator+(const Real& a, const Real& b) {
  Real r = Real::make(joint_precision(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r = Real::make(joint_precision(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r = Real::make(joint_precision(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r = Real::make(joint_precision(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r = Real::make(a.precision());
  mpfr_add_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r = Real::make(a.precision());
  mpfr_sub_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
Real operator-(long a, const Real& b) {
  Real r = Real::make(b.precision());
  mpfr_si_sub(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r = Real::make(a.precision());
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r = Real::make(a.precision());
  mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
Real operator/(long a, const Real& b) {
  Real r = Real::make(b.precision());
  mpfr_si_div(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, double b) {
  Real r = Real::make(a.precision());
  mpfr_add_d(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, double b) {
  Real r = Real::make(a.precision());
  mpfr_sub_d(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
Real operator-(double a, const Real& b) {
  Real r = Real::make(b.precision());
  mpfr_d_sub(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, double b) {
  Real r = Real::make(a.precision());
  mpfr_mul_d(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, double b) {
  Real r = Real::make(a.precision());
  mpfr_div_d(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
Real operator/(double a, const Real& b) {
  Real r = Real::make(b.precision());
  mpfr_d_div(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const Real& a, double b) {
  if (mpfr_nan_p(a.value_) || b != b) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_d(a.value_, b);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real sqrt(const Real& x) {
  Real r = Real::make(x.precision());
  mpfr_sqrt(r.value_, x.value_, MPFR_RNDN);
  return r;
}
Real exp(const Real& x) {
  Real r = Real::make(x.precision());
  mpfr_exp(r.value_, x.value_, MPFR_RNDN);
  return r;
}
Real log(const Real& x) {
  Real r = Real::make(x.precision());
  mpfr_log(r.value_, x.value_, MPFR_RNDN);
  return r;
}
Real abs(const Real& x) {
  Real r = Real::make(x.precision());
  mpfr_abs(r.value_, x.value_, MPFR_RNDN);
  return r;
}
Real pow(const Real& x, long e) {
  Real r = Real::make(x.precision());
  mpfr_pow_si(r.value_, x.value_, e, MPFR_RNDN);
  return r;
}
Real pow(const Real& x, const Real& e) {
  Real r = Real::make(std::max(x.precision(), e.precision()));
  mpfr_pow(r.value_, x.value_, e.value_, MPFR_RNDN);
  return r;
}
Real sinh(const Real& x) {
  Real r = Real::make(x.precision());
  mpfr_sinh(r.value_, x.value_, MPFR_RNDN);
  return r;
}
Real cosh(const Real& x) {
  Real r = Real::make(x.precision());
  mpfr_cosh(r.value_, x.value_, MPFR_RNDN);
  return r;
}
Real expm1(const Real& x) {
  Real r = Real::make(x.precision());
  mpfr_expm1(r.value_, x.value_, MPFR_RNDN);
  return r;
}
Real log1p(const Real& x) {
  Real r = Real::make(x.precision());
  mpfr_log1p(r.value_, x.value_, MPFR_RNDN);
  return r;
}
Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real log_factorial(long n, long precision) {
  if (n < 0) throw UserError("log_factorial of a negative number");
  Real r = Real::make(precision);
  mpfr_set_si(r.value_, n + 1, MPFR_RNDN);
  mpfr_lngamma(r.value_, r.value_, MPFR_RNDN);
  return r;
}

}  // namespace twp
