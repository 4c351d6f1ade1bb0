#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "twp/ring/rational.hpp"
#include "twp/ring/real.hpp"

namespace twp {

// Polynomial in pi^2 with rational coefficients: sum_e c_e * pi^(2e).
// Zero coefficients are never stored.
class PiPoly {
 public:
  using Terms = std::map<int, Rational>;

  PiPoly() = default;
  PiPoly(const Rational& constant);  // NOLINT: rationals embed implicitly
  PiPoly(long constant) : PiPoly(Rational(constant)) {}  // NOLINT

  // c * pi^(2 * exponent)
  static PiPoly monomial(int exponent, const Rational& c);

  const Terms& terms() const { return terms_; }
  Rational coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  // True when the polynomial is a rational constant (possibly zero).
  bool is_rational() const;
  int degree() const;  // -1 for zero

  PiPoly operator-() const;
  PiPoly& operator+=(const PiPoly& o);
  PiPoly& operator-=(const PiPoly& o);
  PiPoly& operator*=(const Rational& c);
  friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
  friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
  friend PiPoly operator*(const PiPoly& a, const PiPoly& b);
  friend PiPoly operator*(PiPoly a, const Rational& c) { return a *= c; }
  friend PiPoly operator*(const Rational& c, PiPoly a) { return a *= c; }
  friend bool operator==(const PiPoly& a, const PiPoly& b) {
    return a.terms_ == b.terms_;
  }

  Real evaluate(long precision) const;

  // e.g. "1/12*pi^2 + 3"
  std::string to_string() const;
  // [[exponent, "num/den"], ...] in increasing exponent order.
  nlohmann::json to_json() const;
  static PiPoly from_json(const nlohmann::json& j);

 private:
  void add_term(int exponent, const Rational& c);

  Terms terms_;
};

}  // namespace twp
