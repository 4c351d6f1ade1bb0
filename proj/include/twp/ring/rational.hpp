#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace twp {

using Integer = mpz_class;

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; values built from raw num/den pairs must go
// through make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// Canonical "num/den" form used by every serialization, even for integers.
std::string to_canonical_string(const Rational& q);

// Short human form: "num" when the denominator is 1, otherwise "num/den".
std::string to_display_string(const Rational& q);

// Accepts "num/den" or "num"; throws UserError on malformed input or a zero
// denominator.
Rational parse_rational(std::string_view text);

Integer factorial(long n);

// (2k+1)!! style double factorial with the convention (-1)!! = 0!! = 1.
Integer double_factorial(long n);

Integer binomial(long n, long k);

}  // namespace twp
