#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace degspec {

// GMP rationals are canonical after every arithmetic operation; values built
// from a raw numerator/denominator pair go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;
using QVector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "n", "-n", "n/d" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

// Natural log of a positive rational, accurate for values far outside the
// double range.
double log_abs(const Rational& q);

double to_double(const Rational& q);

// Fixed 12-significant-digit decimal rendering used in every report.
std::string format_decimal(double x);
double round_significant(double x, int digits = 12);

}  // namespace degspec
