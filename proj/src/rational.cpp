#include "degspec/rational.hpp"

#include <cmath>
#include <cstdio>
#include <cctype>

#include "degspec/errors.hpp"

namespace degspec {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ParameterError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  std::size_t start = (!digits.empty() && digits.front() == '-') ? 1 : 0;
  if (digits.size() == start) throw IngestionError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i])))
      throw IngestionError("malformed rational '" + std::string(whole) + "'");
  }
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto body = trim(text);
  auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(body, text));
  Integer den = parse_integer(body.substr(slash + 1), text);
  if (den == 0) throw IngestionError("zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_integer(body.substr(0, slash), text), den);
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

namespace {

double log_abs_integer(const Integer& z) {
  long exponent = 0;
  double mantissa = mpz_get_d_2exp(&exponent, z.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

}  // namespace

double log_abs(const Rational& q) {
  if (q == 0) throw ParameterError("log of zero");
  return log_abs_integer(q.get_num()) - log_abs_integer(q.get_den());
}

double to_double(const Rational& q) { return q.get_d(); }

double round_significant(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

std::string format_decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace degspec
