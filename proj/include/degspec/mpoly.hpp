#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degspec/rational.hpp"

namespace degspec {

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial with integer coefficients in a fixed number
/// of variables. Terms are keyed by exponent vectors; zero coefficients are
/// never stored.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Integer& c);
  static MPoly variable(std::size_t nvars, std::size_t i);
  static MPoly term(const Exponent& e, const Integer& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const Integer& c);

  // -1 for zero.
  int total_degree() const;
  bool is_homogeneous() const;
  int degree_in(std::size_t var) const;

  // Leading term in lex order on exponent vectors (variable 0 most significant).
  const std::pair<const Exponent, Integer>& leading_term() const;

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const Integer& s);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Integer& s) { return a *= s; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;
  friend bool operator==(const MPoly& a, const MPoly& b) = default;

  MPoly pow(unsigned n) const;

  // p(g_0, ..., g_{n-1}); all g_i share one variable count.
  MPoly substitute(const std::vector<MPoly>& values) const;

  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponent, Integer> terms_;
};

// gcd of the integer coefficients (nonnegative; 0 for the zero polynomial).
Integer integer_content(const MPoly& p);

// Coordinatewise minimum exponent over all terms.
Exponent monomial_content(const MPoly& p);

MPoly divide_by_monomial(const MPoly& p, const Exponent& m);

/// Exact division over Z; nullopt when b does not divide a.
std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b);

/// True only when the homogeneous polynomials provably share no non-constant
/// factor. Restricts them to a line t*u + v, reduces mod a prime that does not
/// divide the t-leading coefficient f_0(u), and takes a univariate gcd: any
/// common factor G would survive with degree deg G there, because G(u)
/// divides f_0(u). False means "unknown", never "not coprime".
bool coprime_certificate(const std::vector<MPoly>& polys);

/// gcd over Z[x] (recursive primitive remainder sequences), normalized with a
/// positive leading coefficient. gcd(0, b) = +-b normalized.
MPoly gcd(const MPoly& a, const MPoly& b);

}  // namespace degspec
