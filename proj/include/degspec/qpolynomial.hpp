#pragma once

#include <string>
#include <utility>
#include <vector>

#include "degspec/qmatrix.hpp"
#include "degspec/rational.hpp"

namespace degspec {

/// Univariate polynomial over Q; coefficient i multiplies t^i. Trailing zero
/// coefficients are always trimmed, so the zero polynomial has no coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(QVector coefficients);
  QPolynomial(std::initializer_list<long> coefficients);

  static QPolynomial monomial(const Rational& c, unsigned degree);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const QVector& coefficients() const { return coeffs_; }
  Rational coefficient(unsigned i) const;
  Rational leading() const;

  QPolynomial derivative() const;
  QPolynomial monic() const;
  Rational evaluate(const Rational& t) const;
  QMatrix evaluate(const QMatrix& m) const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(QPolynomial a, const Rational& s);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  QVector coeffs_;
};

// Euclidean division; throws ParameterError on a zero divisor.
std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b);

// Monic gcd; gcd(0, 0) = 0.
QPolynomial gcd(QPolynomial a, QPolynomial b);

/// Monic det(tI - M), by the Faddeev-LeVerrier trace recurrence (exact over Q).
QPolynomial charpoly(const QMatrix& m);

/// Yun's square-free decomposition of a nonzero polynomial: pairs
/// (f_i, i) with f = lc * prod f_i^i, each f_i monic, square-free and
/// pairwise coprime. Factors equal to 1 are omitted.
std::vector<std::pair<QPolynomial, int>> square_free_decomposition(const QPolynomial& f);

/// Number of distinct real roots of a nonzero polynomial (Sturm sequence).
int count_real_roots(const QPolynomial& f);

}  // namespace degspec
