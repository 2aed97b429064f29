#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "degspec/rational.hpp"

namespace degspec {

/// Dense row-major matrix over the rationals.
///
/// Columns are images of basis vectors: for a linear map f* on N^p the
/// coordinates of f*(e_i) sit in column i, so f*(v) is `M.apply(v)`.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows);
  static QMatrix diagonal(const QVector& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Rational> entries() const { return entries_; }
  QVector row(std::size_t i) const;
  QVector column(std::size_t j) const;

  QMatrix transpose() const;
  QVector apply(std::span<const Rational> v) const;
  QMatrix pow(unsigned n) const;
  Rational trace() const;

  // Entrywise absolute value.
  QMatrix abs() const;

  QMatrix& operator+=(const QMatrix& other);
  QMatrix& operator-=(const QMatrix& other);
  QMatrix& operator*=(const Rational& s);

  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rational& s) { return a *= s; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  QVector entries_;
};

Rational determinant(const QMatrix& m);
QMatrix inverse(const QMatrix& m);

/// Matrix of p x p minors, rows and columns indexed by sorted index subsets in
/// lexicographic order. Eigenvalues are the p-fold products of eigenvalues of m.
QMatrix compound_matrix(const QMatrix& m, std::size_t p);

/// Sorted p-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t p);

}  // namespace degspec

namespace degspec {

struct Signature {
  int plus = 0;
  int minus = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Exact inertia of a symmetric rational matrix by congruence diagonalization.
Signature symmetric_signature(const QMatrix& m);

}  // namespace degspec
