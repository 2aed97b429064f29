#include "degspec/qmatrix.hpp"

#include <sstream>
#include <utility>

#include "degspec/errors.hpp"

namespace degspec {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long x : r) entries_.emplace_back(x);
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  QMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::diagonal(const QVector& diag) {
  QMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : entries_)
    if (x != 0) return false;
  return true;
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

QVector QMatrix::column(std::size_t j) const {
  QVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QVector QMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = std::move(acc);
  }
  return out;
}

QMatrix QMatrix::pow(unsigned n) const {
  if (!is_square()) throw DimensionError("power of a non-square matrix");
  QMatrix result = identity(rows_);
  QMatrix base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Rational QMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of a non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

QMatrix QMatrix::abs() const {
  QMatrix out = *this;
  for (auto& x : out.entries_) x = ::abs(x);
  return out;
}

QMatrix& QMatrix::operator+=(const QMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum size mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix difference size mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& s) {
  for (auto& x : entries_) x *= s;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Rational& ail = a(i, l);
      if (ail == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += ail * b(l, j);
    }
  }
  return c;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Rational determinant(const QMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational factor = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= factor * a(c, j);
    }
  }
  return det;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix a = m;
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) throw ParameterError("matrix is singular");
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(c, j));
        std::swap(inv(pivot, j), inv(c, j));
      }
    }
    Rational scale = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= scale;
      inv(c, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational factor = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= factor * a(c, j);
        inv(r, j) -= factor * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  if (p > n) return out;
  std::vector<std::size_t> cur(p);
  for (std::size_t i = 0; i < p; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    if (p == 0) break;
    std::size_t i = p;
    while (i > 0 && cur[i - 1] == n - p + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

QMatrix compound_matrix(const QMatrix& m, std::size_t p) {
  if (!m.is_square()) throw DimensionError("compound of a non-square matrix");
  const std::size_t k = m.rows();
  if (p < 1 || p > k) throw ParameterError("compound order out of range");
  auto subsets = index_subsets(k, p);
  QMatrix out(subsets.size(), subsets.size());
  QMatrix minor(p, p);
  for (std::size_t r = 0; r < subsets.size(); ++r) {
    for (std::size_t c = 0; c < subsets.size(); ++c) {
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) minor(i, j) = m(subsets[r][i], subsets[c][j]);
      out(r, c) = determinant(minor);
    }
  }
  return out;
}

}  // namespace degspec

namespace degspec {

Signature symmetric_signature(const QMatrix& m) {
  if (!m.is_square()) throw DimensionError("signature of a non-square matrix");
  if (m != m.transpose()) throw ParameterError("signature of a non-symmetric matrix");
  const std::size_t n = m.rows();
  QMatrix a = m;
  Signature sig;
  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t pivot = s;
    while (pivot < n && a(pivot, pivot) == 0) ++pivot;
    if (pivot == n) {
      // Zero diagonal: an off-diagonal entry (i, j) lets row/col j be added to
      // row/col i, producing diagonal entry 2 a(i, j) != 0.
      bool found = false;
      for (std::size_t i = s; i < n && !found; ++i) {
        for (std::size_t j = i + 1; j < n && !found; ++j) {
          if (a(i, j) == 0) continue;
          for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
          for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
          pivot = i;
          found = true;
        }
      }
      if (!found) {
        sig.zero += static_cast<int>(n - s);
        return sig;
      }
    }
    if (pivot != s) swap_index(pivot, s);
    const Rational d = a(s, s);
    (d > 0 ? sig.plus : sig.minus) += 1;
    for (std::size_t r = s + 1; r < n; ++r) {
      if (a(r, s) == 0) continue;
      Rational f = a(r, s) / d;
      for (std::size_t c = s; c < n; ++c) a(r, c) -= f * a(s, c);
      for (std::size_t c = s; c < n; ++c) a(c, r) = a(r, c);
    }
  }
  return sig;
}

}  // namespace degspec
