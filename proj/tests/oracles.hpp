#pragma once

// Test-only oracles, independent of the library paths they check.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "degspec/qmatrix.hpp"

namespace oracle {

// Leibniz expansion over all permutations.
inline degspec::Rational leibniz_det(const degspec::QMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  degspec::Rational total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    degspec::Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline degspec::QMatrix random_int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  degspec::QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

// Random unimodular integer matrix built from elementary row operations.
inline degspec::QMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps) {
  degspec::QMatrix m = degspec::QMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> kind(0, 5);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    int what = kind(rng);
    if (what == 0 && i != j) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
    } else if (what == 1) {
      for (std::size_t c = 0; c < n; ++c) m(i, c) = -m(i, c);
    } else if (i != j) {
      int a = coef(rng);
      if (a == 0) a = 1;
      for (std::size_t c = 0; c < n; ++c) m(i, c) += m(j, c) * a;
    }
  }
  return m;
}

// Least-squares slope of y against x, computed directly from the normal
// equations.
inline double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - mx) * (y[i] - my);
    den += (x[i] - mx) * (x[i] - mx);
  }
  return num / den;
}

}  // namespace oracle
