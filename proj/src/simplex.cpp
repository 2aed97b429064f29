#include "degspec/simplex.hpp"

#include <optional>

#include "degspec/errors.hpp"

namespace degspec {

namespace {

// Tableau rows 0..m-1 hold constraints ([A | b]), basis[i] the basic column of
// row i. The objective row stores reduced costs and -value in its last slot.
struct Tableau {
  std::size_t m = 0;
  std::size_t n = 0;  // structural + artificial columns
  std::vector<QVector> rows;
  QVector objective;
  std::vector<std::size_t> basis;

  Rational& rhs(std::size_t i) { return rows[i][n]; }

  void pivot(std::size_t r, std::size_t col) {
    Rational inv = 1 / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (std::size_t j = 0; j <= n; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (objective[col] != 0) {
      Rational f = objective[col];
      for (std::size_t j = 0; j <= n; ++j) objective[j] -= f * rows[r][j];
    }
    basis[r] = col;
  }

  void set_objective(const QVector& cost) {
    objective.assign(n + 1, Rational(0));
    for (std::size_t j = 0; j < cost.size(); ++j) objective[j] = cost[j];
    for (std::size_t i = 0; i < m; ++i) {
      const Rational& cb = objective[basis[i]];
      if (cb == 0) continue;
      Rational f = cb;
      for (std::size_t j = 0; j <= n; ++j) objective[j] -= f * rows[i][j];
    }
  }

  // Returns false when unbounded. Columns >= allowed are never entered.
  bool optimize(std::size_t allowed) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (objective[j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (rows[i][*entering] <= 0) continue;
        Rational ratio = rows[i][n] / rows[i][*entering];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *entering);
    }
  }
};

}  // namespace

LpResult solve_lp(const QMatrix& a, const QVector& b, const QVector& c) {
  const std::size_t m = a.rows();
  const std::size_t nv = a.cols();
  if (b.size() != m || c.size() != nv) throw DimensionError("LP data size mismatch");

  Tableau t;
  t.m = m;
  t.n = nv + m;
  t.rows.assign(m, QVector(t.n + 1));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < nv; ++j) t.rows[i][j] = flip ? -a(i, j) : a(i, j);
    t.rows[i][nv + i] = 1;
    t.rows[i][t.n] = flip ? -b[i] : b[i];
    t.basis[i] = nv + i;
  }

  // Phase 1: minimise the sum of artificials.
  QVector phase1(t.n);
  for (std::size_t i = 0; i < m; ++i) phase1[nv + i] = 1;
  t.set_objective(phase1);
  t.optimize(t.n);
  LpResult result;
  if (t.objective[t.n] != 0) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  // Drive remaining (zero-valued) artificials out of the basis; rows with no
  // structural pivot are redundant and dropped.
  for (std::size_t i = 0; i < t.m;) {
    if (t.basis[i] < nv) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < nv; ++j) {
      if (t.rows[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      --t.m;
    }
  }

  t.set_objective(c);
  if (!t.optimize(nv)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.x.assign(nv, Rational(0));
  for (std::size_t i = 0; i < t.m; ++i) result.x[t.basis[i]] = t.rows[i][t.n];
  for (std::size_t j = 0; j < nv; ++j) result.value += c[j] * result.x[j];
  return result;
}

bool lp_feasible(const QMatrix& a, const QVector& b) {
  return solve_lp(a, b, QVector(a.cols())).status != LpStatus::Infeasible;
}

}  // namespace degspec
