#pragma once

#include "degspec/qmatrix.hpp"
#include "degspec/rational.hpp"

namespace degspec {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  QVector x;
};

/// Exact two-phase simplex for: minimize c.x subject to A x = b, x >= 0.
/// Rational pivots and Bland's rule, so it always terminates and never rounds.
LpResult solve_lp(const QMatrix& a, const QVector& b, const QVector& c);

/// Feasibility of A x = b, x >= 0.
bool lp_feasible(const QMatrix& a, const QVector& b);

}  // namespace degspec
