#include "doctest.h"

#include "degspec/errors.hpp"
#include "degspec/simplex.hpp"

using namespace degspec;

TEST_CASE("feasibility of nonnegative combinations") {
  // generators (1,0) and (1,1) as columns
  QMatrix gens{{1, 1}, {0, 1}};
  CHECK(lp_feasible(gens, {Rational(3), Rational(1)}));
  CHECK(lp_feasible(gens, {Rational(1), Rational(1)}));
  CHECK_FALSE(lp_feasible(gens, {Rational(0), Rational(1)}));
  CHECK_FALSE(lp_feasible(gens, {Rational(1), Rational(-1)}));
}

TEST_CASE("optimal value with redundant and degenerate rows") {
  // minimise x + 2y + 3z s.t. x + y + z = 1, 2x + 2y + 2z = 2 (redundant)
  QMatrix a{{1, 1, 1}, {2, 2, 2}};
  auto r = solve_lp(a, {Rational(1), Rational(2)}, {Rational(1), Rational(2), Rational(3)});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 1);
  CHECK(r.x[0] == 1);
}

TEST_CASE("unbounded and infeasible programs") {
  QMatrix a{{1, -1}};
  auto r = solve_lp(a, {Rational(0)}, {Rational(-1), Rational(0)});
  CHECK(r.status == LpStatus::Unbounded);
  auto inf = solve_lp(QMatrix{{1, 1}}, {Rational(-1)}, {Rational(0), Rational(0)});
  CHECK(inf.status == LpStatus::Infeasible);
  CHECK_THROWS_AS(solve_lp(a, {Rational(0), Rational(1)}, {Rational(0), Rational(0)}), DimensionError);
}

TEST_CASE("rational optimum is exact") {
  // minimise -x - y s.t. 3x + y + s1 = 2, x + 3y + s2 = 2 -> x = y = 1/2, value -1
  QMatrix a{{3, 1, 1, 0}, {1, 3, 0, 1}};
  auto r = solve_lp(a, {Rational(2), Rational(2)}, {Rational(-1), Rational(-1), Rational(0), Rational(0)});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == -1);
  CHECK(r.x[0] == Rational(1, 2));
  CHECK(r.x[1] == Rational(1, 2));
}
