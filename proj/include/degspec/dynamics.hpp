#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "degspec/maps.hpp"
#include "degspec/spectrum.hpp"

namespace degspec {

inline constexpr unsigned kDefaultNmaxMatrix = 20;
inline constexpr unsigned kDefaultNmaxPoly = 8;

unsigned default_nmax(const MapDescriptor& map);

/// values[n-1] = deg_p(f^n) = deg0((f^n)*(w^p) . w^(k-p)); for polynomial maps
/// on P^k with p = 1 this is the plain iterate degree.
struct DegreeSequence {
  int p = 1;
  std::string source;
  std::vector<Rational> values;
  // Matrix actions: computed as M_p^n under the user's stability assertion.
  bool assumption_dependent = false;
};

DegreeSequence degree_sequence(const MapDescriptor& map, int p, unsigned n_max);

struct FeketeEstimate {
  double upper_inf = 0.0;  // min_n values[n]^(1/n)
  unsigned upper_inf_at = 0;
  double last_root = 0.0;     // values[n_max]^(1/n_max)
  double window_slope = 0.0;  // exp of the least-squares slope of log values over the tail
  unsigned window = 0;
  std::vector<std::pair<unsigned, unsigned>> violations;  // (m, n), m <= n: v[m+n] > v[m] v[n]
};

FeketeEstimate fekete_estimate(const DegreeSequence& seq);

struct StabilityResult {
  unsigned checked_up_to = 0;
  std::optional<unsigned> first_failure;
  bool stable() const { return !first_failure; }
};

/// Smallest n <= n_max with (f^n)* != (f*)^n on N^p, compared exactly.
/// Monomial maps (p in {1, k}) and polynomial maps (p = 1). A bare matrix
/// action has nothing to compare against; pair it with a polynomial map.
StabilityResult stability_check(const MapDescriptor& map, int p, unsigned n_max);

/// Matrix action on N^1 of P(k) checked against the iterates of a polynomial map.
StabilityResult stability_check(const MatrixAction& action, const PolyMap& oracle, unsigned n_max);

/// f*(u).f*(v) - f*(u.v) and its cone membership.
struct ProductDefect {
  CycleClass difference;
  bool effective = false;
};

ProductDefect pullback_product_defect(const MatrixAction& action, const CycleClass& u, const CycleClass& v);

struct DegreeInequality {
  int p = 1;
  double lambda1 = 0.0;
  double lambda_p = 0.0;
  double lambda_next = 0.0;
  bool holds = false;
};

struct PointwiseInequality {
  unsigned n = 1;
  int p = 1;
  CycleClass difference;  // (f^n)*(w^p).(f^n)*(w) - (f^n)*(w^(p+1))
  bool effective = false;
};

struct InequalityReport {
  std::string method;                // how the lambda_p were obtained
  std::vector<double> lambdas;       // lambda_0..lambda_k
  std::vector<double> estimates;     // window-slope estimates where a sequence exists, else NaN
  std::vector<DegreeInequality> degree_checks;
  std::vector<PointwiseInequality> pointwise;
  bool all_hold() const;
};

/// lambda_1 lambda_p >= lambda_{p+1} - tol for p = 1..k-1, plus the class
/// inequality f*(w^(p+1)) <= f*(w^p).f*(w) wherever the action and cones exist.
/// Monomial lambdas come from compound matrices, matrix-action lambdas from
/// the spectral radii of M_p (meaningful under stability).
InequalityReport degree_inequalities(const MapDescriptor& map, unsigned n_max, double tol = 1e-6);

struct ConjugationReport {
  DegreeSequence original;
  DegreeSequence conjugated;
  FeketeEstimate original_estimate;
  FeketeEstimate conjugated_estimate;
  double relative_gap = 0.0;
  bool identical = false;
  bool passed = false;
};

/// Degree growth of f against g o f o g^-1 for an invertible linear g.
ConjugationReport conjugation_invariance_check(const PolyMap& f, const PolyMap& g, unsigned n_max,
                                               double max_gap = 0.02);

/// Columns n, value (exact), value^(1/n) (12 significant digits).
void write_csv(std::ostream& out, const DegreeSequence& seq);

}  // namespace degspec
