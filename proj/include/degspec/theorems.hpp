#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degspec/maps.hpp"
#include "degspec/spectrum.hpp"

namespace degspec {

inline constexpr double kDefaultBand = 1e-6;

enum class Verdict { Pass, ConclusionViolated, NotApplicable, Indeterminate };
enum class HypothesisStatus { Asserted, Verified, Failed, Unchecked };

std::string to_string(Verdict v);
std::string to_string(HypothesisStatus s);

// |a - b| <= band * max(|a|, |b|), the relative band for modulus comparisons.
// Relative, so verdicts do not change when M1 is scaled by s and r2 by s^2.
// Two exact zeros are equal, not near.
bool within_band(double a, double b, double band);

/// Classification of an action on N^1 against the spectral-gap conclusion:
/// when r1^2 > r2 the dominant eigenvalue is simple and it is the only one of
/// modulus above sqrt(r2). Simplicity is exact; modulus comparisons use `band`.
struct SpectralReport {
  double r1 = 0.0;
  std::vector<SpectrumEntry> spectrum;
  double r2 = 0.0;
  double sqrt_r2 = 0.0;
  double tol = kDefaultTol;
  double band = kDefaultBand;
  std::map<std::string, HypothesisStatus> hypotheses;
  Verdict verdict = Verdict::Indeterminate;
  std::string details;
};

SpectralReport spectral_gap_report(const QMatrix& m1, double r2, double tol = kDefaultTol, double band = kDefaultBand);
SpectralReport spectral_gap_report(const QMatrix& m1, const QMatrix& m2, double tol = kDefaultTol,
                                   double band = kDefaultBand);

struct ConePreservation {
  int p = 1;
  bool verified = false;
  std::optional<CycleClass> witness;  // a generator whose image leaves the cone
  std::optional<CycleClass> image;
};

ConePreservation cone_preservation_check(const MatrixAction& action, int p);

struct R1R2Report {
  double r1 = 0.0;
  double r2 = 0.0;
  bool holds = false;  // r1^2 >= r2 up to the band
  Verdict verdict = Verdict::NotApplicable;
  std::string details;
};

/// With cone preservation asserted or verified, r1^2 >= r2 must hold; a
/// failure means the inputs are inconsistent.
R1R2Report r1_squared_vs_r2(const QMatrix& m1, const QMatrix& m2, bool cone_ok, double tol = kDefaultTol,
                            double band = kDefaultBand);

struct DualityReport {
  double lambda1 = 0.0;          // rho(A)
  double lambda2 = 0.0;          // rho(compound(A, 2))
  double lambda1_inverse = 0.0;  // rho(A^-1)
  double lambda2_inverse = 0.0;  // rho(compound(A^-1, 2))
  double relative_gap = 0.0;     // |lambda1_inverse - lambda2| / max(1, lambda2)
  bool equality_holds = false;
  bool forward_gap = false;   // lambda1^2 > lambda2
  bool inverse_gap = false;   // same for the inverse
  bool dichotomy_required = false;  // lambda1 > 1
  bool dichotomy_holds = false;
  Verdict verdict = Verdict::Pass;
};

/// For a 3x3 exponent matrix with |det| = 1: lambda1(f^-1) = lambda2(f), and
/// when lambda1 > 1 at least one of f, f^-1 has lambda1^2 > lambda2.
DualityReport threefold_duality_check(const QMatrix& a, double tol = kDefaultTol, double band = kDefaultBand);

}  // namespace degspec
