#include "degspec/theorems.hpp"

#include <cmath>
#include <sstream>

#include "degspec/errors.hpp"

namespace degspec {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::ConclusionViolated: return "CONCLUSION_VIOLATED";
    case Verdict::NotApplicable: return "NOT_APPLICABLE";
    case Verdict::Indeterminate: return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

std::string to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Asserted: return "asserted";
    case HypothesisStatus::Verified: return "verified";
    case HypothesisStatus::Failed: return "failed";
    case HypothesisStatus::Unchecked: return "unchecked";
  }
  return "unchecked";
}

bool within_band(double a, double b, double band) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0 && std::abs(a - b) <= band * scale;
}

SpectralReport spectral_gap_report(const QMatrix& m1, double r2, double tol, double band) {
  if (!m1.is_square() || m1.rows() == 0) throw DimensionError("M1 must be square and nonempty");
  if (!(r2 >= 0)) throw ParameterError("r2 must be nonnegative");
  if (!(band > 0)) throw ParameterError("band must be positive");

  SpectralReport rep;
  rep.tol = tol;
  rep.band = band;
  rep.spectrum = eigen_spectrum(m1, tol);
  rep.r1 = rep.spectrum.front().modulus;
  rep.r2 = r2;
  rep.sqrt_r2 = std::sqrt(r2);
  rep.hypotheses["one_stable"] = HypothesisStatus::Unchecked;
  rep.hypotheses["cone_preserving"] = HypothesisStatus::Unchecked;

  std::ostringstream why;
  const double r1_sq = rep.r1 * rep.r1;
  if (r1_sq <= r2 || within_band(r1_sq, r2, band)) {
    rep.hypotheses["r1_squared_gt_r2"] = HypothesisStatus::Failed;
    rep.verdict = Verdict::NotApplicable;
    why << "r1^2 = " << format_decimal(r1_sq) << " does not exceed r2 = " << format_decimal(r2) << " beyond the band";
    rep.details = why.str();
    return rep;
  }
  rep.hypotheses["r1_squared_gt_r2"] = HypothesisStatus::Verified;

  const SpectrumEntry& dominant = rep.spectrum.front();
  for (std::size_t i = 0; i < rep.spectrum.size(); ++i) {
    const SpectrumEntry& e = rep.spectrum[i];
    if (within_band(e.modulus, rep.sqrt_r2, band)) {
      rep.verdict = Verdict::Indeterminate;
      why << "modulus " << format_decimal(e.modulus) << " lies within the band of sqrt(r2) = "
          << format_decimal(rep.sqrt_r2);
      rep.details = why.str();
      return rep;
    }
    // An exact conjugate of the dominant root has the same modulus by
    // construction, which is a decided fact, not a near-tie.
    if (i > 0 && within_band(e.modulus, rep.r1, band) && !are_conjugates(dominant, e)) {
      rep.verdict = Verdict::Indeterminate;
      why << "modulus " << format_decimal(e.modulus) << " from a different eigenvalue lies within the band of r1";
      rep.details = why.str();
      return rep;
    }
  }

  int above = 0;
  for (const auto& e : rep.spectrum)
    if (e.modulus > rep.sqrt_r2) ++above;
  const bool simple = dominant.multiplicity == 1;
  const bool real_positive = dominant.is_real && dominant.approx_value.real() > 0;
  if (simple && real_positive && above == 1) {
    rep.verdict = Verdict::Pass;
    why << "r1 = " << format_decimal(rep.r1) << " is a simple eigenvalue and the only one of modulus above sqrt(r2) = "
        << format_decimal(rep.sqrt_r2);
  } else {
    rep.verdict = Verdict::ConclusionViolated;
    if (!simple)
      why << "dominant eigenvalue has multiplicity " << dominant.multiplicity;
    else if (!real_positive)
      why << "dominant eigenvalue is not a positive real number";
    else
      why << above << " distinct eigenvalues have modulus above sqrt(r2) = " << format_decimal(rep.sqrt_r2);
  }
  rep.details = why.str();
  return rep;
}

SpectralReport spectral_gap_report(const QMatrix& m1, const QMatrix& m2, double tol, double band) {
  if (!m2.is_square()) throw DimensionError("M2 must be square");
  return spectral_gap_report(m1, spectral_radius(m2, tol), tol, band);
}

ConePreservation cone_preservation_check(const MatrixAction& action, int p) {
  ConePreservation out;
  out.p = p;
  const auto& gens = action.model->cone_generators(p);
  for (const auto& g : gens) {
    CycleClass gen = make_class(action.model, p, g);
    CycleClass img = action.apply(gen);
    if (!cone_contains(img)) {
      out.witness = gen;
      out.image = img;
      return out;
    }
  }
  out.verified = true;
  return out;
}

R1R2Report r1_squared_vs_r2(const QMatrix& m1, const QMatrix& m2, bool cone_ok, double tol, double band) {
  if (!m1.is_square() || !m2.is_square()) throw DimensionError("M1 and M2 must be square");
  R1R2Report rep;
  rep.r1 = spectral_radius(m1, tol);
  rep.r2 = spectral_radius(m2, tol);
  const double r1_sq = rep.r1 * rep.r1;
  rep.holds = r1_sq >= rep.r2 || within_band(r1_sq, rep.r2, band);
  std::ostringstream why;
  why << "r1^2 = " << format_decimal(r1_sq) << ", r2 = " << format_decimal(rep.r2);
  if (!cone_ok) {
    rep.verdict = Verdict::NotApplicable;
    why << "; cone preservation not established";
  } else {
    rep.verdict = rep.holds ? Verdict::Pass : Verdict::ConclusionViolated;
  }
  rep.details = why.str();
  return rep;
}

DualityReport threefold_duality_check(const QMatrix& a, double tol, double band) {
  if (a.rows() != 3 || a.cols() != 3) throw DimensionError("duality check needs a 3x3 exponent matrix");
  for (const auto& x : a.entries())
    if (!is_integer(x)) throw ParameterError("exponent matrix must have integer entries");
  if (::abs(determinant(a)) != 1) throw ParameterError("duality check needs |det A| = 1");

  const QMatrix inv = inverse(a);
  DualityReport rep;
  rep.lambda1 = spectral_radius(a, tol);
  rep.lambda2 = spectral_radius(compound_matrix(a, 2), tol);
  rep.lambda1_inverse = spectral_radius(inv, tol);
  rep.lambda2_inverse = spectral_radius(compound_matrix(inv, 2), tol);
  rep.relative_gap = std::abs(rep.lambda1_inverse - rep.lambda2) / std::max(1.0, rep.lambda2);
  rep.equality_holds = rep.relative_gap <= 10 * tol;
  auto gap = [&](double l1, double l2) { return l1 * l1 > l2 && !within_band(l1 * l1, l2, band); };
  rep.forward_gap = gap(rep.lambda1, rep.lambda2);
  rep.inverse_gap = gap(rep.lambda1_inverse, rep.lambda2_inverse);
  rep.dichotomy_required = rep.lambda1 > 1 && !within_band(rep.lambda1, 1.0, band);
  rep.dichotomy_holds = !rep.dichotomy_required || rep.forward_gap || rep.inverse_gap;
  rep.verdict = rep.equality_holds && rep.dichotomy_holds ? Verdict::Pass : Verdict::ConclusionViolated;
  return rep;
}

}  // namespace degspec
