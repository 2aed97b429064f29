#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "degspec/qmatrix.hpp"
#include "degspec/qpolynomial.hpp"

namespace degspec {

inline constexpr double kDefaultTol = 1e-9;

/// One distinct eigenvalue. Multiplicity is exact (square-free decomposition
/// of the characteristic polynomial); value and modulus are approximations
/// within `modulus_error_bound`, which never exceeds the requested tol.
struct SpectrumEntry {
  double modulus = 0.0;
  int multiplicity = 0;
  bool is_real = true;
  std::complex<double> approx_value;
  double modulus_error_bound = 0.0;
  // Index of the square-free factor the root belongs to; two non-real entries
  // of the same factor with conjugate values have exactly equal moduli.
  std::size_t factor = 0;
};

/// Roots of a nonzero polynomial with exact multiplicities, sorted by modulus
/// descending (ties: real part descending, then imaginary part descending).
std::vector<SpectrumEntry> polynomial_roots(const QPolynomial& f, double tol = kDefaultTol);

std::vector<SpectrumEntry> eigen_spectrum(const QMatrix& m, double tol = kDefaultTol);

double spectral_radius(const QMatrix& m, double tol = kDefaultTol);

// True when entries a and b are complex conjugates from the same factor.
bool are_conjugates(const SpectrumEntry& a, const SpectrumEntry& b);

}  // namespace degspec
