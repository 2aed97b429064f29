#include "degspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "degspec/errors.hpp"

namespace degspec {

namespace {

using CLD = std::complex<long double>;
constexpr mp_bitcnt_t kPolishBits = 320;

struct MpComplex {
  mpf_class re{0, kPolishBits};
  mpf_class im{0, kPolishBits};
};

std::vector<mpf_class> to_mpf(const QVector& coeffs) {
  std::vector<mpf_class> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    mpf_class x(0, kPolishBits);
    x = c;
    out.push_back(x);
  }
  return out;
}

// Horner evaluation of f and f' at z.
void evaluate_mp(const std::vector<mpf_class>& c, const MpComplex& z, MpComplex& f, MpComplex& df) {
  f = MpComplex{};
  df = MpComplex{};
  mpf_class tmp(0, kPolishBits);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    // df = df*z + f
    tmp = df.re * z.re - df.im * z.im + f.re;
    df.im = df.re * z.im + df.im * z.re + f.im;
    df.re = tmp;
    // f = f*z + c
    tmp = f.re * z.re - f.im * z.im + *it;
    f.im = f.re * z.im + f.im * z.re;
    f.re = tmp;
  }
}

mpf_class abs_mp(const MpComplex& z) {
  mpf_class r(0, kPolishBits);
  r = sqrt(z.re * z.re + z.im * z.im);
  return r;
}

// Newton steps at 320 bits; returns the a-posteriori radius deg*|f/f'|, which
// encloses a root.
mpf_class polish(const std::vector<mpf_class>& c, MpComplex& z, bool real_only) {
  const int degree = static_cast<int>(c.size()) - 1;
  MpComplex f, df;
  mpf_class radius(0, kPolishBits);
  mpf_class eps(0, kPolishBits);
  mpf_div_2exp(eps.get_mpf_t(), mpf_class(1, kPolishBits).get_mpf_t(), kPolishBits - 24);
  for (int iter = 0; iter < 200; ++iter) {
    evaluate_mp(c, z, f, df);
    mpf_class den = df.re * df.re + df.im * df.im;
    if (den == 0) break;
    MpComplex step;
    step.re = (f.re * df.re + f.im * df.im) / den;
    step.im = (f.im * df.re - f.re * df.im) / den;
    if (real_only) step.im = 0;
    z.re -= step.re;
    z.im -= step.im;
    mpf_class size = abs_mp(step);
    mpf_class scale = abs_mp(z);
    if (scale < 1) scale = 1;
    if (size <= eps * scale) break;
  }
  evaluate_mp(c, z, f, df);
  mpf_class dabs = abs_mp(df);
  if (dabs == 0) return mpf_class(1e300, kPolishBits);
  radius = abs_mp(f) / dabs * degree;
  return radius;
}

// Aberth-Ehrlich simultaneous iteration for a square-free polynomial of degree >= 2.
std::vector<CLD> aberth(const QPolynomial& f) {
  const int n = f.degree();
  std::vector<long double> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = static_cast<long double>(f.coefficient(static_cast<unsigned>(i)).get_d());
  const long double lead = c.back();
  long double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::fabs(c[static_cast<std::size_t>(i)] / lead));
  const long double radius = std::min<long double>(1 + bound, 1e6L) * 0.5L + 0.1L;
  std::vector<CLD> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    long double angle = 2 * std::numbers::pi_v<long double> * i / n + 0.4L;
    z[static_cast<std::size_t>(i)] = std::polar(radius, angle);
  }
  auto eval = [&](CLD x, CLD& fx, CLD& dfx) {
    fx = 0;
    dfx = 0;
    for (int i = n; i >= 0; --i) {
      dfx = dfx * x + fx;
      fx = fx * x + c[static_cast<std::size_t>(i)];
    }
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (int i = 0; i < n; ++i) {
      CLD fx, dfx;
      eval(z[static_cast<std::size_t>(i)], fx, dfx);
      if (fx == CLD(0)) continue;
      CLD ratio = fx / dfx;
      CLD repulsion = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) repulsion += CLD(1) / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
      CLD step = ratio / (CLD(1) - ratio * repulsion);
      z[static_cast<std::size_t>(i)] -= step;
      worst = std::max(worst, std::abs(step) / std::max<long double>(1, std::abs(z[static_cast<std::size_t>(i)])));
    }
    if (worst < 1e-17L) break;
  }
  return z;
}

struct Root {
  MpComplex value;
  mpf_class radius{0, kPolishBits};
  bool is_real = true;
};

std::vector<Root> roots_of_square_free(const QPolynomial& factor) {
  std::vector<Root> roots;
  QPolynomial g = factor.monic();
  if (g.coefficient(0) == 0) {
    roots.push_back(Root{});
    g = divmod(g, QPolynomial{0, 1}).first;
  }
  if (g.degree() == 1) {
    Root r;
    r.value.re = -g.coefficient(0);
    roots.push_back(r);
    return roots;
  }
  if (g.degree() < 1) return roots;

  const int real_count = count_real_roots(g);
  auto approx = aberth(g);
  std::sort(approx.begin(), approx.end(), [](const CLD& a, const CLD& b) {
    if (std::fabs(a.imag()) != std::fabs(b.imag())) return std::fabs(a.imag()) < std::fabs(b.imag());
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  const auto coeffs = to_mpf(g.coefficients());
  std::vector<Root> complex_upper;
  for (std::size_t i = 0; i < approx.size(); ++i) {
    Root r;
    r.value.re = static_cast<double>(approx[i].real());
    r.value.im = static_cast<double>(approx[i].imag());
    if (static_cast<int>(i) < real_count) {
      r.value.im = 0;
      r.radius = polish(coeffs, r.value, true);
      roots.push_back(r);
    } else if (approx[i].imag() > 0) {
      r.is_real = false;
      r.radius = polish(coeffs, r.value, false);
      if (r.value.im < 0) r.value.im = -r.value.im;
      complex_upper.push_back(r);
    }
  }
  // Non-real roots come in conjugate pairs; the upper-half-plane members are
  // polished and their conjugates emitted with bitwise-identical moduli.
  if (static_cast<int>(complex_upper.size() * 2) + real_count != g.degree())
    throw Error("root isolation failed for " + g.to_string());
  for (const auto& r : complex_upper) {
    roots.push_back(r);
    Root conj = r;
    conj.value.im = -conj.value.im;
    roots.push_back(conj);
  }
  return roots;
}

}  // namespace

bool are_conjugates(const SpectrumEntry& a, const SpectrumEntry& b) {
  return !a.is_real && !b.is_real && a.factor == b.factor && a.approx_value == std::conj(b.approx_value);
}

std::vector<SpectrumEntry> polynomial_roots(const QPolynomial& f, double tol) {
  if (!(tol > 0)) throw ParameterError("tol must be positive");
  if (f.is_zero()) throw ParameterError("roots of the zero polynomial");
  std::vector<SpectrumEntry> out;
  auto factors = square_free_decomposition(f);
  for (std::size_t idx = 0; idx < factors.size(); ++idx) {
    const auto& [factor, multiplicity] = factors[idx];
    for (const auto& root : roots_of_square_free(factor)) {
      SpectrumEntry e;
      e.multiplicity = multiplicity;
      e.is_real = root.is_real;
      e.approx_value = {root.value.re.get_d(), root.value.im.get_d()};
      e.modulus = abs_mp(root.value).get_d();
      e.modulus_error_bound = root.radius.get_d() + 4 * std::numeric_limits<double>::epsilon() * e.modulus;
      e.factor = idx;
      if (e.modulus_error_bound > tol)
        throw Error("root refinement did not reach tol " + format_decimal(tol) + " for factor " + factor.to_string());
      out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    if (a.modulus != b.modulus) return a.modulus > b.modulus;
    if (a.approx_value.real() != b.approx_value.real()) return a.approx_value.real() > b.approx_value.real();
    return a.approx_value.imag() > b.approx_value.imag();
  });
  return out;
}

std::vector<SpectrumEntry> eigen_spectrum(const QMatrix& m, double tol) {
  if (!m.is_square()) throw DimensionError("spectrum of a non-square matrix");
  if (!(tol > 0)) throw ParameterError("tol must be positive");
  if (m.rows() == 0) return {};
  return polynomial_roots(charpoly(m), tol);
}

double spectral_radius(const QMatrix& m, double tol) {
  auto spectrum = eigen_spectrum(m, tol);
  return spectrum.empty() ? 0.0 : spectrum.front().modulus;
}

}  // namespace degspec
