#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "degspec/errors.hpp"
#include "degspec/qmatrix.hpp"
#include "degspec/qpolynomial.hpp"
#include "degspec/spectrum.hpp"

using namespace degspec;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational(" -7 ") == -7);
  CHECK(to_string(parse_rational("10/-4")) == "-5/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), IngestionError);
  CHECK_THROWS_AS(parse_rational("abc"), IngestionError);
  CHECK(log_abs(Rational(Integer("1" + std::string(400, '0')))) == doctest::Approx(400 * std::log(10.0)));
}

TEST_CASE("charpoly examples") {
  CHECK(charpoly(QMatrix::identity(2)) == QPolynomial{1, -2, 1});
  CHECK(charpoly(QMatrix{{2, 1}, {1, 1}}) == QPolynomial{1, -3, 1});
  // companion matrix of t^3 - t - 1
  QMatrix companion{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}};
  CHECK(charpoly(companion) == QPolynomial{-1, -1, 0, 1});
  CHECK_THROWS_AS(charpoly(QMatrix(2, 3)), DimensionError);
}

TEST_CASE("charpoly agrees with det(tI - M) at sample points and satisfies Cayley-Hamilton") {
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 6;
    QMatrix m = oracle::random_int_matrix(rng, n, n, -5, 5);
    if (trial % 7 == 0) m = m * Rational(1, 3);
    QPolynomial p = charpoly(m);
    REQUIRE(p.degree() == static_cast<int>(n));
    CHECK(p.leading() == 1);
    for (long t = -2; t <= static_cast<long>(n); ++t) {
      QMatrix shifted = QMatrix::identity(n) * Rational(t) - m;
      CHECK(p.evaluate(Rational(t)) == oracle::leibniz_det(shifted));
    }
    CHECK(p.evaluate(m).is_zero());
  }
}

TEST_CASE("determinant and inverse") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 5;
    QMatrix m = oracle::random_int_matrix(rng, n, n, -4, 4);
    Rational d = determinant(m);
    CHECK(d == oracle::leibniz_det(m));
    if (d != 0) CHECK(m * inverse(m) == QMatrix::identity(n));
  }
  CHECK_THROWS_AS(inverse(QMatrix{{1, 2}, {2, 4}}), ParameterError);
}

TEST_CASE("square-free decomposition") {
  // (t-1)^3 (t+2) (t^2+1)^2
  QPolynomial f = QPolynomial{-1, 1} * QPolynomial{-1, 1} * QPolynomial{-1, 1} * QPolynomial{2, 1} *
                  QPolynomial{1, 0, 1} * QPolynomial{1, 0, 1};
  auto parts = square_free_decomposition(f * Rational(5));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == std::pair{QPolynomial{2, 1}, 1});
  CHECK(parts[1] == std::pair{QPolynomial{1, 0, 1}, 2});
  CHECK(parts[2] == std::pair{QPolynomial{-1, 1}, 3});
  CHECK(count_real_roots(f) == 2);
  CHECK(count_real_roots(QPolynomial{-1, -1, 0, 1}) == 1);
  CHECK(count_real_roots(QPolynomial{0, -1, 0, 1}) == 3);
}

TEST_CASE("eigen_spectrum examples") {
  auto fib = eigen_spectrum(QMatrix{{2, 1}, {1, 1}});
  REQUIRE(fib.size() == 2);
  CHECK(fib[0].modulus == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-12));
  CHECK(fib[1].modulus == doctest::Approx((3 - std::sqrt(5.0)) / 2).epsilon(1e-12));
  CHECK(fib[0].multiplicity == 1);
  CHECK(fib[1].multiplicity == 1);
  CHECK(fib[0].is_real);

  auto id = eigen_spectrum(QMatrix::identity(3));
  REQUIRE(id.size() == 1);
  CHECK(id[0].modulus == 1.0);
  CHECK(id[0].multiplicity == 3);

  auto rot = eigen_spectrum(QMatrix{{1, -1}, {1, 1}});
  REQUIRE(rot.size() == 2);
  CHECK_FALSE(rot[0].is_real);
  CHECK(rot[0].modulus == rot[1].modulus);
  CHECK(rot[0].modulus == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(are_conjugates(rot[0], rot[1]));
  CHECK(rot[0].multiplicity + rot[1].multiplicity == 2);

  CHECK_THROWS_AS(eigen_spectrum(QMatrix::identity(2), 0.0), ParameterError);
  CHECK_THROWS_AS(eigen_spectrum(QMatrix::identity(2), -1.0), ParameterError);
}

TEST_CASE("spectral_radius examples") {
  CHECK(spectral_radius(QMatrix{{2, 1}, {1, 1}}) == doctest::Approx(2.618034).epsilon(1e-6));
  CHECK(spectral_radius(QMatrix(2, 2)) == 0.0);
  CHECK(spectral_radius(QMatrix{{1, -1}, {1, 1}}) == doctest::Approx(1.414214).epsilon(1e-6));
  // nilpotent
  CHECK(spectral_radius(QMatrix{{0, 1}, {0, 0}}) == 0.0);
}

TEST_CASE("compound_matrix examples") {
  QMatrix m{{3, 1, 4}, {1, 5, 9}, {2, 6, 5}};
  QMatrix top = compound_matrix(m, 3);
  REQUIRE(top.rows() == 1);
  CHECK(top(0, 0) == determinant(m));
  CHECK(compound_matrix(QMatrix{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}, 2) == QMatrix{{6, 0, 0}, {0, 10, 0}, {0, 0, 15}});
  CHECK(compound_matrix(QMatrix{{2, 1}, {1, 1}}, 2) == QMatrix{{1}});
  CHECK(compound_matrix(m, 1) == m);
  CHECK_THROWS_AS(compound_matrix(m, 0), ParameterError);
  CHECK_THROWS_AS(compound_matrix(m, 4), ParameterError);
}

TEST_CASE("multiplicities always sum to the dimension") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 6;
    QMatrix m = oracle::random_int_matrix(rng, n, n, -3, 3);
    // Force some repeated eigenvalues.
    if (trial % 5 == 0) m = m * m;
    if (trial % 11 == 0) m = QMatrix::diagonal(QVector(n, Rational(trial % 3)));
    auto spectrum = eigen_spectrum(m);
    int total = 0;
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
      total += spectrum[i].multiplicity;
      CHECK(spectrum[i].modulus_error_bound <= kDefaultTol);
      if (i > 0) CHECK(spectrum[i - 1].modulus >= spectrum[i].modulus);
    }
    CHECK(total == static_cast<int>(n));
  }
}

TEST_CASE("compound spectral radius is the product of the leading moduli") {
  std::mt19937 rng(99);
  int tested = 0;
  while (tested < 40) {
    std::size_t k = 2 + static_cast<std::size_t>(tested % 4);
    QMatrix m = oracle::random_int_matrix(rng, k, k, -4, 4);
    auto spectrum = eigen_spectrum(m);
    // Diagonalizable when every eigenvalue is simple.
    bool simple = std::all_of(spectrum.begin(), spectrum.end(), [](const SpectrumEntry& e) { return e.multiplicity == 1; });
    if (!simple) continue;
    ++tested;
    for (std::size_t p = 1; p <= k; ++p) {
      double product = 1;
      for (std::size_t i = 0; i < p; ++i) product *= spectrum[i].modulus;
      double radius = spectral_radius(compound_matrix(m, p));
      CHECK(std::fabs(radius - product) <= 2 * kDefaultTol * static_cast<double>(k));
    }
  }
}

TEST_CASE("top compound has a linear charpoly with constant -det") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t k = 1 + trial % 5;
    QMatrix m = oracle::random_int_matrix(rng, k, k, -6, 6);
    QPolynomial p = charpoly(compound_matrix(m, k));
    CHECK(p.degree() == 1);
    CHECK(p.coefficient(0) == -determinant(m));
  }
}
