// One PASS/FAIL line per acceptance criterion; a criterion fails if any of
// its checks fails or it exceeds its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"

#include "degspec/dynamics.hpp"
#include "degspec/theorems.hpp"

using namespace degspec;

namespace {

struct Checker {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<void(Checker&)> body;
};

bool rel_close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)); }

CycleClass cls(const ModelPtr& m, int p, std::initializer_list<long> xs) {
  QVector v;
  for (long x : xs) v.emplace_back(x);
  return make_class(m, p, v);
}

// Moduli of the eigenvalues with multiplicity, largest first.
std::vector<double> moduli(const QMatrix& a) {
  std::vector<double> out;
  for (const auto& e : eigen_spectrum(a))
    for (int i = 0; i < e.multiplicity; ++i) out.push_back(e.modulus);
  std::sort(out.rbegin(), out.rend());
  return out;
}

QMatrix nonsingular(std::mt19937& rng, std::size_t n, long lo, long hi) {
  for (;;) {
    QMatrix a = oracle::random_int_matrix(rng, n, n, lo, hi);
    if (oracle::leibniz_det(a) != 0) return a;
  }
}

void blowup_suite(Checker& check) {
  auto line = make_model("BlP3line");
  std::mt19937 rng(101);
  std::uniform_int_distribution<long> coef(-50, 50);
  for (int i = 0; i < 100; ++i) {
    auto alpha = cls(line, 1, {coef(rng), coef(rng)});
    auto ids = check_blowup_identities(alpha);
    check(ids.push_exceptional_square, "push(E.E) = -W");
    check(ids.pull_push, "pull(push a) = a + (a.F)E");
    check(ids.push_times_exceptional, "push(a.E) = (a.F)W");
    check(ids.square_defect, "push(a)^2 - push(a^2) = (a.F)^2 W");
  }
  // Hand values on the generators: E.E = -H^2 + 2F pushes to -H^2 = -[line].
  auto E = cls(line, 1, {0, 1});
  auto p3 = line->blowdown()->target;
  check(blowdown_pushforward(cup(E, E)) == cls(p3, 2, {-1}), "push(E.E) on BlP3line by hand");

  auto pt = make_model("BlP3pt");
  auto Ep = cls(pt, 1, {0, 1});
  check(blowdown_pushforward(cup(Ep, Ep)).is_zero(), "push(E.E) = 0 on BlP3pt");
}

void hodge_suite(Checker& check) {
  for (const auto& name : builtin_model_specs()) {
    ModelPtr m = make_model(name);
    if (m->dim() < 2) continue;
    const Signature sig = hodge_signature(m, ample_class(m));
    const int rho = static_cast<int>(m->rank(1));
    check(sig == Signature{1, rho - 1, 0}, "signature on " + name);
  }
}

void product_defect_suite(Checker& check) {
  auto act = monomial_matrix_action(QMatrix{{2, 1}, {1, 1}});
  auto m = act.model;
  auto d = pullback_product_defect(act, basis_class(m, 1, 0), basis_class(m, 1, 1));
  check(d.difference == cls(m, 2, {2}), "difference = 2 h1h2");
  check(d.effective, "difference effective");
  check(cone_contains(d.difference), "difference in the cone");
  // By hand: f*h1 = 2h1 + h2, f*h2 = h1 + h2, f*(h1h2) = |det| h1h2 = h1h2.
  auto lhs = cup(cls(m, 1, {2, 1}), cls(m, 1, {1, 1}));
  check(lhs - cls(m, 2, {1}) == d.difference, "difference by hand");
}

void cremona_suite(Checker& check) {
  auto seq = degree_sequence(PolyMap::cremona(2), 1, 8);
  std::vector<Rational> expected{2, 1, 2, 1, 2, 1, 2, 1};
  check(seq.values == expected, "sequence 2,1,2,1,2,1,2,1");
  // Second iterate reduces to the identity after removing the common monomial.
  PolyMap twice = compose_polymap(PolyMap::cremona(2), PolyMap::cremona(2));
  check(twice == PolyMap::identity(2), "sigma o sigma = id");
}

void fekete_suite(Checker& check) {
  std::mt19937 rng(105);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t k = 2 + trial % 2;
    // Strictly positive entries keep the matrix primitive.
    QMatrix a = nonsingular(rng, k, 1, 4);
    auto est = fekete_estimate(degree_sequence(MonomialMap::create(a), 1, 25));
    // Oracle: dominant root of |A| by power iteration in doubles.
    std::vector<double> v(k, 1.0);
    double rho = 0;
    for (int it = 0; it < 500; ++it) {
      std::vector<double> w(k, 0.0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) w[i] += std::abs(a(i, j).get_d()) * v[j];
      double norm = 0;
      for (double x : w) norm = std::max(norm, x);
      rho = norm / *std::max_element(v.begin(), v.end());
      for (std::size_t i = 0; i < k; ++i) v[i] = w[i] / norm;
    }
    check(rel_close(est.window_slope, rho, 0.01), "window slope within 1% of rho(|A|)");
    check(est.upper_inf >= est.window_slope - 1e-9, "upper_inf >= window slope");
    check(est.violations.empty(), "no submultiplicativity violations");
  }
}

void instability_suite(Checker& check) {
  MonomialMap rot = MonomialMap::create(QMatrix{{1, -1}, {1, 1}});
  auto st = stability_check(rot, 1, 30);
  check(st.first_failure && *st.first_failure == 2, "first_failure = 2");
  auto est = fekete_estimate(degree_sequence(rot, 1, 30));
  check(rel_close(est.window_slope, std::sqrt(2.0), 0.02), "slope within 2% of sqrt 2");
}

void spectral_suite(Checker& check) {
  QMatrix m1 = monomial_action_p1k(QMatrix{{2, 1}, {1, 1}}, 1);
  auto fib = spectral_gap_report(m1, 1.0);
  check(fib.verdict == Verdict::Pass, "Fibonacci PASS");
  check(std::abs(fib.r1 - (3 + std::sqrt(5.0)) / 2) < 1e-6, "r1 = 2.618034");
  check(fib.spectrum.size() == 2 && fib.spectrum[0].multiplicity == 1, "r1 simple");
  check(fib.spectrum.size() == 2 && std::abs(fib.spectrum[1].modulus - (3 - std::sqrt(5.0)) / 2) < 1e-6,
        "other modulus 0.381966");
  check(spectral_gap_report(QMatrix{{2, 0}, {0, 2}}, 1.0).verdict == Verdict::ConclusionViolated, "diag(2,2) violated");
  check(spectral_gap_report(QMatrix{{1, -1}, {1, 1}}, 2.0).verdict == Verdict::NotApplicable, "rotation not applicable");
}

void duality_suite(Checker& check) {
  std::mt19937 rng(108);
  for (int trial = 0; trial < 25; ++trial) {
    QMatrix a = oracle::random_unimodular(rng, 3, 15);
    auto rep = threefold_duality_check(a);
    // Oracle: for |det| = 1, rho(A^-1) = 1/min|mu| and rho(wedge2 A) = |mu1 mu2|.
    auto mu = moduli(a);
    const double lambda2 = mu[0] * mu[1];
    check(rel_close(rep.lambda1_inverse, 1.0 / mu[2], 1e-5), "lambda1(A^-1) against eigenvalue oracle");
    check(rel_close(rep.lambda2, lambda2, 1e-5), "rho(wedge2 A) against eigenvalue oracle");
    check(rel_close(rep.lambda1_inverse, rep.lambda2, 1e-5), "lambda1(A^-1) = rho(wedge2 A)");
    if (mu[0] > 1 + 1e-6) {
      const double inv1 = 1.0 / mu[2], inv2 = 1.0 / (mu[1] * mu[2]);
      const bool oracle_dichotomy = mu[0] * mu[0] > lambda2 + 1e-6 || inv1 * inv1 > inv2 + 1e-6;
      check(oracle_dichotomy, "dichotomy by eigenvalue oracle");
      check(rep.dichotomy_holds, "dichotomy reported");
    }
  }
}

void inequality_suite(Checker& check) {
  std::vector<QMatrix> examples{QMatrix{{2, 1}, {1, 1}}, QMatrix{{1, -1}, {1, 1}}, QMatrix{{2, 0}, {0, 2}},
                                QMatrix{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}, QMatrix{{1, 2, 0}, {0, 1, 1}, {1, 0, 1}}};
  std::mt19937 rng(109);
  for (int i = 0; i < 4; ++i) examples.push_back(nonsingular(rng, 2 + i % 3, -2, 3));
  for (const auto& a : examples) {
    const int k = static_cast<int>(a.rows());
    auto rep = degree_inequalities(MonomialMap::create(a), 10);
    auto mu = moduli(a);
    // lambda_p of a monomial map is the product of the p largest eigenvalue moduli.
    std::vector<double> lam(static_cast<std::size_t>(k) + 1, 1.0);
    for (int p = 1; p <= k; ++p) lam[p] = lam[p - 1] * mu[p - 1];
    for (int p : {1, k - 1}) {
      if (p < 1 || p >= k) continue;
      check(lam[1] * lam[p] >= lam[p + 1] - 1e-6, "oracle lambda1 lambda_p >= lambda_{p+1}");
      check(rel_close(rep.lambdas[p], lam[p], 1e-6) && rel_close(rep.lambdas[p + 1], lam[p + 1], 1e-6),
            "reported lambdas match the oracle");
    }
    check(rep.all_hold(), "reported inequalities hold");
    if (k == 2) {
      check(!rep.pointwise.empty(), "pointwise checks on (P1)^2");
      for (const auto& pw : rep.pointwise) {
        // f_n^*(w) = (x, y) for w = h1 + h2; the difference is 2xy - 2|det A^n| times h1h2.
        QMatrix b = a.pow(pw.n).abs();
        Rational x = b(0, 0) + b(1, 0), y = b(0, 1) + b(1, 1);
        Rational expected = 2 * x * y - 2 * ::abs(oracle::leibniz_det(a.pow(pw.n)));
        check(pw.difference.coords == QVector{expected}, "pointwise difference by hand");
        check(pw.effective && expected >= 0, "pointwise difference effective");
      }
    }
  }
}

void conjugation_suite(Checker& check) {
  PolyMap sigma = PolyMap::cremona(2);
  std::mt19937 rng(110);
  for (int trial = 0; trial < 5; ++trial) {
    QMatrix g = nonsingular(rng, 3, -2, 2);
    auto rep = conjugation_invariance_check(sigma, PolyMap::linear(g), kDefaultNmaxPoly);
    check(rep.passed, "conjugated slope within 2%");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "blowup identities on BlP3line; push(E.E) = 0 on BlP3pt", 1.0, blowup_suite},
      {2, "Hodge signature (1, rho-1, 0) on built-in models", 1.0, hodge_suite},
      {3, "product defect 2 h1h2 for [[2,1],[1,1]]", 1.0, product_defect_suite},
      {4, "Cremona degrees 2,1,2,1,2,1,2,1", 5.0, cremona_suite},
      {5, "Fekete estimate against spectral radius", 10.0, fekete_suite},
      {6, "instability of the sqrt 2 rotation", 5.0, instability_suite},
      {7, "spectral gap verdicts", 1.0, spectral_suite},
      {8, "threefold duality and dichotomy", 10.0, duality_suite},
      {9, "degree and pointwise inequalities", 5.0, inequality_suite},
      {10, "conjugation invariance of the Cremona slope", 10.0, conjugation_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Checker check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) check(false, "over time budget");
    const bool ok = check.failures.empty();
    failed += !ok;
    std::printf("criterion %2d: %s  %s (%.3f s, budget %.0f s)\n", c.id, ok ? "PASS" : "FAIL", c.name.c_str(), secs,
                c.budget_s);
    for (std::size_t i = 0; i < std::min<std::size_t>(check.failures.size(), 5); ++i)
      std::printf("    failed: %s\n", check.failures[i].c_str());
  }
  return failed == 0 ? 0 : 1;
}
