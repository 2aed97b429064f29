#include "degspec/dynamics.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "degspec/errors.hpp"

namespace degspec {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// deg0(c . w^(k-p)) for c in N^p.
Rational degree_against_ample(const CycleClass& c) { return degree(c); }

std::vector<Rational> matrix_iterate_degrees(const ModelPtr& model, int p, unsigned n_max,
                                             const std::function<QMatrix(unsigned)>& action_of_iterate) {
  const CycleClass wp = power(ample_class(model), p);
  std::vector<Rational> out;
  out.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n)
    out.push_back(degree_against_ample(make_class(model, p, action_of_iterate(n).apply(wp.coords))));
  return out;
}

void require_monomial_p(const MonomialMap& m, int p) {
  const int k = static_cast<int>(m.dim());
  if (p != 1 && p != k)
    throw CapabilityError("monomial maps support p = 1 and p = k only (got p = " + std::to_string(p) + ")");
}

Rational positive_or_throw(const Rational& v, unsigned n) {
  if (v <= 0)
    throw ModelDataError("degree at n = " + std::to_string(n) + " is " + to_string(v) + "; degrees must be positive");
  return v;
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

StabilityResult compare_iterates(unsigned n_max, const std::function<bool(unsigned)>& equal_at) {
  StabilityResult r;
  for (unsigned n = 1; n <= n_max; ++n) {
    if (!equal_at(n)) {
      r.first_failure = n;
      return r;
    }
    r.checked_up_to = n;
  }
  return r;
}

}  // namespace

unsigned default_nmax(const MapDescriptor& map) {
  return std::holds_alternative<PolyMap>(map) ? kDefaultNmaxPoly : kDefaultNmaxMatrix;
}

DegreeSequence degree_sequence(const MapDescriptor& map, int p, unsigned n_max) {
  if (n_max < 1) throw ParameterError("n_max must be at least 1");
  DegreeSequence seq;
  seq.p = p;
  seq.source = map_kind(map);
  std::visit(overloaded{
                 [&](const MonomialMap& m) {
                   require_monomial_p(m, p);
                   const int k = static_cast<int>(m.dim());
                   if (m.variety == MonomialVariety::Pk) {
                     const Integer det = abs(determinant(m.exponents).get_num());
                     QMatrix an = m.exponents;
                     Integer topo = det;
                     for (unsigned n = 1; n <= n_max; ++n) {
                       seq.values.emplace_back(p == 1 ? monomial_degree_pk(an) : topo);
                       an = an * m.exponents;
                       topo *= det;
                     }
                     return;
                   }
                   ModelPtr model = make_model("P1xP1xK(" + std::to_string(k) + ")");
                   seq.values = matrix_iterate_degrees(
                       model, p, n_max, [&](unsigned n) { return monomial_iterate_action(m.exponents, n, p); });
                 },
                 [&](const PolyMap& f) {
                   if (p != 1)
                     throw CapabilityError("polynomial maps support p = 1 only (got p = " + std::to_string(p) + ")");
                   PolyMap fn = f;
                   for (unsigned n = 1; n <= n_max; ++n) {
                     if (n > 1) fn = compose_polymap(f, fn);
                     seq.values.emplace_back(fn.degree());
                   }
                 },
                 [&](const MatrixAction& a) {
                   const QMatrix& m = a.at(p);
                   seq.assumption_dependent = true;
                   QMatrix mn = m;
                   seq.values = matrix_iterate_degrees(a.model, p, n_max, [&](unsigned n) {
                     if (n > 1) mn = mn * m;
                     return mn;
                   });
                 },
             },
             map);
  for (unsigned n = 1; n <= seq.values.size(); ++n) positive_or_throw(seq.values[n - 1], n);
  return seq;
}

FeketeEstimate fekete_estimate(const DegreeSequence& seq) {
  const auto& v = seq.values;
  const unsigned n_max = static_cast<unsigned>(v.size());
  if (n_max < 2) throw ParameterError("Fekete estimate needs at least two values");
  FeketeEstimate est;
  std::vector<double> logs(n_max);
  for (unsigned n = 1; n <= n_max; ++n) logs[n - 1] = log_abs(positive_or_throw(v[n - 1], n));

  est.upper_inf = std::numeric_limits<double>::infinity();
  for (unsigned n = 1; n <= n_max; ++n) {
    double root = std::exp(logs[n - 1] / n);
    if (root < est.upper_inf) {
      est.upper_inf = root;
      est.upper_inf_at = n;
    }
  }
  est.last_root = std::exp(logs.back() / n_max);

  est.window = std::max(2u, (n_max + 1) / 2);
  std::vector<double> xs, ys;
  for (unsigned n = n_max - est.window + 1; n <= n_max; ++n) {
    xs.push_back(n);
    ys.push_back(logs[n - 1]);
  }
  est.window_slope = std::exp(least_squares_slope(xs, ys));

  for (unsigned m = 1; 2 * m <= n_max; ++m)
    for (unsigned n = m; m + n <= n_max; ++n)
      if (v[m + n - 1] > v[m - 1] * v[n - 1]) est.violations.emplace_back(m, n);
  return est;
}

StabilityResult stability_check(const MapDescriptor& map, int p, unsigned n_max) {
  return std::visit(
      overloaded{
          [&](const MonomialMap& m) {
            require_monomial_p(m, p);
            const int k = static_cast<int>(m.dim());
            if (m.variety == MonomialVariety::Pk) {
              if (p == k && k > 1) return compare_iterates(n_max, [](unsigned) { return true; });
              const Integer d = monomial_degree_pk(m.exponents);
              return compare_iterates(n_max, [&](unsigned n) {
                Integer dn;
                mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), n);
                return monomial_degree_pk(m.exponents.pow(n)) == dn;
              });
            }
            const QMatrix base = monomial_action_p1k(m.exponents, p);
            QMatrix power = base;
            return compare_iterates(n_max, [&](unsigned n) {
              if (n > 1) power = power * base;
              return monomial_iterate_action(m.exponents, n, p) == power;
            });
          },
          [&](const PolyMap& f) {
            if (p != 1) throw CapabilityError("polynomial maps support p = 1 only");
            PolyMap fn = f;
            Integer dn = 1;
            return compare_iterates(n_max, [&](unsigned n) {
              if (n > 1) fn = compose_polymap(f, fn);
              dn *= f.degree();
              return Integer(fn.degree()) == dn;
            });
          },
          [&](const MatrixAction&) -> StabilityResult {
            throw CapabilityError("a matrix action has no iterates to compare against; supply a polynomial oracle");
          },
      },
      map);
}

StabilityResult stability_check(const MatrixAction& action, const PolyMap& oracle, unsigned n_max) {
  const std::size_t k = oracle.dim();
  if (action.model->dim() != static_cast<int>(k) || action.model->rank(1) != 1)
    throw DimensionError("a polynomial oracle needs a matrix action on N^1 of P(" + std::to_string(k) + ")");
  const QMatrix& m1 = action.at(1);
  QMatrix power = m1;
  PolyMap fn = oracle;
  return compare_iterates(n_max, [&](unsigned n) {
    if (n > 1) {
      power = power * m1;
      fn = compose_polymap(oracle, fn);
    }
    return power(0, 0) == fn.degree();
  });
}

ProductDefect pullback_product_defect(const MatrixAction& action, const CycleClass& u, const CycleClass& v) {
  ProductDefect out;
  out.difference = cup(action.apply(u), action.apply(v)) - action.apply(cup(u, v));
  out.effective = cone_contains(out.difference);
  return out;
}

bool InequalityReport::all_hold() const {
  for (const auto& c : degree_checks)
    if (!c.holds) return false;
  for (const auto& c : pointwise)
    if (!c.effective) return false;
  return true;
}

InequalityReport degree_inequalities(const MapDescriptor& map, unsigned n_max, double tol) {
  InequalityReport rep;
  int k = 0;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  // Actions of the iterates used for the pointwise class inequality.
  std::vector<MatrixAction> iterate_actions;

  if (const auto* m = std::get_if<MonomialMap>(&map)) {
    k = static_cast<int>(m->dim());
    rep.method = "compound-matrix spectral radii";
    rep.lambdas.assign(static_cast<std::size_t>(k) + 1, 1.0);
    for (int p = 1; p <= k; ++p)
      rep.lambdas[static_cast<std::size_t>(p)] = spectral_radius(compound_matrix(m->exponents, static_cast<std::size_t>(p)));
    rep.estimates.assign(rep.lambdas.size(), nan);
    if (n_max >= 2)
      for (int p : {1, k}) rep.estimates[static_cast<std::size_t>(p)] = fekete_estimate(degree_sequence(map, p, n_max)).window_slope;
    if (m->variety == MonomialVariety::P1k && k >= 2 && k <= 4)
      for (unsigned n = 1; n <= std::min(n_max, 6u); ++n) iterate_actions.push_back(monomial_matrix_action(m->exponents, n));
  } else if (const auto* a = std::get_if<MatrixAction>(&map)) {
    k = a->model->dim();
    rep.method = "spectral radii of M_p (assumes stability)";
    rep.lambdas.assign(static_cast<std::size_t>(k) + 1, nan);
    rep.estimates.assign(rep.lambdas.size(), nan);
    rep.lambdas[0] = 1.0;
    for (const auto& [p, mat] : a->matrices) {
      rep.lambdas[static_cast<std::size_t>(p)] = spectral_radius(mat);
      if (n_max >= 2 && p > 0) rep.estimates[static_cast<std::size_t>(p)] = fekete_estimate(degree_sequence(map, p, n_max)).window_slope;
    }
    iterate_actions.push_back(*a);
  } else {
    throw CapabilityError("degree inequalities need lambda_p beyond p = 1; polynomial maps only provide lambda_1");
  }

  for (int p = 1; p < k; ++p) {
    const double l1 = rep.lambdas[1], lp = rep.lambdas[static_cast<std::size_t>(p)],
                 ln = rep.lambdas[static_cast<std::size_t>(p) + 1];
    if (std::isnan(l1) || std::isnan(lp) || std::isnan(ln)) continue;
    rep.degree_checks.push_back({p, l1, lp, ln, l1 * lp >= ln - tol});
  }

  for (std::size_t i = 0; i < iterate_actions.size(); ++i) {
    const auto& act = iterate_actions[i];
    const ModelPtr& model = act.model;
    const CycleClass w = ample_class(model);
    for (int p = 1; p < k; ++p) {
      if (!act.has(1) || !act.has(p) || !act.has(p + 1) || !model->has_cone(p + 1)) continue;
      PointwiseInequality pw;
      pw.n = static_cast<unsigned>(i + 1);
      pw.p = p;
      const CycleClass wp = power(w, p);
      pw.difference = cup(act.apply(wp), act.apply(w)) - act.apply(cup(wp, w));
      pw.effective = cone_contains(pw.difference);
      rep.pointwise.push_back(std::move(pw));
    }
  }
  return rep;
}

ConjugationReport conjugation_invariance_check(const PolyMap& f, const PolyMap& g, unsigned n_max, double max_gap) {
  if (g.degree() != 1) throw ParameterError("conjugating map must be linear");
  if (g.dim() != f.dim()) throw DimensionError("conjugating map has the wrong dimension");
  const QMatrix l = g.linear_matrix();
  const Rational det = determinant(l);
  if (det == 0) throw ParameterError("conjugating map is not invertible");
  // det * L^-1 is the integer adjugate; projectively the same map as L^-1.
  const PolyMap g_inv = PolyMap::linear(inverse(l) * det);
  const PolyMap h = compose_polymap(g, compose_polymap(f, g_inv));

  ConjugationReport rep;
  rep.original = degree_sequence(f, 1, n_max);
  rep.conjugated = degree_sequence(h, 1, n_max);
  rep.identical = rep.original.values == rep.conjugated.values;
  if (n_max >= 2) {
    rep.original_estimate = fekete_estimate(rep.original);
    rep.conjugated_estimate = fekete_estimate(rep.conjugated);
    const double a = rep.original_estimate.window_slope, b = rep.conjugated_estimate.window_slope;
    rep.relative_gap = std::abs(a - b) / std::max(a, b);
  }
  rep.passed = rep.identical || rep.relative_gap <= max_gap;
  return rep;
}

void write_csv(std::ostream& out, const DegreeSequence& seq) {
  out << "n,value,root\n";
  for (std::size_t i = 0; i < seq.values.size(); ++i) {
    const unsigned n = static_cast<unsigned>(i + 1);
    out << n << ',' << to_string(seq.values[i]) << ',' << format_decimal(std::exp(log_abs(seq.values[i]) / n)) << '\n';
  }
}

}  // namespace degspec
