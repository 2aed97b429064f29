#include "degspec/model.hpp"

#include <sstream>

#include "degspec/errors.hpp"
#include "degspec/simplex.hpp"

namespace degspec {

namespace {

std::string where(const ModelData& d) { return "model '" + d.name + "': "; }

QVector unit_vector(std::size_t n, std::size_t i) {
  QVector v(n);
  v[i] = 1;
  return v;
}

}  // namespace

ModelPtr VarietyModel::create(ModelData data) {
  auto model = std::shared_ptr<VarietyModel>(new VarietyModel(std::move(data)));
  model->validate();
  return model;
}

std::size_t VarietyModel::rank(int p) const {
  if (p < 0 || p > data_.dim) throw DimensionError("codimension " + std::to_string(p) + " out of range");
  return data_.ranks[static_cast<std::size_t>(p)];
}

const std::vector<std::string>& VarietyModel::labels(int p) const {
  rank(p);
  return data_.labels[static_cast<std::size_t>(p)];
}

const QVector& VarietyModel::product(int p, std::size_t i, int q, std::size_t j) const {
  if (p + q > data_.dim) throw DimensionError("codimension overflow in product");
  return data_.products.at({p, q})[i][j];
}

const std::vector<QVector>& VarietyModel::cone_generators(int p) const {
  auto it = data_.cones.find(p);
  if (it == data_.cones.end())
    throw CapabilityError(where(data_) + "no cone generators for codimension " + std::to_string(p));
  return it->second;
}

void VarietyModel::validate() const {
  const ModelData& d = data_;
  const int k = d.dim;
  if (k < 1) throw ModelDataError(where(d) + "dimension must be at least 1");
  if (d.ranks.size() != static_cast<std::size_t>(k) + 1) throw ModelDataError(where(d) + "expected k+1 ranks");
  if (d.ranks.front() != 1 || d.ranks.back() != 1) throw ModelDataError(where(d) + "r_0 and r_k must be 1");
  for (auto r : d.ranks)
    if (r == 0) throw ModelDataError(where(d) + "ranks must be positive");
  if (d.labels.size() != d.ranks.size()) throw ModelDataError(where(d) + "labels per codimension missing");
  for (int p = 0; p <= k; ++p)
    if (d.labels[static_cast<std::size_t>(p)].size() != d.ranks[static_cast<std::size_t>(p)])
      throw ModelDataError(where(d) + "label count differs from rank in codimension " + std::to_string(p));

  auto r = [&](int p) { return d.ranks[static_cast<std::size_t>(p)]; };
  for (int p = 0; p <= k; ++p) {
    for (int q = 0; p + q <= k; ++q) {
      auto it = d.products.find({p, q});
      if (it == d.products.end())
        throw ModelDataError(where(d) + "missing product table (" + std::to_string(p) + "," + std::to_string(q) + ")");
      const auto& table = it->second;
      if (table.size() != r(p)) throw ModelDataError(where(d) + "product table has wrong shape");
      for (const auto& row : table) {
        if (row.size() != r(q)) throw ModelDataError(where(d) + "product table has wrong shape");
        for (const auto& v : row)
          if (v.size() != r(p + q)) throw ModelDataError(where(d) + "product entry has wrong length");
      }
    }
  }
  // N^0 basis element is the unit.
  for (int q = 0; q <= k; ++q)
    for (std::size_t j = 0; j < r(q); ++j)
      if (d.products.at({0, q})[0][j] != unit_vector(r(q), j))
        throw ModelDataError(where(d) + "N^0 basis element is not the unit");
  // Commutativity.
  for (int p = 0; p <= k; ++p)
    for (int q = 0; p + q <= k; ++q)
      for (std::size_t i = 0; i < r(p); ++i)
        for (std::size_t j = 0; j < r(q); ++j)
          if (d.products.at({p, q})[i][j] != d.products.at({q, p})[j][i])
            throw ModelDataError(where(d) + "product is not commutative");
  // Associativity on all basis triples.
  auto mul = [&](int p, const QVector& u, int q, const QVector& v) {
    QVector out(r(p + q));
    const auto& table = d.products.at({p, q});
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0) continue;
        Rational s = u[i] * v[j];
        const auto& e = table[i][j];
        for (std::size_t l = 0; l < out.size(); ++l) out[l] += s * e[l];
      }
    }
    return out;
  };
  for (int p = 1; p <= k; ++p)
    for (int q = 1; p + q <= k; ++q)
      for (int s = 1; p + q + s <= k; ++s)
        for (std::size_t i = 0; i < r(p); ++i)
          for (std::size_t j = 0; j < r(q); ++j)
            for (std::size_t l = 0; l < r(s); ++l) {
              QVector left = mul(p + q, d.products.at({p, q})[i][j], s, unit_vector(r(s), l));
              QVector right = mul(p, unit_vector(r(p), i), q + s, d.products.at({q, s})[j][l]);
              if (left != right) throw ModelDataError(where(d) + "product is not associative");
            }

  if (d.degree.size() != 1) throw ModelDataError(where(d) + "degree functional must have length r_k = 1");
  if (d.ample.size() != r(1)) throw ModelDataError(where(d) + "ample class must lie in N^1");
  QVector top = d.ample;
  for (int p = 1; p < k; ++p) top = mul(p, top, 1, d.ample);
  if (top[0] * d.degree[0] <= 0) throw ModelDataError(where(d) + "ample class has non-positive top degree");
  for (const auto& [p, gens] : d.cones) {
    if (p < 0 || p > k) throw ModelDataError(where(d) + "cone codimension out of range");
    for (const auto& g : gens)
      if (g.size() != r(p)) throw ModelDataError(where(d) + "cone generator has wrong length");
  }

  if (!d.blowdown) return;
  const BlowdownData& b = *d.blowdown;
  if (!b.target) throw ModelDataError(where(d) + "blowdown without target");
  const VarietyModel& t = *b.target;
  if (t.dim() != k) throw ModelDataError(where(d) + "blowdown target has a different dimension");
  if (b.push.size() != static_cast<std::size_t>(k) + 1 || b.pull.size() != static_cast<std::size_t>(k) + 1)
    throw ModelDataError(where(d) + "blowdown needs push/pull matrices for p = 0..k");
  for (int p = 0; p <= k; ++p) {
    const auto& P = b.push[static_cast<std::size_t>(p)];
    const auto& U = b.pull[static_cast<std::size_t>(p)];
    if (P.rows() != t.rank(p) || P.cols() != r(p) || U.rows() != r(p) || U.cols() != t.rank(p))
      throw ModelDataError(where(d) + "push/pull matrix has wrong shape in codimension " + std::to_string(p));
    if (P * U != QMatrix::identity(t.rank(p)))
      throw ModelDataError(where(d) + "push . pull is not the identity in codimension " + std::to_string(p));
  }
  // Projection formula deg(push(u).v) = deg(u.pull(v)).
  for (int p = 0; p <= k; ++p) {
    const int q = k - p;
    for (std::size_t i = 0; i < r(p); ++i) {
      for (std::size_t j = 0; j < t.rank(q); ++j) {
        QVector pu = b.push[static_cast<std::size_t>(p)].column(i);
        Rational lhs;
        for (std::size_t a = 0; a < pu.size(); ++a)
          if (pu[a] != 0) lhs += pu[a] * t.product(p, a, q, j)[0] * t.degree_functional()[0];
        QVector uv = b.pull[static_cast<std::size_t>(q)].column(j);
        Rational rhs = mul(p, unit_vector(r(p), i), q, uv)[0] * d.degree[0];
        if (lhs != rhs) throw ModelDataError(where(d) + "projection formula fails");
      }
    }
  }
  if (b.exceptional.size() != r(1) || b.fiber.size() != r(k - 1))
    throw ModelDataError(where(d) + "exceptional/fiber classes have wrong length");
  if (k >= 2 && b.center.size() != t.rank(2)) throw ModelDataError(where(d) + "center class must lie in N^2(target)");
}

// ---- CycleClass -----------------------------------------------------------

namespace {

void require_same(const CycleClass& a, const CycleClass& b) {
  if (a.model != b.model) throw DimensionError("classes belong to different models");
  if (a.codim != b.codim) throw DimensionError("classes have different codimension");
}

}  // namespace

CycleClass& CycleClass::operator+=(const CycleClass& other) {
  require_same(*this, other);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
  return *this;
}

CycleClass& CycleClass::operator-=(const CycleClass& other) {
  require_same(*this, other);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

CycleClass& CycleClass::operator*=(const Rational& s) {
  for (auto& c : coords) c *= s;
  return *this;
}

bool CycleClass::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

std::string CycleClass::to_string() const {
  std::ostringstream os;
  const auto& labels = model->labels(codim);
  bool first = true;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    Rational mag = ::abs(coords[i]);
    os << (coords[i] < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1) os << mag.get_str() << '*';
    os << labels[i];
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

CycleClass make_class(const ModelPtr& model, int codim, QVector coords) {
  if (!model) throw ParameterError("null model");
  if (coords.size() != model->rank(codim))
    throw DimensionError("class in N^" + std::to_string(codim) + " of '" + model->name() + "' needs " +
                         std::to_string(model->rank(codim)) + " coordinates");
  return CycleClass{model, codim, std::move(coords)};
}

CycleClass basis_class(const ModelPtr& model, int codim, std::size_t index) {
  if (index >= model->rank(codim)) throw DimensionError("basis index out of range");
  return make_class(model, codim, unit_vector(model->rank(codim), index));
}

CycleClass zero_class(const ModelPtr& model, int codim) { return make_class(model, codim, QVector(model->rank(codim))); }

CycleClass unit_class(const ModelPtr& model) { return basis_class(model, 0, 0); }

CycleClass ample_class(const ModelPtr& model) { return make_class(model, 1, model->ample()); }

// ---- products and degrees -------------------------------------------------

CycleClass cup(const CycleClass& u, const CycleClass& v) {
  if (u.model != v.model) throw DimensionError("cup of classes from different models");
  const auto& m = *u.model;
  if (u.codim + v.codim > m.dim()) throw DimensionError("cup product exceeds the top codimension");
  QVector out(m.rank(u.codim + v.codim));
  for (std::size_t i = 0; i < u.coords.size(); ++i) {
    if (u.coords[i] == 0) continue;
    for (std::size_t j = 0; j < v.coords.size(); ++j) {
      if (v.coords[j] == 0) continue;
      Rational s = u.coords[i] * v.coords[j];
      const auto& e = m.product(u.codim, i, v.codim, j);
      for (std::size_t l = 0; l < out.size(); ++l)
        if (e[l] != 0) out[l] += s * e[l];
    }
  }
  return CycleClass{u.model, u.codim + v.codim, std::move(out)};
}

CycleClass power(const CycleClass& u, int n) {
  if (n < 0) throw ParameterError("negative power");
  CycleClass acc = unit_class(u.model);
  for (int i = 0; i < n; ++i) acc = cup(acc, u);
  return acc;
}

Rational degree0(const CycleClass& u) {
  if (u.codim != u.model->dim()) throw DimensionError("degree0 needs a class in N^k");
  return u.coords[0] * u.model->degree_functional()[0];
}

Rational degree(const CycleClass& u) {
  const int k = u.model->dim();
  return degree0(cup(u, power(ample_class(u.model), k - u.codim)));
}

// ---- blowdown -------------------------------------------------------------

namespace {

const BlowdownData& require_blowdown(const ModelPtr& model) {
  if (!model->blowdown()) throw CapabilityError("model '" + model->name() + "' has no blowdown data");
  return *model->blowdown();
}

}  // namespace

CycleClass blowdown_pushforward(const CycleClass& u) {
  const auto& b = require_blowdown(u.model);
  return CycleClass{b.target, u.codim, b.push[static_cast<std::size_t>(u.codim)].apply(u.coords)};
}

CycleClass blowup_pullback(const ModelPtr& source, const CycleClass& v) {
  const auto& b = require_blowdown(source);
  if (v.model != b.target) throw DimensionError("class does not live on the blowdown target");
  return CycleClass{source, v.codim, b.pull[static_cast<std::size_t>(v.codim)].apply(v.coords)};
}

Signature hodge_signature(const ModelPtr& model, const CycleClass& w) {
  const int k = model->dim();
  if (k < 2) throw DimensionError("Hodge form needs dimension at least 2");
  if (w.model != model || w.codim != 1) throw DimensionError("Hodge class must lie in N^1 of the model");
  if (degree0(power(w, k)) <= 0) throw NotAmpleError("deg(w^k) <= 0");
  const std::size_t n = model->rank(1);
  const CycleClass wk2 = power(w, k - 2);
  QMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    CycleClass ei_w = cup(basis_class(model, 1, i), wk2);
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = degree0(cup(ei_w, basis_class(model, 1, j)));
  }
  return symmetric_signature(gram);
}

namespace {

QMatrix generator_matrix(const std::vector<QVector>& gens, std::size_t rank) {
  QMatrix a(rank, gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t i = 0; i < rank; ++i) a(i, g) = gens[g][i];
  return a;
}

}  // namespace

bool cone_contains(const CycleClass& u) {
  const auto& gens = u.model->cone_generators(u.codim);
  if (gens.empty()) return u.is_zero();
  return lp_feasible(generator_matrix(gens, u.coords.size()), u.coords);
}

Rational norm1(const CycleClass& u) {
  const auto& gens = u.model->cone_generators(u.codim);
  const std::size_t rank = u.coords.size();
  const std::size_t g = gens.size();
  // Variables: a_1..a_g (v1 = sum a_i g_i), b_1..b_g (v2 = sum b_i g_i).
  QMatrix a(rank, 2 * g);
  QVector cost(2 * g);
  for (std::size_t j = 0; j < g; ++j) {
    Rational dg = degree(make_class(u.model, u.codim, gens[j]));
    cost[j] = dg;
    cost[g + j] = dg;
    for (std::size_t i = 0; i < rank; ++i) {
      a(i, j) = gens[j][i];
      a(i, g + j) = -gens[j][i];
    }
  }
  LpResult r = solve_lp(a, u.coords, cost);
  if (r.status != LpStatus::Optimal)
    throw ModelDataError("norm LP is " + std::string(r.status == LpStatus::Infeasible ? "infeasible" : "unbounded") +
                         " for " + u.to_string() + " in model '" + u.model->name() + "'");
  return r.value;
}

namespace {

Rational fiber_pairing(const CycleClass& alpha, const BlowdownData& b) {
  return degree0(cup(alpha, make_class(alpha.model, alpha.model->dim() - 1, b.fiber)));
}

}  // namespace

PsefDifference psef_difference(const CycleClass& alpha) {
  const auto& b = require_blowdown(alpha.model);
  if (alpha.codim != 1) throw DimensionError("psef_difference needs a class in N^1");
  if (alpha.model->dim() < 2) throw DimensionError("psef_difference needs dimension at least 2");
  CycleClass pa = blowdown_pushforward(alpha);
  PsefDifference out;
  out.difference = cup(pa, pa) - blowdown_pushforward(cup(alpha, alpha));
  Rational af = fiber_pairing(alpha, b);
  out.expected = make_class(b.target, 2, b.center) * (af * af);
  out.matches_expected = out.difference == out.expected;
  out.effective = cone_contains(out.difference);
  return out;
}

BlowupIdentities check_blowup_identities(const CycleClass& alpha) {
  const auto& b = require_blowdown(alpha.model);
  if (alpha.codim != 1) throw DimensionError("blowup identities need a class in N^1");
  const ModelPtr& src = alpha.model;
  const CycleClass e = make_class(src, 1, b.exceptional);
  const CycleClass w = make_class(b.target, 2, b.center);
  const Rational af = fiber_pairing(alpha, b);
  BlowupIdentities out;
  out.push_exceptional_square = blowdown_pushforward(cup(e, e)) == w * Rational(-1);
  out.pull_push = blowup_pullback(src, blowdown_pushforward(alpha)) == alpha + e * af;
  out.push_times_exceptional = blowdown_pushforward(cup(alpha, e)) == w * af;
  out.square_defect = psef_difference(alpha).matches_expected;
  return out;
}

}  // namespace degspec
