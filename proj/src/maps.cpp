#include "degspec/maps.hpp"

#include <algorithm>
#include <sstream>

#include "degspec/errors.hpp"

namespace degspec {

namespace {

void require_integer_square(const QMatrix& a) {
  if (!a.is_square() || a.rows() == 0) throw DimensionError("exponent matrix must be square and nonempty");
  for (const auto& x : a.entries())
    if (!is_integer(x)) throw ParameterError("exponent matrix must have integer entries");
}

void require_dominant(const QMatrix& a) {
  if (determinant(a) == 0) throw NonDominantError("exponent matrix is singular; the monomial map is not dominant");
}

}  // namespace

MonomialMap MonomialMap::create(QMatrix a, MonomialVariety variety) {
  require_integer_square(a);
  require_dominant(a);
  return MonomialMap{std::move(a), variety};
}

QMatrix monomial_action_p1k(const QMatrix& a, int p) {
  require_integer_square(a);
  require_dominant(a);
  const int k = static_cast<int>(a.rows());
  if (p == 0) return QMatrix::identity(1);
  if (p == k) {
    QMatrix m(1, 1);
    m(0, 0) = ::abs(determinant(a));
    return m;
  }
  if (p == 1) return a.abs().transpose();
  if (p < 0 || p > k) throw DimensionError("codimension out of range for the monomial action");
  throw CapabilityError("monomial actions are only computed for p = 1 and p = k");
}

QMatrix monomial_iterate_action(const QMatrix& a, unsigned n, int p) {
  if (n == 0) throw ParameterError("iterate index must be at least 1");
  require_integer_square(a);
  require_dominant(a);
  return monomial_action_p1k(a.pow(n), p);
}

Integer monomial_degree_pk(const QMatrix& a) {
  require_integer_square(a);
  require_dominant(a);
  const std::size_t k = a.rows();
  // Exponent vectors of the affine components after clearing X_0.
  std::vector<std::vector<Integer>> b(k + 1, std::vector<Integer>(k + 1, 0));
  for (std::size_t i = 0; i < k; ++i) {
    Integer row_sum = 0;
    for (std::size_t j = 0; j < k; ++j) {
      b[i + 1][j + 1] = a(i, j).get_num();
      row_sum += a(i, j).get_num();
    }
    b[i + 1][0] = -row_sum;
  }
  std::vector<Integer> shift(k + 1, 0);
  for (std::size_t j = 0; j <= k; ++j)
    for (const auto& bi : b) shift[j] = std::max(shift[j], Integer(-bi[j]));
  Integer degree = 0;
  for (std::size_t j = 0; j <= k; ++j) {
    Integer lowest = b[0][j] + shift[j];
    for (const auto& bi : b) lowest = std::min(lowest, Integer(bi[j] + shift[j]));
    degree += shift[j] - lowest;
  }
  return degree;
}

PolyMap reduce_components(std::vector<MPoly> raw) {
  if (raw.size() < 2) throw DimensionError("a self-map of P^k needs k+1 >= 2 components");
  const std::size_t nv = raw.size();
  int d = -1;
  for (const auto& c : raw) {
    if (c.nvars() != nv) throw DimensionError("components must use k+1 variables");
    if (c.is_zero()) throw NonDominantError("a component vanishes identically; the map is not dominant");
    if (!c.is_homogeneous()) throw ParameterError("components must be homogeneous");
    if (d >= 0 && c.total_degree() != d) throw ParameterError("components must share one degree");
    d = c.total_degree();
  }

  Exponent mono = monomial_content(raw.front());
  for (const auto& c : raw) {
    Exponent m = monomial_content(c);
    for (std::size_t i = 0; i < nv; ++i) mono[i] = std::min(mono[i], m[i]);
  }
  if (std::any_of(mono.begin(), mono.end(), [](int x) { return x > 0; }))
    for (auto& c : raw) c = divide_by_monomial(c, mono);

  // Generic iterates almost always have coprime components; the certificate
  // settles that without running remainder sequences on high degrees.
  MPoly g = MPoly::constant(nv, 1);
  if (!coprime_certificate(raw)) {
    g = MPoly(nv);
    for (const auto& c : raw) {
      g = gcd(g, c);
      if (g.total_degree() == 0) break;
    }
  }
  if (g.total_degree() > 0)
    for (auto& c : raw) {
      auto q = exact_divide(c, g);
      if (!q) throw Error("internal: computed gcd fails to divide a component");
      c = *std::move(q);
    }

  Integer content = 0;
  for (const auto& c : raw) {
    Integer ci = integer_content(c);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ci.get_mpz_t());
  }
  if (raw.front().leading_term().second < 0) content = -content;
  if (content != 1)
    for (auto& c : raw) {
      MPoly scaled(nv);
      for (const auto& [e, coef] : c.terms()) scaled.add_term(e, coef / content);
      c = std::move(scaled);
    }

  const int degree = raw.front().total_degree();
  if (degree < 1) throw NonDominantError("map reduces to a constant");
  PolyMap out = PolyMap::identity(nv - 1);
  out.components_ = std::move(raw);
  out.degree_ = degree;
  return out;
}

PolyMap PolyMap::create(std::vector<MPoly> components) { return reduce_components(std::move(components)); }

PolyMap PolyMap::identity(std::size_t k) {
  PolyMap f;
  for (std::size_t i = 0; i <= k; ++i) f.components_.push_back(MPoly::variable(k + 1, i));
  f.degree_ = 1;
  return f;
}

PolyMap PolyMap::linear(const QMatrix& l) {
  if (!l.is_square() || l.rows() < 2) throw DimensionError("linear map needs a square matrix of size >= 2");
  std::vector<MPoly> comps;
  for (std::size_t i = 0; i < l.rows(); ++i) {
    MPoly c(l.rows());
    for (std::size_t j = 0; j < l.cols(); ++j) {
      if (!is_integer(l(i, j))) throw ParameterError("linear map needs integer entries");
      c += MPoly::variable(l.rows(), j) * Integer(l(i, j).get_num());
    }
    comps.push_back(std::move(c));
  }
  return create(std::move(comps));
}

PolyMap PolyMap::cremona(std::size_t k) {
  std::vector<MPoly> comps;
  for (std::size_t i = 0; i <= k; ++i) {
    Exponent e(k + 1, 1);
    e[i] = 0;
    comps.push_back(MPoly::term(e, 1));
  }
  return create(std::move(comps));
}

QMatrix PolyMap::linear_matrix() const {
  if (degree_ != 1) throw ParameterError("map is not linear");
  const std::size_t n = components_.size();
  QMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [e, c] : components_[i].terms())
      for (std::size_t j = 0; j < n; ++j)
        if (e[j] == 1) l(i, j) = c;
  return l;
}

std::string PolyMap::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < components_.size(); ++i) os << (i ? " : " : "") << components_[i].to_string();
  os << ')';
  return os.str();
}

PolyMap compose_polymap(const PolyMap& f, const PolyMap& g) {
  if (f.dim() != g.dim()) throw DimensionError("cannot compose maps of different dimensions");
  std::vector<MPoly> raw;
  raw.reserve(f.components().size());
  for (const auto& c : f.components()) raw.push_back(c.substitute(g.components()));
  return reduce_components(std::move(raw));
}

int polymap_degree(const PolyMap& f) { return f.degree(); }

const QMatrix& MatrixAction::at(int p) const {
  auto it = matrices.find(p);
  if (it == matrices.end()) throw CapabilityError("no matrix given for codimension " + std::to_string(p));
  return it->second;
}

CycleClass MatrixAction::apply(const CycleClass& u) const {
  if (u.model != model) throw DimensionError("class belongs to a different model");
  return make_class(model, u.codim, at(u.codim).apply(u.coords));
}

MatrixAction make_matrix_action(const ModelPtr& model, std::map<int, QMatrix> matrices) {
  if (!model) throw IngestionError("matrix action needs a model");
  for (const auto& [p, m] : matrices) {
    if (p < 0 || p > model->dim())
      throw DimensionError("matrix given for codimension " + std::to_string(p) + " outside 0.." +
                           std::to_string(model->dim()));
    const std::size_t r = model->rank(p);
    if (m.rows() != r || m.cols() != r)
      throw DimensionError("M_" + std::to_string(p) + " is " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + " but N^" + std::to_string(p) + " of '" + model->name() +
                           "' has rank " + std::to_string(r));
  }
  MatrixAction out;
  out.model = model;
  out.matrices = std::move(matrices);
  return out;
}

MatrixAction load_matrix_action(const ModelPtr& fallback, const Json& doc) {
  if (!doc.is_object()) throw IngestionError("matrix action must be a JSON object");
  ModelPtr model = doc.contains("model") ? resolve_model(doc.at("model")) : fallback;
  if (!model) throw IngestionError("matrix action has no model");
  if (!doc.contains("M") || !doc.at("M").is_object()) throw IngestionError("matrix action needs an object \"M\"");
  std::map<int, QMatrix> mats;
  for (const auto& [key, value] : doc.at("M").items()) {
    int p = 0;
    try {
      p = std::stoi(key);
    } catch (const std::exception&) {
      throw IngestionError("matrix action key '" + key + "' is not a codimension");
    }
    mats.emplace(p, matrix_from_json(value, "M." + key));
  }
  MatrixAction out = make_matrix_action(model, std::move(mats));
  if (doc.contains("asserted_1_stable")) {
    if (!doc.at("asserted_1_stable").is_boolean()) throw IngestionError("asserted_1_stable must be a boolean");
    out.asserted_1_stable = doc.at("asserted_1_stable").get<bool>();
  }
  if (doc.contains("asserted_cone_preserving")) {
    const auto& flags = doc.at("asserted_cone_preserving");
    if (!flags.is_object()) throw IngestionError("asserted_cone_preserving must be an object");
    for (const auto& [key, value] : flags.items()) {
      if (!value.is_boolean()) throw IngestionError("asserted_cone_preserving values must be booleans");
      out.asserted_cone_preserving[std::stoi(key)] = value.get<bool>();
    }
  }
  return out;
}

MatrixAction monomial_matrix_action(const QMatrix& a, unsigned n) {
  require_integer_square(a);
  require_dominant(a);
  const int k = static_cast<int>(a.rows());
  ModelPtr model = make_model("P1xP1xK(" + std::to_string(k) + ")");
  std::map<int, QMatrix> mats;
  mats.emplace(0, QMatrix::identity(1));
  mats.emplace(1, monomial_iterate_action(a, n, 1));
  mats.emplace(k, monomial_iterate_action(a, n, k));
  return make_matrix_action(model, std::move(mats));
}

namespace {

MPoly components_term_list(const Json& terms, std::size_t nvars, const std::string& ctx) {
  if (!terms.is_array()) throw IngestionError(ctx + ": expected an array of terms");
  MPoly p(nvars);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& term = terms[t];
    const std::string tctx = ctx + "[" + std::to_string(t) + "]";
    if (!term.is_object() || !term.contains("exps") || !term.contains("coef"))
      throw IngestionError(tctx + ": a term needs \"exps\" and \"coef\"");
    const auto& exps = term.at("exps");
    if (!exps.is_array() || exps.size() != nvars)
      throw IngestionError(tctx + ": \"exps\" must list " + std::to_string(nvars) + " exponents");
    Exponent e;
    for (const auto& x : exps) {
      if (!x.is_number_integer() || x.get<long>() < 0) throw IngestionError(tctx + ": exponents must be nonnegative integers");
      e.push_back(x.get<int>());
    }
    Rational c = rational_from_json(term.at("coef"), tctx + ".coef");
    if (!is_integer(c)) throw IngestionError(tctx + ": coefficients must be integers");
    p.add_term(e, c.get_num());
  }
  return p;
}

Json builtin_name_or_document(const VarietyModel& model) {
  const auto specs = builtin_model_specs();
  if (std::find(specs.begin(), specs.end(), model.name()) != specs.end()) return model.name();
  return model_to_json(model);
}

}  // namespace

MapDescriptor map_from_json(const Json& doc, const ModelPtr& fallback_model) {
  if (!doc.is_object() || !doc.contains("type") || !doc.at("type").is_string())
    throw IngestionError("map must be an object with a string \"type\"");
  const std::string type = doc.at("type").get<std::string>();
  if (type == "monomial") {
    if (!doc.contains("A")) throw IngestionError("monomial map needs \"A\"");
    MonomialVariety variety = MonomialVariety::P1k;
    if (doc.contains("variety")) {
      const std::string v = doc.at("variety").get<std::string>();
      if (v == "Pk") variety = MonomialVariety::Pk;
      else if (v != "P1k") throw IngestionError("monomial variety must be \"P1k\" or \"Pk\"");
    }
    QMatrix a = matrix_from_json(doc.at("A"), "A");
    try {
      return MonomialMap::create(std::move(a), variety);
    } catch (const ParameterError& e) {
      throw IngestionError(std::string("A: ") + e.what());
    } catch (const DimensionError& e) {
      throw IngestionError(std::string("A: ") + e.what());
    }
  }
  if (type == "polynomial") {
    if (!doc.contains("vars") || !doc.at("vars").is_number_integer())
      throw IngestionError("polynomial map needs an integer \"vars\"");
    const long nv = doc.at("vars").get<long>();
    if (nv < 2) throw IngestionError("polynomial map needs vars >= 2");
    const auto& comps = doc.contains("components") ? doc.at("components") : Json();
    if (!comps.is_array() || comps.size() != static_cast<std::size_t>(nv))
      throw IngestionError("polynomial map needs \"components\": an array of " + std::to_string(nv) + " term lists");
    std::vector<MPoly> raw;
    for (std::size_t i = 0; i < comps.size(); ++i)
      raw.push_back(components_term_list(comps[i], static_cast<std::size_t>(nv), "components[" + std::to_string(i) + "]"));
    try {
      return PolyMap::create(std::move(raw));
    } catch (const ParameterError& e) {
      throw IngestionError(std::string("components: ") + e.what());
    }
  }
  if (type == "matrix_action") return load_matrix_action(fallback_model, doc);
  throw IngestionError("unknown map type '" + type + "'");
}

Json map_to_json(const MapDescriptor& map) {
  return std::visit(
      [](const auto& m) -> Json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, MonomialMap>) {
          return {{"type", "monomial"},
                  {"A", matrix_to_json(m.exponents)},
                  {"variety", m.variety == MonomialVariety::P1k ? "P1k" : "Pk"}};
        } else if constexpr (std::is_same_v<T, PolyMap>) {
          Json comps = Json::array();
          for (const auto& c : m.components()) {
            Json terms = Json::array();
            for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it)
              terms.push_back({{"exps", it->first}, {"coef", rational_to_json(Rational(it->second))}});
            comps.push_back(std::move(terms));
          }
          return {{"type", "polynomial"}, {"vars", m.components().size()}, {"components", std::move(comps)}};
        } else {
          Json mats = Json::object();
          for (const auto& [p, mat] : m.matrices) mats[std::to_string(p)] = matrix_to_json(mat);
          Json cone = Json::object();
          for (const auto& [p, flag] : m.asserted_cone_preserving) cone[std::to_string(p)] = flag;
          return {{"type", "matrix_action"},
                  {"model", builtin_name_or_document(*m.model)},
                  {"M", std::move(mats)},
                  {"asserted_1_stable", m.asserted_1_stable},
                  {"asserted_cone_preserving", std::move(cone)}};
        }
      },
      map);
}

std::string map_kind(const MapDescriptor& map) {
  switch (map.index()) {
    case 0: return "monomial";
    case 1: return "polynomial";
    default: return "matrix_action";
  }
}

}  // namespace degspec
