#include "degspec/errors.hpp"
#include "degspec/json_io.hpp"

#include <cmath>

namespace degspec {

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j, const std::string& context) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      throw IngestionError(context + ": " + e.what());
    }
  }
  throw IngestionError(context + ": expected an integer or a \"num/den\" string, got " + j.dump());
}

Json vector_to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

QVector vector_from_json(const Json& j, const std::string& context) {
  if (!j.is_array()) throw IngestionError(context + ": expected an array");
  QVector v;
  v.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], context + "[" + std::to_string(i) + "]"));
  return v;
}

Json matrix_to_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

QMatrix matrix_from_json(const Json& j, const std::string& context) {
  if (!j.is_array() || j.empty()) throw IngestionError(context + ": expected a non-empty array of rows");
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(vector_from_json(j[i], context + "[" + std::to_string(i) + "]"));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw IngestionError(context + ": ragged matrix");
  return QMatrix::from_rows(rows);
}

Json decimal_to_json(double x) { return round_significant(x, 12); }

Json model_to_json(const VarietyModel& model) {
  const ModelData& d = model.data();
  Json j;
  j["name"] = d.name;
  j["dim"] = d.dim;
  j["ranks"] = d.ranks;
  j["labels"] = d.labels;
  Json mult = Json::object();
  for (const auto& [pq, table] : d.products) {
    if (pq.first == 0 || pq.second == 0) continue;
    Json t = Json::array();
    for (const auto& row : table) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(vector_to_json(v));
      t.push_back(r);
    }
    mult[std::to_string(pq.first) + "," + std::to_string(pq.second)] = t;
  }
  j["mult"] = mult;
  j["degree"] = vector_to_json(d.degree);
  j["ample"] = vector_to_json(d.ample);
  Json cones = Json::object();
  for (const auto& [p, gens] : d.cones) {
    Json g = Json::array();
    for (const auto& v : gens) g.push_back(vector_to_json(v));
    cones[std::to_string(p)] = g;
  }
  j["cones"] = cones;
  if (d.blowdown) {
    const auto& b = *d.blowdown;
    Json bd;
    bd["target"] = model_to_json(*b.target);
    Json push = Json::object(), pull = Json::object();
    for (std::size_t p = 0; p < b.push.size(); ++p) {
      push[std::to_string(p)] = matrix_to_json(b.push[p]);
      pull[std::to_string(p)] = matrix_to_json(b.pull[p]);
    }
    bd["push"] = push;
    bd["pull"] = pull;
    bd["exceptional"] = vector_to_json(b.exceptional);
    bd["fiber"] = vector_to_json(b.fiber);
    bd["center"] = vector_to_json(b.center);
    bd["center_codim"] = b.center_codim;
    j["blowdown"] = bd;
  }
  return j;
}

namespace {

const Json& field(const Json& j, const char* key, const std::string& context) {
  if (!j.is_object() || !j.contains(key)) throw IngestionError(context + ": missing field '" + key + "'");
  return j.at(key);
}

int parse_index(const std::string& key, const std::string& context) {
  try {
    std::size_t used = 0;
    int v = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw IngestionError(context + ": bad codimension key '" + key + "'");
  }
}

}  // namespace

ModelPtr model_from_json(const Json& j) {
  const std::string ctx = "model";
  ModelData d;
  try {
    d.name = field(j, "name", ctx).get<std::string>();
    d.dim = field(j, "dim", ctx).get<int>();
    d.ranks = field(j, "ranks", ctx).get<std::vector<std::size_t>>();
    if (j.contains("labels")) {
      d.labels = j.at("labels").get<std::vector<std::vector<std::string>>>();
    } else {
      for (std::size_t p = 0; p < d.ranks.size(); ++p) {
        std::vector<std::string> l;
        for (std::size_t i = 0; i < d.ranks[p]; ++i) l.push_back("e" + std::to_string(p) + "_" + std::to_string(i));
        d.labels.push_back(l);
      }
    }
  } catch (const Json::exception& e) {
    throw IngestionError(ctx + ": " + e.what());
  }
  if (d.dim < 1 || d.ranks.size() != static_cast<std::size_t>(d.dim) + 1)
    throw IngestionError(ctx + ": ranks must list r_0..r_k");
  for (const auto& [key, table] : field(j, "mult", ctx).items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw IngestionError(ctx + ": mult key '" + key + "' must be \"p,q\"");
    int p = parse_index(key.substr(0, comma), ctx);
    int q = parse_index(key.substr(comma + 1), ctx);
    if (p < 0 || q < 0 || p + q > d.dim) throw IngestionError(ctx + ": mult key '" + key + "' out of range");
    std::vector<std::vector<QVector>> t;
    if (!table.is_array()) throw IngestionError(ctx + ": mult table '" + key + "' must be an array");
    for (std::size_t i = 0; i < table.size(); ++i) {
      std::vector<QVector> row;
      if (!table[i].is_array()) throw IngestionError(ctx + ": mult table '" + key + "' must be nested arrays");
      for (std::size_t jj = 0; jj < table[i].size(); ++jj)
        row.push_back(vector_from_json(table[i][jj], ctx + ".mult[" + key + "][" + std::to_string(i) + "][" + std::to_string(jj) + "]"));
      t.push_back(std::move(row));
    }
    d.products[{p, q}] = std::move(t);
  }
  // Unit tables for N^0 unless given.
  for (int q = 0; q <= d.dim; ++q) {
    const std::size_t rq = d.ranks[static_cast<std::size_t>(q)];
    std::vector<std::vector<QVector>> left(1, std::vector<QVector>(rq)), right(rq, std::vector<QVector>(1));
    for (std::size_t i = 0; i < rq; ++i) {
      QVector e(rq);
      e[i] = 1;
      left[0][i] = e;
      right[i][0] = e;
    }
    d.products.try_emplace({0, q}, left);
    d.products.try_emplace({q, 0}, right);
  }
  d.degree = vector_from_json(field(j, "degree", ctx), ctx + ".degree");
  d.ample = vector_from_json(field(j, "ample", ctx), ctx + ".ample");
  if (j.contains("cones")) {
    for (const auto& [key, gens] : j.at("cones").items()) {
      int p = parse_index(key, ctx);
      auto& list = d.cones[p];
      if (!gens.is_array()) throw IngestionError(ctx + ": cone list must be an array");
      for (std::size_t i = 0; i < gens.size(); ++i)
        list.push_back(vector_from_json(gens[i], ctx + ".cones[" + key + "][" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("blowdown")) {
    const Json& bj = j.at("blowdown");
    const std::string bctx = ctx + ".blowdown";
    BlowdownData b;
    b.target = resolve_model(field(bj, "target", bctx));
    b.push.resize(static_cast<std::size_t>(d.dim) + 1);
    b.pull.resize(static_cast<std::size_t>(d.dim) + 1);
    for (int p = 0; p <= d.dim; ++p) {
      const std::string key = std::to_string(p);
      b.push[static_cast<std::size_t>(p)] = matrix_from_json(field(field(bj, "push", bctx), key.c_str(), bctx + ".push"), bctx + ".push." + key);
      b.pull[static_cast<std::size_t>(p)] = matrix_from_json(field(field(bj, "pull", bctx), key.c_str(), bctx + ".pull"), bctx + ".pull." + key);
    }
    b.exceptional = vector_from_json(field(bj, "exceptional", bctx), bctx + ".exceptional");
    b.fiber = vector_from_json(field(bj, "fiber", bctx), bctx + ".fiber");
    b.center = vector_from_json(field(bj, "center", bctx), bctx + ".center");
    b.center_codim = bj.value("center_codim", 2);
    d.blowdown = std::move(b);
  }
  return VarietyModel::create(std::move(d));
}

ModelPtr resolve_model(const Json& j) {
  if (j.is_string()) return make_model(j.get<std::string>());
  if (j.is_object()) return model_from_json(j);
  throw IngestionError("model must be a built-in name or a model document");
}

Json class_to_json(const CycleClass& u) {
  Json j;
  j["model"] = u.model->name();
  j["codim"] = u.codim;
  j["coords"] = vector_to_json(u.coords);
  j["text"] = u.to_string();
  return j;
}

}  // namespace degspec
