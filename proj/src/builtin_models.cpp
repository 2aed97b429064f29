#include <algorithm>
#include <functional>
#include <regex>

#include "degspec/errors.hpp"
#include "degspec/model.hpp"

namespace degspec {

namespace {

using ProductRule = std::function<QVector(int p, std::size_t i, int q, std::size_t j)>;

void fill_products(ModelData& d, const ProductRule& rule) {
  for (int p = 0; p <= d.dim; ++p) {
    for (int q = 0; p + q <= d.dim; ++q) {
      auto& table = d.products[{p, q}];
      table.assign(d.ranks[static_cast<std::size_t>(p)], std::vector<QVector>(d.ranks[static_cast<std::size_t>(q)]));
      for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = 0; j < table[i].size(); ++j) table[i][j] = rule(p, i, q, j);
    }
  }
}

QVector vec(std::initializer_list<long> xs) {
  QVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

QVector unit(std::size_t n, std::size_t i) {
  QVector v(n);
  v[i] = 1;
  return v;
}

// Every basis element of every codimension generates its own cone.
void coordinate_cones(ModelData& d) {
  for (int p = 0; p <= d.dim; ++p) {
    auto& gens = d.cones[p];
    for (std::size_t i = 0; i < d.ranks[static_cast<std::size_t>(p)]; ++i)
      gens.push_back(unit(d.ranks[static_cast<std::size_t>(p)], i));
  }
}

ModelPtr projective_space(int k) {
  ModelData d;
  d.name = "P(" + std::to_string(k) + ")";
  d.dim = k;
  d.ranks.assign(static_cast<std::size_t>(k) + 1, 1);
  for (int p = 0; p <= k; ++p)
    d.labels.push_back({p == 0 ? "1" : p == 1 ? "h" : "h^" + std::to_string(p)});
  fill_products(d, [](int, std::size_t, int, std::size_t) { return vec({1}); });
  d.degree = vec({1});
  d.ample = vec({1});
  coordinate_cones(d);
  return VarietyModel::create(std::move(d));
}

ModelPtr product_of_lines(int k) {
  ModelData d;
  d.name = "P1xP1xK(" + std::to_string(k) + ")";
  d.dim = k;
  std::vector<std::vector<std::vector<std::size_t>>> subsets;
  for (int p = 0; p <= k; ++p) {
    subsets.push_back(index_subsets(static_cast<std::size_t>(k), static_cast<std::size_t>(p)));
    d.ranks.push_back(subsets.back().size());
    std::vector<std::string> labels;
    for (const auto& s : subsets.back()) {
      std::string label;
      for (auto i : s) label += "h" + std::to_string(i + 1);
      labels.push_back(label.empty() ? "1" : label);
    }
    d.labels.push_back(labels);
  }
  // h_S . h_T = h_{S u T} when S and T are disjoint, else 0 (h_i^2 = 0).
  fill_products(d, [&](int p, std::size_t i, int q, std::size_t j) {
    const auto& s = subsets[static_cast<std::size_t>(p)][i];
    const auto& t = subsets[static_cast<std::size_t>(q)][j];
    QVector out(d.ranks[static_cast<std::size_t>(p + q)]);
    std::vector<std::size_t> merged;
    for (auto a : s) merged.push_back(a);
    for (auto b : t) {
      if (std::find(s.begin(), s.end(), b) != s.end()) return out;
      merged.push_back(b);
    }
    std::sort(merged.begin(), merged.end());
    const auto& target = subsets[static_cast<std::size_t>(p + q)];
    auto pos = std::find(target.begin(), target.end(), merged);
    out[static_cast<std::size_t>(pos - target.begin())] = 1;
    return out;
  });
  d.degree = vec({1});
  d.ample = QVector(static_cast<std::size_t>(k), Rational(1));
  coordinate_cones(d);
  return VarietyModel::create(std::move(d));
}

// Plane blown up at r general points: N^1 = <H, E_1..E_r>, H^2 = 1, E_i^2 = -1.
ModelPtr blown_up_plane(int r) {
  ModelData d;
  d.name = "BlP2(" + std::to_string(r) + ")";
  d.dim = 2;
  const std::size_t n1 = static_cast<std::size_t>(r) + 1;
  d.ranks = {1, n1, 1};
  std::vector<std::string> l1{"H"};
  for (int i = 1; i <= r; ++i) l1.push_back("E" + std::to_string(i));
  d.labels = {{"1"}, l1, {"pt"}};
  fill_products(d, [&](int p, std::size_t i, int q, std::size_t j) {
    if (p == 0) return unit(d.ranks[static_cast<std::size_t>(q)], j);
    if (q == 0) return unit(d.ranks[static_cast<std::size_t>(p)], i);
    if (i != j) return vec({0});
    return i == 0 ? vec({1}) : vec({-1});
  });
  d.degree = vec({1});
  d.ample = QVector(n1, Rational(-1));
  d.ample[0] = 3;
  d.cones[0] = {vec({1})};
  d.cones[2] = {vec({1})};
  auto& c1 = d.cones[1];
  if (r == 0) c1.push_back(unit(n1, 0));
  for (std::size_t i = 1; i < n1; ++i) c1.push_back(unit(n1, i));
  if (r == 1) c1.push_back(vec({1, -1}));
  for (std::size_t i = 1; i < n1; ++i) {
    for (std::size_t j = i + 1; j < n1; ++j) {
      QVector line(n1);
      line[0] = 1;
      line[i] = -1;
      line[j] = -1;
      c1.push_back(line);
    }
  }
  if (r > 0) {
    // Contract E_r onto BlP2(r-1); the center is a point (codimension 2 in a
    // surface) and the general fiber is E_r itself.
    BlowdownData b;
    b.target = blown_up_plane(r - 1);
    QMatrix push1(n1 - 1, n1), pull1(n1, n1 - 1);
    for (std::size_t i = 0; i + 1 < n1; ++i) {
      push1(i, i) = 1;
      pull1(i, i) = 1;
    }
    b.push = {QMatrix{{1}}, push1, QMatrix{{1}}};
    b.pull = {QMatrix{{1}}, pull1, QMatrix{{1}}};
    b.exceptional = unit(n1, n1 - 1);
    b.fiber = unit(n1, n1 - 1);
    b.center = vec({1});
    b.center_codim = 2;
    d.blowdown = std::move(b);
  }
  return VarietyModel::create(std::move(d));
}

// P^3 blown up at a point: N^1 = <H, E>, N^2 = <H^2, l> with l a line in E.
ModelPtr blown_up_space_at_point() {
  ModelData d;
  d.name = "BlP3pt";
  d.dim = 3;
  d.ranks = {1, 2, 2, 1};
  d.labels = {{"1"}, {"H", "E"}, {"H^2", "l"}, {"pt"}};
  fill_products(d, [&](int p, std::size_t i, int q, std::size_t j) {
    if (p == 0) return unit(d.ranks[static_cast<std::size_t>(q)], j);
    if (q == 0) return unit(d.ranks[static_cast<std::size_t>(p)], i);
    if (p == 1 && q == 1) {
      if (i == 0 && j == 0) return vec({1, 0});  // H.H = H^2
      if (i == 1 && j == 1) return vec({0, -1});  // E.E = -l
      return vec({0, 0});                         // H.E = 0
    }
    // N^1 x N^2 or N^2 x N^1 -> N^3
    std::size_t a = p == 1 ? i : j;  // divisor index
    std::size_t c = p == 1 ? j : i;  // curve index
    if (a == 0 && c == 0) return vec({1});   // H.H^2 = 1
    if (a == 1 && c == 1) return vec({-1});  // E.l = -1
    return vec({0});
  });
  d.degree = vec({1});
  d.ample = vec({2, -1});
  d.cones[0] = {vec({1})};
  d.cones[1] = {vec({0, 1}), vec({1, -1})};
  d.cones[2] = {vec({0, 1}), vec({1, -1})};
  d.cones[3] = {vec({1})};
  BlowdownData b;
  b.target = projective_space(3);
  b.push = {QMatrix{{1}}, QMatrix{{1, 0}}, QMatrix{{1, 0}}, QMatrix{{1}}};
  b.pull = {QMatrix{{1}}, QMatrix{{1}, {0}}, QMatrix{{1}, {0}}, QMatrix{{1}}};
  b.exceptional = vec({0, 1});
  b.fiber = vec({0, 1});
  b.center = vec({0});
  b.center_codim = 3;
  d.blowdown = std::move(b);
  return VarietyModel::create(std::move(d));
}

// P^3 blown up along a line: N^1 = <H, E>, N^2 = <H^2, F> with F a fiber of
// E -> line. H.E = F, E.E = -H^2 + 2F, H^3 = 1, H^2 E = 0, H E^2 = -1, E^3 = -2.
ModelPtr blown_up_space_along_line() {
  ModelData d;
  d.name = "BlP3line";
  d.dim = 3;
  d.ranks = {1, 2, 2, 1};
  d.labels = {{"1"}, {"H", "E"}, {"H^2", "F"}, {"pt"}};
  fill_products(d, [&](int p, std::size_t i, int q, std::size_t j) {
    if (p == 0) return unit(d.ranks[static_cast<std::size_t>(q)], j);
    if (q == 0) return unit(d.ranks[static_cast<std::size_t>(p)], i);
    if (p == 1 && q == 1) {
      if (i == 0 && j == 0) return vec({1, 0});
      if (i == 1 && j == 1) return vec({-1, 2});
      return vec({0, 1});
    }
    std::size_t a = p == 1 ? i : j;
    std::size_t c = p == 1 ? j : i;
    if (a == 0 && c == 0) return vec({1});   // H.H^2
    if (a == 1 && c == 1) return vec({-1});  // E.F
    return vec({0});
  });
  d.degree = vec({1});
  d.ample = vec({2, -1});
  d.cones[0] = {vec({1})};
  d.cones[1] = {vec({0, 1}), vec({1, -1})};
  d.cones[2] = {vec({0, 1}), vec({1, -1})};
  d.cones[3] = {vec({1})};
  BlowdownData b;
  b.target = projective_space(3);
  b.push = {QMatrix{{1}}, QMatrix{{1, 0}}, QMatrix{{1, 0}}, QMatrix{{1}}};
  b.pull = {QMatrix{{1}}, QMatrix{{1}, {0}}, QMatrix{{1}, {0}}, QMatrix{{1}}};
  b.exceptional = vec({0, 1});
  b.fiber = vec({0, 1});
  b.center = vec({1});
  b.center_codim = 2;
  d.blowdown = std::move(b);
  return VarietyModel::create(std::move(d));
}

}  // namespace

ModelPtr make_model(const std::string& spec) {
  static const std::regex pattern(R"(\s*(P|P1xP1xK|BlP2)\s*\(\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(spec, m, pattern)) {
    const std::string family = m[1];
    const int n = std::stoi(m[2]);
    if (family == "P") {
      if (n < 1 || n > 4) throw SpecError("P(k) needs 1 <= k <= 4");
      return projective_space(n);
    }
    if (family == "P1xP1xK") {
      if (n < 1 || n > 4) throw SpecError("P1xP1xK(k) needs 1 <= k <= 4");
      return product_of_lines(n);
    }
    if (n > 3) throw SpecError("BlP2(r) needs r <= 3");
    return blown_up_plane(n);
  }
  if (spec == "BlP3pt") return blown_up_space_at_point();
  if (spec == "BlP3line") return blown_up_space_along_line();
  throw SpecError("unknown model '" + spec + "'");
}

std::vector<std::string> builtin_model_specs() {
  return {"P(1)",   "P(2)",   "P(3)",   "P(4)",   "P1xP1xK(1)", "P1xP1xK(2)", "P1xP1xK(3)",
          "P1xP1xK(4)", "BlP2(0)", "BlP2(1)", "BlP2(2)", "BlP2(3)", "BlP3pt", "BlP3line"};
}

}  // namespace degspec
