#include <random>

#include "doctest.h"

#include "degspec/errors.hpp"
#include "degspec/json_io.hpp"
#include "degspec/model.hpp"

using namespace degspec;

namespace {

CycleClass cls(const ModelPtr& m, int p, std::initializer_list<long> xs) {
  QVector v;
  for (long x : xs) v.emplace_back(x);
  return make_class(m, p, v);
}

std::vector<ModelPtr> all_builtins() {
  std::vector<ModelPtr> out;
  for (const auto& s : builtin_model_specs()) out.push_back(make_model(s));
  return out;
}

}  // namespace

TEST_CASE("make_model examples and errors") {
  auto p2 = make_model("P(2)");
  CHECK(p2->ranks() == std::vector<std::size_t>{1, 1, 1});
  CHECK(degree0(power(cls(p2, 1, {1}), 2)) == 1);

  auto line = make_model("BlP3line");
  auto H = cls(line, 1, {1, 0}), E = cls(line, 1, {0, 1});
  auto F = cls(line, 2, {0, 1}), H2 = cls(line, 2, {1, 0});
  CHECK(degree0(power(H, 3)) == 1);
  CHECK(degree0(cup(cup(H, H), E)) == 0);
  CHECK(degree0(cup(H, cup(E, E))) == -1);
  CHECK(degree0(power(E, 3)) == -2);
  CHECK(cup(H, E) == F);
  CHECK(cup(E, E) == H2 * Rational(-1) + F * Rational(2));

  auto pt = make_model("BlP3pt");
  auto Ep = cls(pt, 1, {0, 1});
  CHECK(cup(Ep, Ep) == cls(pt, 2, {0, -1}));
  CHECK(blowdown_pushforward(cup(Ep, Ep)).is_zero());

  CHECK_THROWS_AS(make_model("P(5)"), SpecError);
  CHECK_THROWS_AS(make_model("BlP2(4)"), SpecError);
  CHECK_THROWS_AS(make_model("Grassmannian"), SpecError);
  CHECK_THROWS_AS(make_model("P1xP1xK(0)"), SpecError);
}

TEST_CASE("cup examples") {
  auto q = make_model("P1xP1xK(2)");
  CHECK(cup(cls(q, 1, {2, 1}), cls(q, 1, {1, 1})) == cls(q, 2, {3}));
  auto line = make_model("BlP3line");
  auto E = cls(line, 1, {0, 1});
  CHECK(cup(E, E) == cls(line, 2, {-1, 2}));
  for (const auto& m : all_builtins())
    for (int p = 0; p <= m->dim(); ++p)
      for (std::size_t i = 0; i < m->rank(p); ++i)
        CHECK(cup(unit_class(m), basis_class(m, p, i)) == basis_class(m, p, i));
  CHECK_THROWS_AS(cup(cls(q, 2, {1}), cls(q, 1, {1, 0})), DimensionError);
  CHECK_THROWS_AS(cup(cls(q, 1, {1, 0}), cls(line, 1, {1, 0})), DimensionError);
}

TEST_CASE("degree0 examples") {
  auto p2 = make_model("P(2)");
  CHECK(degree0(cls(p2, 2, {1})) == 1);
  auto line = make_model("BlP3line");
  CHECK(degree0(cup(cls(line, 2, {-1, 2}), cls(line, 1, {1, 0}))) == -1);
  auto q = make_model("P1xP1xK(2)");
  CHECK(degree0(cls(q, 2, {3})) == 3);
  CHECK_THROWS_AS(degree0(cls(q, 1, {1, 1})), DimensionError);
}

TEST_CASE("blowdown push and pull") {
  auto line = make_model("BlP3line");
  auto p3 = line->blowdown()->target;
  auto E = cls(line, 1, {0, 1});
  CHECK(blowdown_pushforward(cup(E, E)) == cls(p3, 2, {-1}));
  for (long c = -3; c <= 3; ++c) {
    for (long d = -3; d <= 3; ++d) {
      auto alpha = cls(line, 1, {c, d});
      auto F = cls(line, 2, {0, 1});
      Rational af = degree0(cup(alpha, F));
      CHECK(af == -d);
      CHECK(blowup_pullback(line, blowdown_pushforward(alpha)) == alpha + E * af);
      CHECK(blowup_pullback(line, blowdown_pushforward(alpha)) == cls(line, 1, {c, 0}));
    }
  }
  for (int p = 0; p <= 3; ++p)
    for (std::size_t i = 0; i < p3->rank(p); ++i)
      CHECK(blowdown_pushforward(blowup_pullback(line, basis_class(p3, p, i))) == basis_class(p3, p, i));
  CHECK_THROWS_AS(blowdown_pushforward(cls(p3, 1, {1})), CapabilityError);
}

TEST_CASE("projection formula on every blowup model") {
  for (const auto& m : all_builtins()) {
    if (!m->blowdown()) continue;
    auto t = m->blowdown()->target;
    const int k = m->dim();
    for (int p = 0; p <= k; ++p)
      for (std::size_t i = 0; i < m->rank(p); ++i)
        for (std::size_t j = 0; j < t->rank(k - p); ++j) {
          auto u = basis_class(m, p, i);
          auto v = basis_class(t, k - p, j);
          CHECK(degree0(cup(blowdown_pushforward(u), v)) == degree0(cup(u, blowup_pullback(m, v))));
        }
  }
}

TEST_CASE("commutativity and associativity on basis triples") {
  for (const auto& m : all_builtins()) {
    const int k = m->dim();
    for (int p = 0; p <= k; ++p)
      for (int q = 0; p + q <= k; ++q)
        for (std::size_t i = 0; i < m->rank(p); ++i)
          for (std::size_t j = 0; j < m->rank(q); ++j) {
            auto a = basis_class(m, p, i), b = basis_class(m, q, j);
            CHECK(cup(a, b) == cup(b, a));
            for (int s = 0; p + q + s <= k; ++s)
              for (std::size_t l = 0; l < m->rank(s); ++l) {
                auto c = basis_class(m, s, l);
                CHECK(cup(cup(a, b), c) == cup(a, cup(b, c)));
              }
          }
  }
}

TEST_CASE("hodge_signature examples") {
  auto p2 = make_model("P(2)");
  CHECK(hodge_signature(p2, cls(p2, 1, {1})) == Signature{1, 0, 0});
  auto bl3 = make_model("BlP2(3)");
  CHECK(hodge_signature(bl3, cls(bl3, 1, {3, -1, -1, -1})) == Signature{1, 3, 0});
  auto line = make_model("BlP3line");
  CHECK(hodge_signature(line, cls(line, 1, {1, 0})) == Signature{1, 1, 0});
  CHECK_THROWS_AS(hodge_signature(line, cls(line, 1, {0, 1})), NotAmpleError);
  CHECK_THROWS_AS(hodge_signature(make_model("P(1)"), cls(make_model("P(1)"), 1, {1})), DimensionError);
}

TEST_CASE("Grothendieck-Hodge signature (1, rho-1, 0) on every built-in of dimension >= 2") {
  for (const auto& m : all_builtins()) {
    if (m->dim() < 2) continue;
    int rho = static_cast<int>(m->rank(1));
    const Signature expected{1, rho - 1, 0};
    CHECK_MESSAGE(hodge_signature(m, ample_class(m)) == expected, m->name());
  }
}

TEST_CASE("symmetric signature handles zero diagonals") {
  CHECK(symmetric_signature(QMatrix{{0, 1}, {1, 0}}) == Signature{1, 1, 0});
  CHECK(symmetric_signature(QMatrix{{0, 0}, {0, 0}}) == Signature{0, 0, 2});
  CHECK(symmetric_signature(QMatrix{{1, 2}, {2, 4}}) == Signature{1, 0, 1});
  CHECK_THROWS_AS(symmetric_signature(QMatrix{{1, 2}, {3, 4}}), ParameterError);
}

TEST_CASE("cone_contains examples") {
  auto p2 = make_model("P(2)");
  CHECK(cone_contains(cls(p2, 1, {1})));
  CHECK_FALSE(cone_contains(cls(p2, 1, {-1})));
  auto bl1 = make_model("BlP2(1)");
  CHECK_FALSE(cone_contains(cls(bl1, 1, {1, -2})));
  CHECK(cone_contains(cls(bl1, 1, {1, -1})));
  CHECK(cone_contains(cls(bl1, 1, {3, -1})));
  auto q = make_model("P1xP1xK(2)");
  CHECK(cone_contains(cls(q, 2, {2})));
  CHECK_FALSE(cone_contains(cls(q, 1, {1, -1})));
}

TEST_CASE("cone_contains without generators is a capability error") {
  ModelData d = make_model("P(2)")->data();
  d.cones.erase(1);
  auto m = VarietyModel::create(d);
  CHECK_THROWS_AS(cone_contains(cls(m, 1, {1})), CapabilityError);
}

TEST_CASE("norm1 examples") {
  auto bl1 = make_model("BlP2(1)");
  CHECK(norm1(cls(bl1, 1, {1, -1})) == 2);
  CHECK(norm1(cls(bl1, 1, {0, 0})) == 0);
  CHECK(norm1(cls(bl1, 1, {0, -1})) == 1);
}

TEST_CASE("norm1 equals degree on the effective cone") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coef(0, 4);
  for (const auto& m : all_builtins()) {
    for (int p = 0; p <= m->dim(); ++p) {
      const auto& gens = m->cone_generators(p);
      for (int trial = 0; trial < 5; ++trial) {
        CycleClass u = zero_class(m, p);
        for (const auto& g : gens) u += make_class(m, p, g) * Rational(coef(rng));
        REQUIRE(cone_contains(u));
        CHECK(norm1(u) == degree(u));
        CHECK(norm1(u * Rational(-1)) == degree(u));
      }
    }
  }
}

TEST_CASE("cone members have nonnegative degree") {
  for (const auto& m : all_builtins())
    for (int p = 0; p <= m->dim(); ++p)
      for (const auto& a : m->cone_generators(p)) CHECK(degree(make_class(m, p, a)) >= 0);
}

TEST_CASE("products of cone members are nonnegative where every effective class is nef") {
  // On blowups E.E < 0, so the statement only holds for homogeneous models.
  for (const std::string spec : {"P(2)", "P(3)", "P(4)", "P1xP1xK(2)", "P1xP1xK(3)", "P1xP1xK(4)"}) {
    auto m = make_model(spec);
    const int k = m->dim();
    for (int p = 0; p <= k; ++p)
      for (const auto& a : m->cone_generators(p))
        for (const auto& b : m->cone_generators(k - p))
          CHECK(degree0(cup(make_class(m, p, a), make_class(m, k - p, b))) >= 0);
  }
  auto bl = make_model("BlP2(1)");
  auto e = basis_class(bl, 1, 1);
  CHECK(cone_contains(e));
  CHECK(degree0(cup(e, e)) == -1);
}

TEST_CASE("psef_difference examples") {
  auto line = make_model("BlP3line");
  auto p3 = line->blowdown()->target;
  for (long c = -2; c <= 2; ++c)
    for (long d = -3; d <= 3; ++d) {
      auto r = psef_difference(cls(line, 1, {c, d}));
      CHECK(r.difference == cls(p3, 2, {d * d}));
      CHECK(r.matches_expected);
      CHECK(r.effective);
    }
  auto h = psef_difference(cls(line, 1, {1, 0}));
  CHECK(h.difference.is_zero());
  CHECK(h.effective);
  auto e = psef_difference(cls(line, 1, {0, 1}));
  CHECK(e.difference == cls(p3, 2, {1}));
  CHECK_THROWS_AS(psef_difference(cls(make_model("P(3)"), 1, {1})), CapabilityError);
}

TEST_CASE("pull-push identities on every blowup model for random classes") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<long> coef(-20, 20);
  for (const auto& m : all_builtins()) {
    if (!m->blowdown()) continue;
    for (int trial = 0; trial < 100; ++trial) {
      QVector v(m->rank(1));
      for (auto& x : v) x = coef(rng);
      auto ids = check_blowup_identities(make_class(m, 1, v));
      CHECK_MESSAGE(ids.all(), m->name());
    }
  }
}

TEST_CASE("invalid model data is rejected") {
  ModelData d = make_model("BlP3line")->data();
  // H.E = H^2 + F breaks associativity: (H.E).H = 1 but (H.H).E = 0.
  d.products[{1, 1}][0][1] = QVector{Rational(1), Rational(1)};
  d.products[{1, 1}][1][0] = QVector{Rational(1), Rational(1)};
  CHECK_THROWS_AS(VarietyModel::create(d), ModelDataError);

  ModelData bad_push = make_model("BlP3line")->data();
  bad_push.blowdown->push[1] = QMatrix{{1, 1}};  // violates projection formula
  CHECK_THROWS_AS(VarietyModel::create(bad_push), ModelDataError);

  ModelData not_ample = make_model("P(2)")->data();
  not_ample.ample = QVector{Rational(0)};
  CHECK_THROWS_AS(VarietyModel::create(not_ample), ModelDataError);
}

TEST_CASE("model JSON round trip preserves every table") {
  for (const auto& m : all_builtins()) {
    Json j = model_to_json(*m);
    ModelPtr back = model_from_json(Json::parse(j.dump()));
    CHECK(model_to_json(*back) == j);
    CHECK(back->data().products == m->data().products);
  }
  CHECK_THROWS_AS(model_from_json(Json::parse(R"({"name":"x","dim":2})")), IngestionError);
  CHECK_THROWS_AS(resolve_model(Json(3)), IngestionError);
}
