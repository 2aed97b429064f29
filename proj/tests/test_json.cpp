#include <cmath>

#include "doctest.h"

#include "degspec/errors.hpp"
#include "degspec/report_json.hpp"
#include "degspec/request.hpp"

using namespace degspec;

namespace {

Json fib_map() { return Json::parse(R"j({"type": "monomial", "A": [[2, 1], [1, 1]], "variety": "P1k"})j"); }

RunResult run_doc(const Json& doc, unsigned threads = 1) { return run_request(parse_request(doc), threads); }

const Json& status_of(const RunResult& r, std::size_t i) { return r.report.at("analyses").at(i).at("status"); }

}  // namespace

TEST_CASE("model documents round-trip for every built-in") {
  for (const auto& name : builtin_model_specs()) {
    CAPTURE(name);
    ModelPtr m = make_model(name);
    const Json doc = model_to_json(*m);
    ModelPtr back = model_from_json(Json::parse(doc.dump()));
    CHECK(model_to_json(*back) == doc);
    for (int p = 0; p <= m->dim(); ++p)
      for (int q = 0; p + q <= m->dim(); ++q)
        for (std::size_t i = 0; i < m->rank(p); ++i)
          for (std::size_t j = 0; j < m->rank(q); ++j)
            CHECK(cup(basis_class(m, p, i), basis_class(m, q, j)).coords ==
                  cup(basis_class(back, p, i), basis_class(back, q, j)).coords);
  }
}

TEST_CASE("rationals and decimals in documents") {
  CHECK(rational_to_json(Rational(-6) / 4) == "-3/2");
  CHECK(rational_from_json(Json(7), "x") == Rational(7));
  CHECK(rational_from_json(Json("10/4"), "x") == Rational(5, 2));
  CHECK_THROWS_AS(rational_from_json(Json("1/0"), "x"), IngestionError);
  CHECK_THROWS_AS(rational_from_json(Json(0.5), "x"), IngestionError);
  CHECK(decimal_to_json(std::sqrt(2.0)).get<double>() == 1.41421356237);
  CHECK(decimal_to_json(1.0 / 3.0).dump() == "0.333333333333");
}

TEST_CASE("map documents round-trip") {
  for (const char* text : {R"j({"type": "monomial", "A": [[2, 1], [1, 1]], "variety": "Pk"})j",
                           R"j({"type": "polynomial", "vars": 3, "components": [[{"exps": [0,1,1], "coef": 1}],
                               [{"exps": [1,0,1], "coef": 1}], [{"exps": [1,1,0], "coef": 1}]]})j",
                           R"j({"type": "matrix_action", "model": "P1xP1xK(2)", "M": {"1": [[2,1],[1,1]], "2": [[1]]},
                               "asserted_1_stable": true})j"}) {
    CAPTURE(text);
    MapDescriptor m = map_from_json(Json::parse(text));
    const Json doc = map_to_json(m);
    CHECK(map_to_json(map_from_json(doc)) == doc);
  }
}

TEST_CASE("report documents carry exact values or tagged decimals") {
  const Json rep = to_json(spectral_gap_report(QMatrix{{2, 1}, {1, 1}}, 1.0));
  CHECK(rep.at("verdict") == "PASS");
  CHECK(rep.at("tol").get<double>() > 0);
  CHECK(rep.at("band").get<double>() > 0);
  CHECK(rep.at("r1").get<double>() == doctest::Approx(2.618034).epsilon(1e-6));
  CHECK(rep.at("spectrum").size() == 2);

  DegreeSequence seq{1, "monomial", {Rational(5), Rational(13)}, false};
  const Json js = to_json(seq);
  CHECK(js.at("values") == Json::array({"5", "13"}));
  CHECK_FALSE(js.contains("assumption"));
  seq.assumption_dependent = true;
  CHECK(to_json(seq).contains("assumption"));
}

TEST_CASE("request parsing rejects malformed documents") {
  CHECK_THROWS_AS(parse_request(Json::array()), RequestError);
  CHECK_THROWS_AS(parse_request(Json::parse(R"j({"analyses": []})j")), RequestError);
  CHECK_THROWS_AS(parse_request(Json::parse(R"j({"bogus": 1, "analyses": [{"kind": "hodge"}]})j")), RequestError);
  CHECK_THROWS_AS(parse_request(Json::parse(R"j({"analyses": [{"kind": "hodge", "q": 1}]})j")), RequestError);
  CHECK_THROWS_AS(parse_request(Json::parse(R"j({"analyses": [{"kind": "hodge", "tol": -1}]})j")), RequestError);
  CHECK_THROWS_AS(parse_request(Json::parse(R"j({"model": "P(9)", "analyses": [{"kind": "hodge"}]})j")),
                  RequestError);
  try {
    parse_request(Json::parse(R"j({"analyses": [{"kind": "hodge"}, {"kind": "nope"}]})j"));
    FAIL("expected a RequestError");
  } catch (const RequestError& e) {
    CHECK(e.anchor_key == "kind");
    CHECK(e.anchor_occurrence == 1);
  }
}

TEST_CASE("validation refuses unsupported analysis/map pairs") {
  auto invalid = [](const char* text) {
    CHECK_THROWS_AS(validate_request(parse_request(Json::parse(text))), RequestError);
  };
  invalid(R"j({"map": {"type": "monomial", "A": [[2,1],[1,1]]}, "analyses": [{"kind": "duality"}]})j");
  invalid(R"j({"map": {"type": "monomial", "A": [[2,1,0],[1,1,0],[0,0,1]]}, "analyses": [{"kind": "degrees", "p": 2}]})j");
  invalid(R"j({"map": {"type": "polynomial", "vars": 2, "components": [[{"exps":[1,0],"coef":1}],
            [{"exps":[0,1],"coef":1}]]}, "analyses": [{"kind": "theorem1"}]})j");
  invalid(R"j({"model": "P1xP1xK(2)", "map": {"type": "matrix_action", "M": {"1": [[1,0],[0,1]]}},
            "analyses": [{"kind": "stability"}]})j");
  invalid(R"j({"model": "P(1)", "analyses": [{"kind": "hodge"}]})j");
  invalid(R"j({"analyses": [{"kind": "degrees"}]})j");
  invalid(R"j({"map": {"type": "monomial", "A": [[2,1],[1,1]]}, "analyses": [{"kind": "fekete", "n_max": 1}]})j");
  CHECK_NOTHROW(validate_request(parse_request(Json::parse(R"j({"model": "BlP3line", "analyses": [{"kind": "hodge"}]})j"))));
}

TEST_CASE("exit codes follow the verdicts") {
  Json doc = {{"map", fib_map()}, {"analyses", {{{"kind", "theorem1"}}, {{"kind", "degrees"}, {"n_max", 5}}}}};
  RunResult ok = run_doc(doc);
  CHECK(ok.exit_code == kExitOk);
  CHECK(status_of(ok, 0) == "PASS");
  REQUIRE(ok.sequences.size() == 1);
  CHECK(ok.sequences[0].sequence.values == std::vector<Rational>{5, 13, 34, 89, 233});

  Json violated = {{"map", {{"type", "monomial"}, {"A", {{2, 0}, {0, 2}}}}},
                   {"analyses", {{{"kind", "theorem1"}, {"r2", 1}}}}};
  CHECK(run_doc(violated).exit_code == kExitViolation);

  // The rotation is not 1-stable, so the hypothesis fails before any verdict.
  Json rotation = {{"map", {{"type", "monomial"}, {"A", {{1, -1}, {1, 1}}}}},
                   {"analyses", {{{"kind", "theorem1"}, {"r2", 2}}, {{"kind", "stability"}}}}};
  RunResult rot = run_doc(rotation);
  CHECK(status_of(rot, 0) == "NOT_APPLICABLE");
  CHECK(status_of(rot, 1) == "unstable");
  CHECK(rot.exit_code == kExitOk);

  Json indet = Json::parse(R"j({"model": "P1xP1xK(2)", "map": {"type": "matrix_action", "M": {"1": [[3,0],[0,1]]}},
                                "analyses": [{"kind": "theorem1", "r2": 1}]})j");
  CHECK(run_doc(indet).exit_code == kExitIndeterminate);

  // 2 beats 3.
  Json both = indet;
  both["analyses"].push_back({{"kind", "theorem1"}, {"r2", 0.25}});
  RunResult mixed = run_doc(both);
  CHECK(status_of(mixed, 1) == "CONCLUSION_VIOLATED");
  CHECK(mixed.exit_code == kExitViolation);
}

TEST_CASE("a falsified stability assertion is a failure") {
  // M_1 = [2] claims degree 2^n; the Cremona involution disagrees at n = 2.
  Json doc = Json::parse(R"j({"model": "P(2)",
    "map": {"type": "matrix_action", "M": {"1": [[2]]}, "asserted_1_stable": true},
    "analyses": [{"kind": "stability", "n_max": 4, "oracle": {"type": "polynomial", "vars": 3, "components": [
      [{"exps": [0,1,1], "coef": 1}], [{"exps": [1,0,1], "coef": 1}], [{"exps": [1,1,0], "coef": 1}]]}}]})j");
  RunResult r = run_doc(doc);
  CHECK(status_of(r, 0) == "failed");
  CHECK(r.report.at("analyses").at(0).at("result").at("first_failure") == 2);
  CHECK(r.exit_code == kExitViolation);
}

TEST_CASE("reports do not depend on the thread count") {
  Json doc = {{"map", fib_map()},
              {"analyses",
               {{{"kind", "theorem1"}},
                {{"kind", "theorem2"}},
                {{"kind", "fekete"}},
                {{"kind", "inequalities"}, {"n_max", 4}},
                {{"kind", "cone"}},
                {{"kind", "hodge"}}}}};
  const std::string one = run_doc(doc, 1).report.dump();
  for (unsigned t : {2u, 4u, 8u}) CHECK(run_doc(doc, t).report.dump() == one);
  CHECK(run_doc(doc, 1).report.dump() == one);
}

TEST_CASE("anchored messages point at the right line") {
  const std::string text = "{\n  \"analyses\": [\n    {\"kind\": \"a\"},\n    {\"kind\": \"b\"}\n  ]\n}\n";
  CHECK(anchored_message("req.json", text, "kind", 0, "bad") == "req.json:3: bad");
  CHECK(anchored_message("req.json", text, "kind", 1, "bad") == "req.json:4: bad");
  CHECK(anchored_message("req.json", text, "map", 0, "bad") == "req.json:1: bad");
  CHECK(anchored_message("req.json", text, "", 0, "bad") == "req.json:1: bad");
}
