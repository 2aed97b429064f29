#include "degspec/request.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "degspec/report_json.hpp"

namespace degspec {

namespace {

constexpr const char* kParamKeys[] = {"kind", "p", "n_max", "tol", "band", "r2", "oracle"};

AnalysisSpec parse_analysis(const Json& j, std::size_t index) {
  auto fail = [&](const std::string& msg) -> RequestError {
    return RequestError("analyses[" + std::to_string(index) + "]: " + msg, "kind", index);
  };
  if (!j.is_object()) throw fail("an analysis must be an object");
  for (const auto& [key, value] : j.items())
    if (std::find(std::begin(kParamKeys), std::end(kParamKeys), key) == std::end(kParamKeys))
      throw fail("unknown parameter '" + key + "'");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw fail("missing string \"kind\"");
  AnalysisSpec spec;
  spec.kind = j.at("kind").get<std::string>();
  const auto& kinds = analysis_kinds();
  if (std::find(kinds.begin(), kinds.end(), spec.kind) == kinds.end()) throw fail("unknown kind '" + spec.kind + "'");
  if (j.contains("p")) {
    if (!j.at("p").is_number_integer() || j.at("p").get<long>() < 0) throw fail("\"p\" must be a nonnegative integer");
    spec.p = j.at("p").get<int>();
  }
  if (j.contains("n_max")) {
    if (!j.at("n_max").is_number_integer() || j.at("n_max").get<long>() < 1 || j.at("n_max").get<long>() > 10000)
      throw fail("\"n_max\" must be an integer in 1..10000");
    spec.n_max = j.at("n_max").get<unsigned>();
  }
  auto positive = [&](const char* key, double& out) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_number() || !(j.at(key).get<double>() > 0)) throw fail(std::string("\"") + key + "\" must be a positive number");
    out = j.at(key).get<double>();
  };
  positive("tol", spec.tol);
  positive("band", spec.band);
  if (j.contains("r2")) {
    if (!j.at("r2").is_number() || !(j.at("r2").get<double>() >= 0)) throw fail("\"r2\" must be a nonnegative number");
    spec.r2 = j.at("r2").get<double>();
  }
  if (j.contains("oracle")) {
    try {
      MapDescriptor oracle = map_from_json(j.at("oracle"));
      if (!std::holds_alternative<PolyMap>(oracle)) throw fail("\"oracle\" must be a polynomial map");
      spec.oracle = std::get<PolyMap>(oracle);
    } catch (const RequestError&) {
      throw;
    } catch (const Error& e) {
      throw fail(std::string("oracle: ") + e.what());
    }
  }
  return spec;
}

int exit_for(const std::string& status) {
  if (status == "CONCLUSION_VIOLATED" || status == "failed") return kExitViolation;
  if (status == "INDETERMINATE") return kExitIndeterminate;
  if (status == "error") return kExitInputError;
  return kExitOk;
}

// 1 beats 2 beats 3 beats 0.
int combine_exit(int a, int b) {
  static constexpr int rank[] = {0, 3, 2, 1};
  return rank[a] >= rank[b] ? a : b;
}

const MonomialMap* as_monomial(const AnalysisRequest& r) {
  return r.map ? std::get_if<MonomialMap>(&*r.map) : nullptr;
}
const PolyMap* as_poly(const AnalysisRequest& r) { return r.map ? std::get_if<PolyMap>(&*r.map) : nullptr; }
const MatrixAction* as_action(const AnalysisRequest& r) {
  return r.map ? std::get_if<MatrixAction>(&*r.map) : nullptr;
}

bool monomial_on_p1k(const MonomialMap* m, std::size_t max_k = 4) {
  return m && m->variety == MonomialVariety::P1k && m->dim() >= 1 && m->dim() <= max_k;
}

int default_p(const AnalysisSpec&) { return 1; }

unsigned nmax_for(const AnalysisSpec& spec, const AnalysisRequest& r) {
  if (spec.n_max) return *spec.n_max;
  return r.map ? default_nmax(*r.map) : kDefaultNmaxMatrix;
}

ModelPtr analysis_model(const AnalysisRequest& r) {
  if (r.model) return r.model;
  if (const auto* a = as_action(r)) return a->model;
  if (const auto* m = as_monomial(r); monomial_on_p1k(m)) return make_model("P1xP1xK(" + std::to_string(m->dim()) + ")");
  if (const auto* m = as_monomial(r); m && m->dim() <= 4) return make_model("P(" + std::to_string(m->dim()) + ")");
  if (const auto* f = as_poly(r); f && f->dim() <= 4) return make_model("P(" + std::to_string(f->dim()) + ")");
  return nullptr;
}

// The map as a matrix action, when it has one.
std::optional<MatrixAction> action_of(const AnalysisRequest& r) {
  if (const auto* a = as_action(r)) return *a;
  if (const auto* m = as_monomial(r); monomial_on_p1k(m)) return monomial_matrix_action(m->exponents);
  return std::nullopt;
}

void check_sequence_support(const AnalysisRequest& r, int p, const std::string& kind) {
  if (!r.map) throw CapabilityError(kind + " needs a map");
  if (const auto* m = as_monomial(r)) {
    if (p != 1 && p != static_cast<int>(m->dim())) throw CapabilityError(kind + ": monomial maps support p = 1 and p = k");
    if (m->variety == MonomialVariety::P1k && m->dim() > 4)
      throw CapabilityError(kind + ": monomial maps on (P1)^k need k <= 4");
  } else if (as_poly(r)) {
    if (p != 1) throw CapabilityError(kind + ": polynomial maps support p = 1 only");
  } else if (!as_action(r)->has(p)) {
    throw CapabilityError(kind + ": the matrix action has no M_" + std::to_string(p));
  }
}

void validate_one(const AnalysisRequest& r, const AnalysisSpec& s) {
  const std::string& kind = s.kind;
  const int p = s.p.value_or(default_p(s));
  if (kind == "degrees" || kind == "fekete") {
    check_sequence_support(r, p, kind);
    if (kind == "fekete" && s.n_max && *s.n_max < 2) throw CapabilityError("fekete needs n_max >= 2");
  } else if (kind == "stability") {
    check_sequence_support(r, p, kind);
    if (const auto* a = as_action(r)) {
      if (!s.oracle) throw CapabilityError("stability of a matrix action needs an \"oracle\" polynomial map");
      if (p != 1 || a->model->rank(1) != 1 || a->model->dim() != static_cast<int>(s.oracle->dim()))
        throw CapabilityError("stability with an oracle compares M_1 on P(k) with the oracle's degrees");
    }
  } else if (kind == "theorem1") {
    if (const auto* m = as_monomial(r)) {
      if (!monomial_on_p1k(m) || m->dim() < 2) throw CapabilityError("theorem1 needs a monomial map on (P1)^k, 2 <= k <= 4");
    } else if (const auto* a = as_action(r)) {
      if (!a->has(1)) throw CapabilityError("theorem1 needs M_1");
      if (!s.r2 && !a->has(2)) throw CapabilityError("theorem1 needs M_2 or an explicit \"r2\"");
    } else {
      throw CapabilityError("theorem1 needs a monomial map or a matrix action");
    }
  } else if (kind == "theorem2") {
    if (const auto* m = as_monomial(r)) {
      if (!monomial_on_p1k(m) || m->dim() != 2) throw CapabilityError("theorem2 on a monomial map needs (P1)^2");
    } else if (const auto* a = as_action(r)) {
      if (!a->has(1) || !a->has(2)) throw CapabilityError("theorem2 needs M_1 and M_2");
    } else {
      throw CapabilityError("theorem2 needs a monomial map or a matrix action");
    }
  } else if (kind == "duality") {
    const auto* m = as_monomial(r);
    if (!m || m->dim() != 3) throw CapabilityError("duality needs a 3x3 monomial map");
    if (::abs(determinant(m->exponents)) != 1) throw CapabilityError("duality needs |det A| = 1");
  } else if (kind == "hodge") {
    ModelPtr model = analysis_model(r);
    if (!model) throw CapabilityError("hodge needs a model");
    if (model->dim() < 2) throw CapabilityError("hodge needs a model of dimension >= 2");
  } else if (kind == "cone") {
    auto act = action_of(r);
    if (!act) throw CapabilityError("cone needs a matrix action or a monomial map on (P1)^k");
    if (s.p && (!act->has(*s.p) || !act->model->has_cone(*s.p)))
      throw CapabilityError("cone: no matrix or no cone generators for p = " + std::to_string(*s.p));
  } else if (kind == "inequalities") {
    if (!as_monomial(r) && !as_action(r)) throw CapabilityError("inequalities need a monomial map or a matrix action");
  }
}

struct Outcome {
  Json body;
  std::string status;
  std::optional<DegreeSequence> sequence;
};

HypothesisStatus status_from(bool verified) { return verified ? HypothesisStatus::Verified : HypothesisStatus::Failed; }

Outcome run_theorem1(const AnalysisRequest& r, const AnalysisSpec& s) {
  QMatrix m1;
  double r2 = 0.0;
  std::map<std::string, HypothesisStatus> hyp;
  const unsigned n_max = nmax_for(s, r);
  if (const auto* m = as_monomial(r)) {
    m1 = monomial_action_p1k(m->exponents, 1);
    r2 = s.r2 ? *s.r2
              : (m->dim() == 2 ? to_double(::abs(determinant(m->exponents)))
                               : spectral_radius(compound_matrix(m->exponents, 2), s.tol));
    hyp["one_stable"] = status_from(stability_check(*r.map, 1, n_max).stable());
    hyp["cone_preserving"] = status_from(cone_preservation_check(monomial_matrix_action(m->exponents), 1).verified);
  } else {
    const auto& a = *as_action(r);
    m1 = a.at(1);
    r2 = s.r2 ? *s.r2 : spectral_radius(a.at(2), s.tol);
    if (s.oracle)
      hyp["one_stable"] = status_from(stability_check(a, *s.oracle, n_max).stable());
    else
      hyp["one_stable"] = a.asserted_1_stable ? HypothesisStatus::Asserted : HypothesisStatus::Unchecked;
    if (a.model->has_cone(1))
      hyp["cone_preserving"] = status_from(cone_preservation_check(a, 1).verified);
    else {
      auto it = a.asserted_cone_preserving.find(1);
      hyp["cone_preserving"] = it != a.asserted_cone_preserving.end() && it->second ? HypothesisStatus::Asserted
                                                                                     : HypothesisStatus::Unchecked;
    }
  }
  SpectralReport rep = spectral_gap_report(m1, r2, s.tol, s.band);
  for (const auto& [name, st] : hyp) rep.hypotheses[name] = st;
  for (const auto& [name, st] : hyp)
    if (st == HypothesisStatus::Failed && rep.verdict != Verdict::NotApplicable) {
      rep.details = "hypothesis " + name + " fails; spectral classification was " + to_string(rep.verdict) + " (" +
                    rep.details + ")";
      rep.verdict = Verdict::NotApplicable;
      break;
    }
  return {to_json(rep), to_string(rep.verdict), std::nullopt};
}

Outcome run_theorem2(const AnalysisRequest& r, const AnalysisSpec& s) {
  const MatrixAction act = *action_of(r);
  Json cones = Json::array();
  bool cone_ok = true;
  for (int p : {1, 2}) {
    if (act.model->has_cone(p)) {
      ConePreservation c = cone_preservation_check(act, p);
      cone_ok = cone_ok && c.verified;
      cones.push_back(to_json(c));
    } else {
      auto it = act.asserted_cone_preserving.find(p);
      const bool asserted = it != act.asserted_cone_preserving.end() && it->second;
      cone_ok = cone_ok && asserted;
      cones.push_back({{"p", p}, {"asserted", asserted}});
    }
  }
  R1R2Report rep = r1_squared_vs_r2(act.at(1), act.at(2), cone_ok, s.tol, s.band);
  Json body = to_json(rep);
  body["cone_checks"] = std::move(cones);
  body["tol"] = s.tol;
  body["band"] = s.band;
  return {std::move(body), to_string(rep.verdict), std::nullopt};
}

Outcome run_one(const AnalysisRequest& r, const AnalysisSpec& s) {
  const std::string& kind = s.kind;
  const int p = s.p.value_or(default_p(s));
  const unsigned n_max = nmax_for(s, r);
  if (kind == "degrees") {
    DegreeSequence seq = degree_sequence(*r.map, p, n_max);
    return {to_json(seq), "ok", seq};
  }
  if (kind == "fekete") {
    DegreeSequence seq = degree_sequence(*r.map, p, n_max);
    FeketeEstimate est = fekete_estimate(seq);
    Json body = {{"sequence", to_json(seq)}, {"estimate", to_json(est)}};
    return {std::move(body), est.violations.empty() ? "verified" : "failed", seq};
  }
  if (kind == "stability") {
    if (const auto* a = as_action(r)) {
      StabilityResult res = stability_check(*a, *s.oracle, n_max);
      // Only a falsified assertion is a failure; otherwise instability is a finding.
      std::string status = res.stable() ? "stable" : (a->asserted_1_stable ? "failed" : "unstable");
      return {to_json(res), status, std::nullopt};
    }
    StabilityResult res = stability_check(*r.map, p, n_max);
    return {to_json(res), res.stable() ? "stable" : "unstable", std::nullopt};
  }
  if (kind == "theorem1") return run_theorem1(r, s);
  if (kind == "theorem2") return run_theorem2(r, s);
  if (kind == "duality") {
    DualityReport rep = threefold_duality_check(as_monomial(r)->exponents, s.tol, s.band);
    Json body = to_json(rep);
    body["tol"] = s.tol;
    body["band"] = s.band;
    return {std::move(body), to_string(rep.verdict), std::nullopt};
  }
  if (kind == "hodge") {
    ModelPtr model = analysis_model(r);
    Signature sig = hodge_signature(model, ample_class(model));
    const Signature expected{1, static_cast<int>(model->rank(1)) - 1, 0};
    Json body = {{"model", model->name()}, {"signature", to_json(sig)}, {"expected", to_json(expected)}};
    return {std::move(body), sig == expected ? "verified" : "failed", std::nullopt};
  }
  if (kind == "cone") {
    const MatrixAction act = *action_of(r);
    std::vector<int> ps;
    if (s.p)
      ps.push_back(*s.p);
    else
      for (const auto& [q, m] : act.matrices)
        if (q > 0 && act.model->has_cone(q)) ps.push_back(q);
    Json checks = Json::array();
    bool all = true;
    for (int q : ps) {
      ConePreservation c = cone_preservation_check(act, q);
      all = all && c.verified;
      checks.push_back(to_json(c));
    }
    return {Json{{"checks", std::move(checks)}}, all ? "verified" : "failed", std::nullopt};
  }
  // inequalities
  InequalityReport rep = degree_inequalities(*r.map, n_max, s.band);
  Json body = to_json(rep);
  body["tol"] = s.tol;
  body["band"] = s.band;
  return {std::move(body), rep.all_hold() ? "verified" : "failed", std::nullopt};
}

Json params_json(const AnalysisSpec& s, const AnalysisRequest& r) {
  Json j = {{"kind", s.kind}, {"tol", s.tol}, {"band", s.band}};
  j["p"] = s.p.value_or(1);
  j["n_max"] = nmax_for(s, r);
  if (s.r2) j["r2"] = *s.r2;
  return j;
}

}  // namespace

AnalysisRequest parse_request(const Json& doc) {
  if (!doc.is_object()) throw RequestError("a request must be a JSON object", "");
  for (const auto& [key, value] : doc.items())
    if (key != "model" && key != "map" && key != "analyses") throw RequestError("unknown top-level key '" + key + "'", key);
  AnalysisRequest req;
  if (doc.contains("model")) {
    try {
      req.model = resolve_model(doc.at("model"));
    } catch (const Error& e) {
      throw RequestError(std::string("model: ") + e.what(), "model");
    }
  }
  if (doc.contains("map")) {
    try {
      req.map = map_from_json(doc.at("map"), req.model);
    } catch (const Error& e) {
      throw RequestError(std::string("map: ") + e.what(), "map");
    }
  }
  if (!doc.contains("analyses") || !doc.at("analyses").is_array() || doc.at("analyses").empty())
    throw RequestError("\"analyses\" must be a nonempty array", "analyses");
  const auto& list = doc.at("analyses");
  for (std::size_t i = 0; i < list.size(); ++i) req.analyses.push_back(parse_analysis(list[i], i));
  return req;
}

void validate_request(const AnalysisRequest& request) {
  for (std::size_t i = 0; i < request.analyses.size(); ++i) {
    try {
      validate_one(request, request.analyses[i]);
    } catch (const RequestError&) {
      throw;
    } catch (const Error& e) {
      throw RequestError("analyses[" + std::to_string(i) + "] (" + request.analyses[i].kind + "): " + e.what(), "kind", i);
    }
  }
}

RunResult run_request(const AnalysisRequest& request, unsigned threads) {
  validate_request(request);
  const std::size_t n = request.analyses.size();
  std::vector<Outcome> outcomes(n);
  auto work = [&](std::size_t i) {
    try {
      outcomes[i] = run_one(request, request.analyses[i]);
    } catch (const std::exception& e) {
      outcomes[i] = {Json{{"error", e.what()}}, "error", std::nullopt};
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) work(i);
      });
  }

  RunResult result;
  Json analyses = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    const AnalysisSpec& s = request.analyses[i];
    Json entry = {{"params", params_json(s, request)}, {"status", outcomes[i].status}, {"result", outcomes[i].body}};
    analyses.push_back(std::move(entry));
    result.exit_code = combine_exit(result.exit_code, exit_for(outcomes[i].status));
    if (outcomes[i].sequence)
      result.sequences.push_back({"analyses[" + std::to_string(i) + "] " + s.kind + " p=" + std::to_string(s.p.value_or(1)),
                                  *outcomes[i].sequence});
  }
  result.report = {{"model", request.model ? Json(request.model->name()) : Json(nullptr)},
                   {"map", request.map ? map_to_json(*request.map) : Json(nullptr)},
                   {"analyses", std::move(analyses)},
                   {"exit_code", result.exit_code}};
  return result;
}

std::string anchored_message(std::string_view source, std::string_view text, const std::string& anchor_key,
                             std::size_t occurrence, const std::string& message) {
  std::size_t line = 1;
  if (!anchor_key.empty()) {
    const std::string needle = "\"" + anchor_key + "\"";
    std::size_t pos = 0, seen = 0, found = std::string_view::npos;
    while ((pos = text.find(needle, pos)) != std::string_view::npos) {
      if (seen++ == occurrence) {
        found = pos;
        break;
      }
      pos += needle.size();
    }
    if (found != std::string_view::npos) line += static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(found), '\n'));
  }
  return std::string(source) + ":" + std::to_string(line) + ": " + message;
}

}  // namespace degspec
