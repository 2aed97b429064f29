#include "degspec/report_json.hpp"

#include <cmath>

namespace degspec {

namespace {

Json decimal_or_null(double x) { return std::isnan(x) ? Json(nullptr) : decimal_to_json(x); }

}  // namespace

Json to_json(const SpectrumEntry& e) {
  Json j = {{"modulus", decimal_to_json(e.modulus)},
            {"multiplicity", e.multiplicity},
            {"real", e.is_real},
            {"value", {decimal_to_json(e.approx_value.real()), decimal_to_json(e.approx_value.imag())}}};
  return j;
}

Json to_json(const SpectralReport& r) {
  Json spectrum = Json::array();
  for (const auto& e : r.spectrum) spectrum.push_back(to_json(e));
  Json hyp = Json::object();
  for (const auto& [name, status] : r.hypotheses) hyp[name] = to_string(status);
  return {{"r1", decimal_to_json(r.r1)},
          {"spectrum", std::move(spectrum)},
          {"r2", decimal_to_json(r.r2)},
          {"sqrt_r2", decimal_to_json(r.sqrt_r2)},
          {"tol", r.tol},
          {"band", r.band},
          {"hypotheses", std::move(hyp)},
          {"verdict", to_string(r.verdict)},
          {"details", r.details}};
}

Json to_json(const DegreeSequence& s) {
  Json values = Json::array();
  for (const auto& v : s.values) values.push_back(rational_to_json(v));
  Json j = {{"p", s.p}, {"source", s.source}, {"values", std::move(values)}};
  if (s.assumption_dependent) j["assumption"] = "computed as powers of the asserted action; valid under 1-stability";
  return j;
}

Json to_json(const FeketeEstimate& e) {
  Json violations = Json::array();
  for (const auto& [m, n] : e.violations) violations.push_back({m, n});
  return {{"upper_inf", decimal_to_json(e.upper_inf)},
          {"upper_inf_at", e.upper_inf_at},
          {"last_root", decimal_to_json(e.last_root)},
          {"window_slope", decimal_to_json(e.window_slope)},
          {"window", e.window},
          {"violations", std::move(violations)}};
}

Json to_json(const StabilityResult& r) {
  Json j = {{"stable", r.stable()}, {"checked_up_to", r.checked_up_to}};
  j["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
  return j;
}

Json to_json(const InequalityReport& r) {
  Json lambdas = Json::array(), estimates = Json::array();
  for (double x : r.lambdas) lambdas.push_back(decimal_or_null(x));
  for (double x : r.estimates) estimates.push_back(decimal_or_null(x));
  Json checks = Json::array();
  for (const auto& c : r.degree_checks)
    checks.push_back({{"p", c.p},
                      {"lambda1_times_lambda_p", decimal_to_json(c.lambda1 * c.lambda_p)},
                      {"lambda_p_plus_1", decimal_to_json(c.lambda_next)},
                      {"holds", c.holds}});
  Json pointwise = Json::array();
  for (const auto& c : r.pointwise)
    pointwise.push_back({{"n", c.n}, {"p", c.p}, {"difference", class_to_json(c.difference)}, {"effective", c.effective}});
  return {{"method", r.method},
          {"lambdas", std::move(lambdas)},
          {"window_slope_estimates", std::move(estimates)},
          {"degree_checks", std::move(checks)},
          {"pointwise", std::move(pointwise)}};
}

Json to_json(const ConjugationReport& r) {
  return {{"original", to_json(r.original)},
          {"conjugated", to_json(r.conjugated)},
          {"original_slope", decimal_to_json(r.original_estimate.window_slope)},
          {"conjugated_slope", decimal_to_json(r.conjugated_estimate.window_slope)},
          {"relative_gap", decimal_to_json(r.relative_gap)},
          {"identical", r.identical},
          {"passed", r.passed}};
}

Json to_json(const ConePreservation& r) {
  Json j = {{"p", r.p}, {"verified", r.verified}};
  if (r.witness) {
    j["witness"] = class_to_json(*r.witness);
    j["image"] = class_to_json(*r.image);
  }
  return j;
}

Json to_json(const R1R2Report& r) {
  return {{"r1", decimal_to_json(r.r1)},
          {"r2", decimal_to_json(r.r2)},
          {"r1_squared", decimal_to_json(r.r1 * r.r1)},
          {"holds", r.holds},
          {"verdict", to_string(r.verdict)},
          {"details", r.details}};
}

Json to_json(const DualityReport& r) {
  return {{"lambda1", decimal_to_json(r.lambda1)},
          {"lambda2", decimal_to_json(r.lambda2)},
          {"lambda1_inverse", decimal_to_json(r.lambda1_inverse)},
          {"lambda2_inverse", decimal_to_json(r.lambda2_inverse)},
          {"relative_gap", decimal_to_json(r.relative_gap)},
          {"equality_holds", r.equality_holds},
          {"forward_gap", r.forward_gap},
          {"inverse_gap", r.inverse_gap},
          {"dichotomy_required", r.dichotomy_required},
          {"dichotomy_holds", r.dichotomy_holds},
          {"verdict", to_string(r.verdict)}};
}

Json to_json(const Signature& s) { return {{"plus", s.plus}, {"minus", s.minus}, {"zero", s.zero}}; }

}  // namespace degspec
