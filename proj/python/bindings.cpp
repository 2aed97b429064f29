#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "degspec/report_json.hpp"
#include "degspec/request.hpp"

namespace py = pybind11;
using namespace degspec;

// Documents cross the boundary as JSON text; the Python side decodes them.
namespace {

MapDescriptor parse_map(const std::string& text) { return map_from_json(Json::parse(text)); }

std::vector<std::string> values_of(const DegreeSequence& s) {
  std::vector<std::string> out;
  for (const auto& v : s.values) out.push_back(to_string(v));
  return out;
}

QMatrix parse_matrix(const std::string& text) { return matrix_from_json(Json::parse(text), "matrix"); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact degree sequences and spectral checks for rational maps";

  static py::exception<Error> base(m, "DegspecError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Json::exception& e) {
      py::set_error(base, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("models", &builtin_model_specs);

  m.def("hodge_signature", [](const std::string& model) {
    ModelPtr mp = resolve_model(Json::parse(model));
    Signature s = hodge_signature(mp, ample_class(mp));
    return py::make_tuple(s.plus, s.minus, s.zero);
  }, py::arg("model_json"));

  m.def("degree_sequence", [](const std::string& map, int p, unsigned n_max) {
    return values_of(degree_sequence(parse_map(map), p, n_max));
  }, py::arg("map_json"), py::arg("p") = 1, py::arg("n_max"));

  m.def("stability_check", [](const std::string& map, int p, unsigned n_max) {
    StabilityResult r = stability_check(parse_map(map), p, n_max);
    return py::make_tuple(r.checked_up_to, r.first_failure ? py::object(py::int_(*r.first_failure)) : py::none());
  }, py::arg("map_json"), py::arg("p") = 1, py::arg("n_max"));

  m.def("fekete_estimate", [](const std::vector<std::string>& values) {
    DegreeSequence seq;
    for (const auto& v : values) seq.values.push_back(rational_from_json(Json(v), "values"));
    return to_json(fekete_estimate(seq)).dump();
  }, py::arg("values"));

  m.def("compose", [](const std::string& f, const std::string& g) {
    MapDescriptor a = parse_map(f), b = parse_map(g);
    if (!std::holds_alternative<PolyMap>(a) || !std::holds_alternative<PolyMap>(b))
      throw CapabilityError("compose takes two polynomial maps");
    return map_to_json(MapDescriptor(compose_polymap(std::get<PolyMap>(a), std::get<PolyMap>(b)))).dump();
  }, py::arg("f_json"), py::arg("g_json"));

  m.def("spectral_gap_report", [](const std::string& m1, double r2, double tol, double band) {
    return to_json(spectral_gap_report(parse_matrix(m1), r2, tol, band)).dump();
  }, py::arg("m1_json"), py::arg("r2"), py::arg("tol") = kDefaultTol, py::arg("band") = kDefaultBand);

  m.def("threefold_duality_check", [](const std::string& a, double tol, double band) {
    return to_json(threefold_duality_check(parse_matrix(a), tol, band)).dump();
  }, py::arg("a_json"), py::arg("tol") = kDefaultTol, py::arg("band") = kDefaultBand);

  m.def("run_request", [](const std::string& request, unsigned threads) {
    AnalysisRequest req;
    try {
      req = parse_request(Json::parse(request));
      validate_request(req);
    } catch (const RequestError& e) {
      throw IngestionError(e.what());
    }
    RunResult r;
    {
      py::gil_scoped_release release;
      r = run_request(req, threads);
    }
    return py::make_tuple(r.report.dump(), r.exit_code);
  }, py::arg("request_json"), py::arg("threads") = 1);
}
