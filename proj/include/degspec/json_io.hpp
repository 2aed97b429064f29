#pragma once

#include "json.hpp"

#include "degspec/model.hpp"
#include "degspec/qmatrix.hpp"
#include "degspec/rational.hpp"

namespace degspec {

using Json = nlohmann::json;

// Rationals travel as canonical strings ("3", "-1/2"); integers are also
// accepted on input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& context);
Json vector_to_json(const QVector& v);
QVector vector_from_json(const Json& j, const std::string& context);
Json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j, const std::string& context);

// Decimal rounded to 12 significant digits.
Json decimal_to_json(double x);

/// Model interchange document:
///   {"name", "dim", "ranks", "labels", "mult": {"p,q": [[[coords]]]},
///    "degree", "ample", "cones": {"p": [[coords], ...]},
///    "blowdown": {"target": <model or built-in name>, "push": {"p": M},
///                 "pull": {"p": M}, "exceptional", "fiber", "center",
///                 "center_codim"}}
/// Products with N^0 may be omitted on input.
Json model_to_json(const VarietyModel& model);
ModelPtr model_from_json(const Json& j);

// A built-in name string or a full model document.
ModelPtr resolve_model(const Json& j);

Json class_to_json(const CycleClass& u);

}  // namespace degspec
