#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degspec/dynamics.hpp"
#include "degspec/errors.hpp"
#include "degspec/json_io.hpp"
#include "degspec/theorems.hpp"

namespace degspec {

inline const std::vector<std::string>& analysis_kinds() {
  static const std::vector<std::string> kinds = {"degrees", "stability", "fekete",  "theorem1",    "theorem2",
                                                 "duality", "hodge",     "cone",    "inequalities"};
  return kinds;
}

// An ingestion error that knows where in the request document it belongs:
// the n-th occurrence (0-based) of a key.
class RequestError : public IngestionError {
 public:
  RequestError(const std::string& message, std::string key, std::size_t occurrence = 0)
      : IngestionError(message), anchor_key(std::move(key)), anchor_occurrence(occurrence) {}
  std::string anchor_key;
  std::size_t anchor_occurrence;
};

struct AnalysisSpec {
  std::string kind;
  std::optional<int> p;
  std::optional<unsigned> n_max;
  double tol = kDefaultTol;
  double band = kDefaultBand;
  std::optional<double> r2;
  std::optional<PolyMap> oracle;  // polynomial map backing a matrix action's stability check
};

/// {"model": <name or model document>, "map": <map document>,
///  "analyses": [{"kind": ..., "p": ..., "n_max": ..., "tol": ..., "band": ...,
///                "r2": ..., "oracle": <polynomial map document>}, ...]}
struct AnalysisRequest {
  ModelPtr model;
  std::optional<MapDescriptor> map;
  std::vector<AnalysisSpec> analyses;
};

AnalysisRequest parse_request(const Json& doc);

/// Checks every analysis is supported by the map/model pair; throws
/// CapabilityError naming the analysis otherwise.
void validate_request(const AnalysisRequest& request);

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitViolation = 2;
inline constexpr int kExitIndeterminate = 3;

struct LabeledSequence {
  std::string label;
  DegreeSequence sequence;
};

struct RunResult {
  Json report;
  int exit_code = kExitOk;
  std::vector<LabeledSequence> sequences;  // degree sequences, in request order
};

/// Runs the analyses, on up to `threads` threads. The report is assembled in
/// request order, so it does not depend on scheduling.
RunResult run_request(const AnalysisRequest& request, unsigned threads = 1);

/// Error text of the form "<source>:<line>: <message>". Parse errors carry the
/// parser's own position; other errors are anchored at the line of the first
/// occurrence of `anchor_key` in `text` (line 1 when absent).
std::string anchored_message(std::string_view source, std::string_view text, const std::string& anchor_key,
                             std::size_t occurrence, const std::string& message);

}  // namespace degspec
