#pragma once

#include "degspec/dynamics.hpp"
#include "degspec/json_io.hpp"
#include "degspec/theorems.hpp"

namespace degspec {

// Exact values as "num/den" strings, approximations as 12-digit decimals
// next to the tol (and band) they were computed with.
Json to_json(const SpectrumEntry& e);
Json to_json(const SpectralReport& r);
Json to_json(const DegreeSequence& s);
Json to_json(const FeketeEstimate& e);
Json to_json(const StabilityResult& r);
Json to_json(const InequalityReport& r);
Json to_json(const ConjugationReport& r);
Json to_json(const ConePreservation& r);
Json to_json(const R1R2Report& r);
Json to_json(const DualityReport& r);
Json to_json(const Signature& s);

}  // namespace degspec
