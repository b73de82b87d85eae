#pragma once

#include <json.hpp>

#include "wienerlab/poly.hpp"
#include "wienerlab/wiener.hpp"

namespace wienerlab {

inline constexpr const char* kSchema = "wienerlab/1";

// Plain JSON number inside the 53-bit safe range, decimal string outside it.
nlohmann::json int_to_json(Int value);
// Accepts both encodings. Throws ParseError otherwise.
Int int_from_json(const nlohmann::json& j);

// Canonical form {"coeffs": [c0, c1, ...]}.
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const SequenceVerdict& v);

// {"schema", "coeffs", "index", "diameter", "ordered", "checks": {...}}
nlohmann::json report_to_json(const WienerReport& report);

}  // namespace wienerlab
