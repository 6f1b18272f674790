#pragma once

#include <string>

#include <json.hpp>

#include "wcga/fpq.hpp"
#include "wcga/greedy.hpp"
#include "wcga/haar.hpp"
#include "wcga/lpq.hpp"

namespace wcga {

// Shared vector schema:
//   {"space":"lpq","p":..,"q":..,"entries":[{"j":..,"k":..,"v":..},...]}
//   {"space":"fpq","p":..,"q":..,"d":..,
//    "entries":[{"rect":[{"j":..,"k":..}|"zero",...],"v":..},...]}
// Duplicate indices are rejected.
nlohmann::json lpq_to_json(const LpqVector& x);
LpqVector lpq_from_json(const nlohmann::json& j);

nlohmann::json fpq_to_json(const FpqVector& x);
FpqVector fpq_from_json(const nlohmann::json& j);

// Dyadic step functions: {"d":..,"grid_level":L,"values":[... 2^{Ld} row-major ...]}
nlohmann::json step_to_json(const StepFunction& f);
StepFunction step_from_json(const nlohmann::json& j, int default_d = 1);

nlohmann::json rect_to_json(const Rectangle& r);
Rectangle rect_from_json(const nlohmann::json& j);

// Trace export: {"selected":[...],"residual_norms":[...],"terminated":"..."}
nlohmann::json trace_to_json(const GreedyTrace<LpqIndex>& t);
nlohmann::json trace_to_json(const GreedyTrace<Rectangle>& t);

}  // namespace wcga
