#pragma once

#include <nlohmann/json.hpp>

#include "billiards/classify.hpp"
#include "billiards/dynamics.hpp"
#include "billiards/orbits.hpp"
#include "billiards/verify.hpp"

namespace billiards {

// Field names are camelCase; states are written in the format_state form.
nlohmann::json to_json(const OrbitSummary& o);
nlohmann::json to_json(const StepEvent& e);
nlohmann::json to_json(const TraceRecord& r);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const Counterexample& c);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const ConjectureReport& r);

// Inverse of to_json(OrbitSummary); throws InputError on malformed input.
OrbitSummary orbit_summary_from_json(const nlohmann::json& j);

}  // namespace billiards
