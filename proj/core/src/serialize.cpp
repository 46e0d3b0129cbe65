#include "billiards/serialize.hpp"

#include "billiards/errors.hpp"

namespace billiards {

using nlohmann::json;

json to_json(const OrbitSummary& o) {
  return {{"rep", format_state(o.representative)},
          {"period", o.period},
          {"winding", o.winding},
          {"stoneWinding", o.stone_winding},
          {"contractible", o.contractible},
          {"prerefractive", o.has_prerefractive}};
}

json to_json(const StepEvent& e) {
  json swapped = nullptr;
  if (e.swapped) swapped = {e.swapped->first, e.swapped->second};
  return {{"kind", to_string(e.kind)}, {"swapped", swapped}, {"stoneDelta", e.stone_delta}};
}

json to_json(const TraceRecord& r) {
  return {{"step", r.step},
          {"state", format_state(r.state)},
          {"event", to_json(r.event)},
          {"replicaSteps", r.replica_steps},
          {"stoneSteps", r.stone_steps}};
}

json to_json(const Classification& c) {
  json out = {{"kind", to_string(c.kind)},
              {"alsoExpelling", c.also_expelling},
              {"revolutionary", c.revolutionary},
              {"orbits", c.orbit_count},
              {"noncontractible", c.noncontractible_count},
              {"exhaustive", c.exhaustive}};
  out["witness"] = c.witness ? to_json(*c.witness) : json(nullptr);
  return out;
}

json to_json(const Counterexample& c) {
  return {{"graph", c.graph}, {"detail", c.detail}, {"witness", c.witness ? to_json(*c.witness) : json(nullptr)}};
}

json to_json(const CheckReport& r) {
  return {{"check", r.id},
          {"params", r.params},
          {"instances", r.instances},
          {"status", r.passed ? "pass" : "fail"},
          {"counterexample", r.counterexample ? to_json(*r.counterexample) : json(nullptr)},
          {"notes", r.notes},
          {"seconds", r.seconds}};
}

json to_json(const ConjectureReport& r) {
  json found = json::array();
  for (const auto& c : r.counterexamples) found.push_back(to_json(c));
  return {{"conjecture", r.id},
          {"searchSpace", r.search_space},
          {"params", r.params},
          {"instances", r.instances},
          {"status", r.refuted() ? "refuted" : "consistent"},
          {"counterexamples", found},
          {"notes", r.notes},
          {"seconds", r.seconds}};
}

OrbitSummary orbit_summary_from_json(const json& j) {
  try {
    OrbitSummary o{parse_state(j.at("rep").get<std::string>()),
                   j.at("period").get<std::uint64_t>(),
                   j.at("winding").get<std::vector<std::int64_t>>(),
                   j.at("stoneWinding").get<std::int64_t>(),
                   j.at("contractible").get<bool>(),
                   j.value("prerefractive", false)};
    return o;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad orbit summary: ") + e.what());
  }
}

}  // namespace billiards
