#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "billiards/orbits.hpp"

namespace billiards {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

// Range knobs shared by theorem checks and conjecture searches. Unset fields
// take per-check defaults; the resolved values are echoed in the report.
struct VerifyParams {
  std::optional<int> min_n;
  std::optional<int> max_n;
  std::optional<int> m;
  std::optional<int> n;
  std::optional<int> max_m;
  std::optional<int> max_part;
  int samples = 64;
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;
};

struct Counterexample {
  std::string graph;  // graph spec, parseable by parse_graph_spec
  std::string detail;
  std::optional<OrbitSummary> witness;
};

struct CheckReport {
  std::string id;
  nlohmann::json params;
  std::uint64_t instances = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  nlohmann::json notes = nlohmann::json::object();
  double seconds = 0;
};

struct ConjectureReport {
  std::string id;
  std::string search_space;
  nlohmann::json params;
  std::uint64_t instances = 0;
  std::vector<Counterexample> counterexamples;
  nlohmann::json notes = nlohmann::json::object();
  double seconds = 0;

  bool refuted() const { return !counterexamples.empty(); }
};

std::span<const std::string_view> check_ids();
std::span<const std::string_view> conjecture_ids();

// Evaluates a theorem over every instance in range. Throws RangeError for an
// unknown id or a range beyond the engine.
CheckReport run_check(std::string_view id, const VerifyParams& params = {});

// Searches for counterexamples. Never throws on refutation; the report says so.
ConjectureReport run_conjecture(std::string_view id, const VerifyParams& params = {});

// The graphs a check quantifies over at order n: every labeled graph for
// n <= 6, one per isomorphism class at n = 7, and `samples` uniformly random
// labeled graphs (seeded) at n = 8.
struct GraphSample {
  std::vector<Graph> graphs;
  std::string mode;  // "exhaustive" | "iso-dedup" | "sampled"
};
GraphSample graphs_of_order(int n, const VerifyParams& params);

}  // namespace billiards
