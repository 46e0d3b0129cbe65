#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "billiards/dynamics.hpp"
#include "billiards/graph.hpp"
#include "billiards/state.hpp"

namespace billiards {

// Full state-space scans allocate one bit per state; n = 10 is 72.5M states.
inline constexpr int kMaxOrbitOrder = 10;

struct OrbitSummary {
  BilliardState representative;  // state of minimal index in the orbit
  std::uint64_t period = 0;
  std::vector<std::int64_t> winding;  // indexed by vertex - 1
  std::int64_t stone_winding = 0;
  bool contractible = true;
  bool has_prerefractive = false;

  friend bool operator==(const OrbitSummary&, const OrbitSummary&) = default;
};

struct TraceRecord {
  std::uint64_t step = 0;  // 1-based: record k describes the k-th application
  BilliardState state;     // state after the step
  StepEvent event;
  std::vector<std::int64_t> replica_steps;  // cumulative net clockwise steps per vertex
  std::int64_t stone_steps = 0;
};

// Follows the orbit of s until it recurs. Net clockwise steps are accumulated
// from step events and divided by n at closure; a remainder throws
// InvariantViolation.
OrbitSummary orbit_summary(const MaterializedGraph& m, const BilliardState& s);

struct OrbitScanOptions {
  int workers = 1;
  // Called once per orbit found; returning true stops the scan early. Must be
  // thread-safe when workers > 1.
  std::function<bool(const OrbitSummary&)> stop_when;
};

// Partitions the whole state space into orbits, ordered by representative
// index. The result does not depend on the worker count (unless stop_when
// ends the scan early). Throws RangeError unless 3 <= n <= kMaxOrbitOrder.
std::vector<OrbitSummary> all_orbits(const MaterializedGraph& m, const OrbitScanOptions& options = {});

struct OrbitLabeling {
  std::vector<OrbitSummary> orbits;
  std::vector<std::uint32_t> orbit_of;  // state index -> position in `orbits`
};

// all_orbits plus the orbit id of every state. Single-threaded; intended for
// n <= 8.
OrbitLabeling label_orbits(const MaterializedGraph& m);

std::vector<TraceRecord> trace(const MaterializedGraph& m, const BilliardState& s, std::uint64_t steps);

}  // namespace billiards
