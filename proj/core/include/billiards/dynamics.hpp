#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "billiards/graph.hpp"
#include "billiards/state.hpp"

namespace billiards {

enum class StepKind : std::uint8_t { Window, Refract, Reflect };

// What one application of the step map did. `swapped` holds the vertex that
// moved clockwise first and the one that moved counterclockwise second.
struct StepEvent {
  StepKind kind = StepKind::Window;
  std::optional<std::pair<int, int>> swapped;
  int stone_delta = 0;

  friend bool operator==(const StepEvent&, const StepEvent&) = default;
};

struct Step {
  BilliardState state;
  StepEvent event;
};

// One step of refractive toric promotion with mirrors. With a = v^-1(i) and
// b = v^-1(i+1):
//   {a,b} not an edge   -> swap positions i, i+1;  (i + eps,  eps)
//   {a,b} refractive    -> swap positions i, i+1;  (i - eps, -eps)
//   {a,b} reflective    -> no swap;                (i + eps,  eps)
// Throws RangeError for n < 3.
Step theta(const MaterializedGraph& m, const BilliardState& s);

// Same as theta but updates `s` in place; used by the orbit engine.
StepEvent advance(const MaterializedGraph& m, BilliardState& s);

// Reverses the stone: (v, i - eps, -eps). The stone and all replicas stay put.
BilliardState conjugate(const BilliardState& s);

// The unique t with theta(m, t).state == s, computed as
// conjugate(theta(m, conjugate(s))).
BilliardState theta_inverse(const MaterializedGraph& m, const BilliardState& s);

enum class PivotalKind : std::uint8_t { NotPrerefractive, PrePivotal, PostPivotal, Flipping };

// Classifies a state of a refraction-only graph by the adjacencies among the
// coexisting replica a, the pointed-at replica b and the next replica x two
// steps ahead of the stone. Throws InputError when m has reflection edges.
PivotalKind pivotal_kind(const MaterializedGraph& m, const BilliardState& s);

// Directed non-edge (coexisting vertex, pointed vertex) of s, or of the
// nearest prerefractive state found by stepping backwards at most
// `period_bound` times. Empty when none is found.
std::optional<std::pair<int, int>> bridged_edge(const MaterializedGraph& m, const BilliardState& s,
                                                std::uint64_t period_bound);

const char* to_string(StepKind kind);
const char* to_string(PivotalKind kind);

}  // namespace billiards
