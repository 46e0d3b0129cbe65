#include "billiards/dynamics.hpp"

#include <string>

#include "billiards/errors.hpp"

namespace billiards {

namespace {

void check_dynamics(const MaterializedGraph& m, const BilliardState& s) {
  if (m.order() < 3) throw RangeError("the step map needs n >= 3, got n=" + std::to_string(m.order()));
  if (s.order() != m.order()) {
    throw InputError("state has " + std::to_string(s.order()) + " vertices but the graph has " +
                     std::to_string(m.order()));
  }
}

bool adjacent0(const MaterializedGraph& m, int a0, int b0) { return ((m.adjacency_row0(a0) >> b0) & 1) != 0; }

}  // namespace

StepEvent advance(const MaterializedGraph& m, BilliardState& s) {
  const int i = s.pointer0();
  const int next = s.wrap(i + 1);
  const int a = s.vertex0(i);
  const int b = s.vertex0(next);
  const int eps = sign(s.orientation());
  if (!adjacent0(m, a, b)) {
    s.swap_positions0(i, next);
    s.set_pointer0(i + eps);
    return {StepKind::Window, std::pair{a + 1, b + 1}, eps};
  }
  if (((m.reflect_row0(a) >> b) & 1) != 0) {
    s.set_pointer0(i + eps);
    return {StepKind::Reflect, std::nullopt, eps};
  }
  s.swap_positions0(i, next);
  s.set_pointer0(i - eps);
  s.set_orientation(flip(s.orientation()));
  return {StepKind::Refract, std::pair{a + 1, b + 1}, 0};
}

Step theta(const MaterializedGraph& m, const BilliardState& s) {
  check_dynamics(m, s);
  Step out{s, {}};
  out.event = advance(m, out.state);
  return out;
}

BilliardState conjugate(const BilliardState& s) {
  BilliardState t = s;
  t.set_pointer0(s.pointer0() - sign(s.orientation()));
  t.set_orientation(flip(s.orientation()));
  return t;
}

BilliardState theta_inverse(const MaterializedGraph& m, const BilliardState& s) {
  return conjugate(theta(m, conjugate(s)).state);
}

PivotalKind pivotal_kind(const MaterializedGraph& m, const BilliardState& s) {
  check_dynamics(m, s);
  if (!m.refraction_only()) throw InputError("pivotal analysis needs a graph without reflection edges");
  const int eps = sign(s.orientation());
  const int j = s.stone0();
  const int a = s.vertex0(j);
  const int b = s.vertex0(s.wrap(j + eps));
  if (adjacent0(m, a, b)) return PivotalKind::NotPrerefractive;
  const int x = s.vertex0(s.wrap(j + 2 * eps));
  if (!adjacent0(m, a, x)) return PivotalKind::PrePivotal;
  if (!adjacent0(m, b, x)) return PivotalKind::PostPivotal;
  return PivotalKind::Flipping;
}

std::optional<std::pair<int, int>> bridged_edge(const MaterializedGraph& m, const BilliardState& s,
                                                std::uint64_t period_bound) {
  check_dynamics(m, s);
  BilliardState cur = s;
  for (std::uint64_t back = 0;; ++back) {
    const int a = cur.coin_vertex();
    const int b = cur.pointed_vertex();
    if (!m.graph().adjacent(a, b)) return std::pair{a, b};
    if (back >= period_bound) return std::nullopt;
    cur = theta_inverse(m, cur);
  }
}

const char* to_string(StepKind kind) {
  switch (kind) {
    case StepKind::Window:
      return "window";
    case StepKind::Refract:
      return "refract";
    case StepKind::Reflect:
      return "reflect";
  }
  return "?";
}

const char* to_string(PivotalKind kind) {
  switch (kind) {
    case PivotalKind::NotPrerefractive:
      return "not-prerefractive";
    case PivotalKind::PrePivotal:
      return "pre-pivotal";
    case PivotalKind::PostPivotal:
      return "post-pivotal";
    case PivotalKind::Flipping:
      return "flipping";
  }
  return "?";
}

}  // namespace billiards
