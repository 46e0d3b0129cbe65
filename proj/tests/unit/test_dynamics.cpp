#include <doctest.h>

#include <map>
#include <vector>

#include "billiards/dynamics.hpp"
#include "billiards/enumerate.hpp"
#include "billiards/errors.hpp"
#include "billiards/state.hpp"

using namespace billiards;

namespace {

BilliardState make(std::vector<int> perm, int i, int eps) {
  return BilliardState(perm, i, eps > 0 ? Orientation::Clockwise : Orientation::Counterclockwise);
}

// Every way of splitting the edges of g into reflect and refract.
std::vector<MaterializedGraph> materializations(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  std::vector<MaterializedGraph> out;
  for (std::uint32_t sub = 0; sub < (1u << edges.size()); ++sub) {
    std::vector<Edge> reflect;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if ((sub >> k) & 1) reflect.push_back(edges[k]);
    }
    out.emplace_back(g, reflect);
  }
  return out;
}

void check_step_laws(const MaterializedGraph& m) {
  const int n = m.order();
  for (std::uint64_t k = 0; k < state_space_size(n); ++k) {
    const BilliardState s = state_from_index(n, k);
    const Step t = theta(m, s);
    REQUIRE(theta_inverse(m, t.state) == s);
    REQUIRE(theta(m, theta_inverse(m, s)).state == s);
    REQUIRE(conjugate(t.state) == theta_inverse(m, conjugate(s)));

    // only positions i, i+1 change hands
    const int i0 = s.pointer0();
    for (int p = 0; p < n; ++p) {
      if (p != i0 && p != s.wrap(i0 + 1)) REQUIRE(t.state.vertex0(p) == s.vertex0(p));
    }
    REQUIRE(t.state.stone0() == s.wrap(s.stone0() + t.event.stone_delta));
    const int eps = sign(s.orientation());
    switch (t.event.kind) {
      case StepKind::Reflect:
        REQUIRE_FALSE(t.event.swapped);
        REQUIRE(t.event.stone_delta == eps);
        REQUIRE(t.state.coin_vertex() == s.pointed_vertex());
        REQUIRE(m.kind(s.coin_vertex(), t.state.coin_vertex()) == EdgeKind::Reflect);
        break;
      case StepKind::Window:
        REQUIRE(t.event.swapped);
        REQUIRE(t.event.stone_delta == eps);
        REQUIRE(t.state.coin_vertex() == s.coin_vertex());
        break;
      case StepKind::Refract:
        REQUIRE(t.event.swapped);
        REQUIRE(t.event.stone_delta == 0);
        REQUIRE(t.state.coin_vertex() == s.pointed_vertex());
        REQUIRE(m.kind(s.coin_vertex(), t.state.coin_vertex()) == EdgeKind::Refract);
        break;
    }
    if (t.event.swapped) {
      const auto [cw, ccw] = *t.event.swapped;
      REQUIRE(t.state.position0(cw - 1) == s.wrap(s.position0(cw - 1) + 1));
      REQUIRE(t.state.position0(ccw - 1) == s.wrap(s.position0(ccw - 1) - 1));
    }
  }
}

}  // namespace

TEST_CASE("state literal and index") {
  const BilliardState s = make({2, 1, 3}, 3, -1);
  CHECK(format_state(s) == "perm=2,1,3;i=3;eps=-1");
  CHECK(parse_state("perm=2,1,3;i=3;eps=-1") == s);
  CHECK(s.stone_position() == 1);
  CHECK(s.coin_vertex() == 2);
  CHECK(s.pointed_vertex() == 3);
  CHECK_THROWS_AS(parse_state("perm=1,1,3;i=1;eps=+1"), InputError);
  CHECK_THROWS_AS(parse_state("perm=1,2,3;i=1;eps=0"), InputError);
  CHECK_THROWS_AS(parse_state("perm=1,2,3"), InputError);

  for (int n = 1; n <= 5; ++n) {
    CHECK(state_space_size(n) == static_cast<std::uint64_t>(2 * n) *
                                     std::vector<std::uint64_t>{1, 1, 2, 6, 24, 120}[static_cast<std::size_t>(n)]);
    for (std::uint64_t k = 0; k < state_space_size(n); ++k) {
      REQUIRE(state_index(state_from_index(n, k)) == k);
    }
  }
  CHECK(state_index(make({1, 2, 3}, 1, -1)) == 0);
  CHECK(state_index(make({1, 2, 3}, 1, +1)) == 1);
  CHECK(state_index(make({1, 2, 3}, 2, -1)) == 2);
  CHECK(state_index(make({1, 3, 2}, 1, -1)) == 6);
}

TEST_CASE("theta examples") {
  SUBCASE("refraction on P_3") {
    const Step t = theta(path_graph(3), make({1, 2, 3}, 1, +1));
    CHECK(t.state == make({2, 1, 3}, 3, -1));
    CHECK(t.event.kind == StepKind::Refract);
    CHECK(t.event.stone_delta == 0);
    CHECK(t.state.stone_position() == 1);
    CHECK(t.event.swapped == std::pair{1, 2});
  }
  SUBCASE("window") {
    const Step t = theta(empty_graph(3), make({1, 2, 3}, 1, +1));
    CHECK(t.state == make({2, 1, 3}, 2, +1));
    CHECK(t.event.kind == StepKind::Window);
    CHECK(t.event.stone_delta == 1);
  }
  SUBCASE("reflection") {
    const Edge reflect[] = {{1, 2}};
    const Step t = theta(MaterializedGraph(Graph(3, reflect), reflect), make({1, 2, 3}, 1, +1));
    CHECK(t.state == make({1, 2, 3}, 2, +1));
    CHECK(t.event.kind == StepKind::Reflect);
    CHECK_FALSE(t.event.swapped);
  }
  CHECK_THROWS_AS(theta(path_graph(2), make({1, 2}, 1, +1)), RangeError);
  CHECK_THROWS_AS(theta(path_graph(4), make({1, 2, 3}, 1, +1)), InputError);
}

TEST_CASE("conjugate keeps the stone") {
  const BilliardState s = make({3, 1, 2, 4}, 1, +1);
  const BilliardState c = conjugate(s);
  CHECK(c == make({3, 1, 2, 4}, 4, -1));
  CHECK(c.stone_position() == s.stone_position());
  CHECK(conjugate(c) == s);
}

TEST_CASE("bijectivity, conjugation identity and step laws on refraction-only graphs, n <= 5") {
  for (int n = 3; n <= 5; ++n) {
    for (const Graph& g : enumerate_graphs(n)) check_step_laws(g);
  }
}

TEST_CASE("the same laws on every materialized graph with n <= 4") {
  for (int n = 3; n <= 4; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      for (const MaterializedGraph& m : materializations(g)) check_step_laws(m);
    }
  }
}

TEST_CASE("pivotal kinds") {
  const std::uint64_t states3 = state_space_size(3);
  for (std::uint64_t k = 0; k < states3; ++k) {
    const BilliardState s = state_from_index(3, k);
    CHECK(pivotal_kind(complete_graph(3), s) == PivotalKind::NotPrerefractive);
    CHECK(pivotal_kind(empty_graph(3), s) == PivotalKind::PrePivotal);
  }
  // compl_4(K_2): only {1,2} is missing; stone on 1 pointing at 2, x = 3.
  const MaterializedGraph g = compl_n(complete_graph(2), 4);
  CHECK(pivotal_kind(g, make({1, 2, 3, 4}, 1, +1)) == PivotalKind::Flipping);
  // P_4 = 1-2-3-4 has non-edges; stone on 1 pointing at 3, x = 2 adjacent to 1 and 3
  const MaterializedGraph p4 = path_graph(4);
  CHECK(pivotal_kind(p4, make({1, 3, 2, 4}, 1, +1)) == PivotalKind::Flipping);
  // stone on 1 pointing at 4, x = 2: adjacent to 1 only
  CHECK(pivotal_kind(p4, make({1, 3, 4, 2}, 1, +1)) == PivotalKind::PostPivotal);
  // stone on 1 pointing at 3, x = 4: not adjacent to 1
  CHECK(pivotal_kind(p4, make({1, 4, 2, 3}, 1, +1)) == PivotalKind::PrePivotal);

  const Edge reflect[] = {{1, 2}};
  CHECK_THROWS_AS(pivotal_kind(MaterializedGraph(path_graph(3), reflect), make({1, 2, 3}, 1, +1)), InputError);
}

TEST_CASE("bridged edges") {
  CHECK(bridged_edge(empty_graph(3), make({1, 2, 3}, 1, +1), 36) == std::pair{1, 2});
  for (std::uint64_t k = 0; k < state_space_size(4); ++k) {
    CHECK_FALSE(bridged_edge(complete_graph(4), state_from_index(4, k), 96));
  }

  // Census over compl_5(K_2) from the brute-force oracle.
  const MaterializedGraph g = compl_n(complete_graph(2), 5);
  std::map<std::pair<int, int>, int> census;
  int none = 0;
  for (std::uint64_t k = 0; k < state_space_size(5); ++k) {
    const auto e = bridged_edge(g, state_from_index(5, k), state_space_size(5));
    if (e) {
      ++census[*e];
    } else {
      ++none;
    }
  }
  CHECK(census.size() == 2);
  CHECK(census[{1, 2}] == 180);
  CHECK(census[{2, 1}] == 180);
  CHECK(none == 840);
}
