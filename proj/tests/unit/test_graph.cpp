#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "billiards/enumerate.hpp"
#include "billiards/errors.hpp"
#include "billiards/graph.hpp"

using namespace billiards;

namespace {

// Odd cycle search by brute force over closed walks: an odd closed walk exists
// iff an odd cycle does.
bool has_odd_cycle(const Graph& g) {
  const int n = g.order();
  for (int s = 1; s <= n; ++s) {
    // reach[parity] = set of vertices reachable from s by a walk of that parity
    std::vector<std::array<bool, 2>> seen(static_cast<std::size_t>(n + 1), {false, false});
    std::vector<std::pair<int, int>> stack{{s, 0}};
    seen[static_cast<std::size_t>(s)][0] = true;
    while (!stack.empty()) {
      auto [v, p] = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)][1 - p]) {
          seen[static_cast<std::size_t>(w)][1 - p] = true;
          stack.emplace_back(w, 1 - p);
        }
      }
    }
    if (seen[static_cast<std::size_t>(s)][1]) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("make_graph basics") {
  const Edge path_edges[] = {{1, 2}, {2, 3}};
  const Graph p3(3, path_edges);
  CHECK(p3 == path_graph(3));
  CHECK(p3.edge_count() == 2);
  CHECK(p3.adjacent(2, 1));
  CHECK_FALSE(p3.adjacent(1, 3));

  CHECK(Graph(3).edge_count() == 0);
  CHECK(Graph(1).order() == 1);

  const Edge loop[] = {{2, 2}};
  CHECK_THROWS_AS(Graph(3, loop), InputError);
  const Edge outside[] = {{1, 4}};
  CHECK_THROWS_AS(Graph(3, outside), InputError);
  CHECK_THROWS_AS(Graph(0), InputError);
}

TEST_CASE("families") {
  const Graph k4 = complete_graph(4);
  CHECK(k4.edge_count() == 6);
  for (int a = 1; a <= 4; ++a) CHECK(k4.degree(a) == 3);

  const Graph c5 = cycle_graph(5);
  CHECK(c5.edge_count() == 5);
  for (int a = 1; a <= 5; ++a) CHECK(c5.degree(a) == 2);

  const Graph k23 = complete_bipartite(2, 3);
  CHECK(k23.edge_count() == 6);
  CHECK(is_bipartite(k23).has_value());

  const Graph star = star_graph(5);
  CHECK(star.degree(1) == 4);

  const int seq[] = {4, 4};
  const Graph t = tree_from_prufer(4, seq);
  CHECK(t.edge_count() == 3);
  CHECK(t.degree(4) == 3);

  const int params[] = {2, 3};
  CHECK(family("kbip", params) == k23);
  CHECK_THROWS_AS(family("nonsense", params), InputError);
}

TEST_CASE("complement and compl_n") {
  CHECK(complement(complete_graph(4)) == empty_graph(4));
  const Edge e13[] = {{1, 3}};
  CHECK(complement(path_graph(3)) == Graph(3, e13));

  const Graph c = compl_n(complete_graph(2), 4);
  CHECK(c.edge_count() == 5);
  CHECK_FALSE(c.adjacent(1, 2));

  CHECK(compl_n(path_graph(3), 6).edge_count() == 13);

  for (int mask = 0; mask < 64; ++mask) {
    const Graph h = graph_from_mask(4, static_cast<std::uint64_t>(mask));
    CHECK(complement(complement(h)) == h);
    for (int n = 4; n <= 6; ++n) {
      const Graph co = complement(compl_n(h, n));
      const int first[] = {1, 2, 3, 4};
      CHECK(induced_subgraph(co, first) == h);
      for (int v = 5; v <= n; ++v) CHECK(co.degree(v) == 0);
    }
  }
}

TEST_CASE("wedge and disjoint union") {
  const Graph w = wedge(complete_graph(3), 1, path_graph(2), 1);
  CHECK(w.order() == 4);
  CHECK(w.edge_count() == 4);
  CHECK(w.adjacent(1, 4));
  CHECK(w.degree(1) == 3);

  // g2's remaining vertices keep their relative order after n1
  const Graph w2 = wedge(path_graph(2), 2, path_graph(3), 2);
  CHECK(w2.adjacent(2, 3));
  CHECK(w2.adjacent(2, 4));

  const Graph u = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK(u.order() == 6);
  CHECK(u.edge_count() == 6);
  CHECK(connected_components(u).size() == 2);

  const Graph u2 = disjoint_union(cycle_graph(5), complete_graph(3));
  CHECK(u2.order() == 8);
  CHECK(u2.edge_count() == 8);
}

TEST_CASE("bipartition") {
  const auto c6 = is_bipartite(cycle_graph(6));
  REQUIRE(c6);
  CHECK(c6->x.size() == 3);
  CHECK(c6->y.size() == 3);
  CHECK_FALSE(is_bipartite(cycle_graph(5)));

  const auto e4 = is_bipartite(empty_graph(4));
  REQUIRE(e4);
  CHECK(e4->x == std::vector<int>{1, 2, 3, 4});
  CHECK(e4->y.empty());

  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const auto bp = is_bipartite(g);
      CHECK(bp.has_value() == !has_odd_cycle(g));
      if (bp) {
        for (const Edge& e : g.edges()) {
          const bool a_in_x = std::find(bp->x.begin(), bp->x.end(), e.a) != bp->x.end();
          const bool b_in_x = std::find(bp->x.begin(), bp->x.end(), e.b) != bp->x.end();
          CHECK(a_in_x != b_in_x);
        }
      }
    }
  }
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const Graph g = random_graph(7, rng);
    CHECK(is_bipartite(g).has_value() == !has_odd_cycle(g));
  }
}

TEST_CASE("local blocking configuration") {
  // a=1, b=2, c=3, d=4, e=5
  const Edge es[] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {5, 4}};
  const auto w = has_local_blocking_config(Graph(5, es));
  REQUIRE(w);
  CHECK(*w == LocalConfig{1, 2, 3, 4});

  CHECK_FALSE(has_local_blocking_config(complete_graph(4)));
  for (const Graph& t : labeled_trees(6)) CHECK_FALSE(has_local_blocking_config(t));
}

TEST_CASE("complement components") {
  CHECK(complement_components(complete_graph(4)).size() == 4);
  CHECK(complement_components(empty_graph(3)) == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(complement_components(compl_n(path_graph(3), 6)) == std::vector<std::vector<int>>{{1, 2, 3}, {4}, {5}, {6}});
}

TEST_CASE("materialized graph partition") {
  const Edge reflect[] = {{1, 2}};
  const MaterializedGraph m(path_graph(3), reflect);
  CHECK(m.kind(1, 2) == EdgeKind::Reflect);
  CHECK(m.kind(2, 1) == EdgeKind::Reflect);
  CHECK(m.kind(2, 3) == EdgeKind::Refract);
  CHECK(m.kind(1, 3) == EdgeKind::None);
  CHECK_FALSE(m.refraction_only());
  CHECK(m.reflect_edges() == std::vector<Edge>{{1, 2}});
  CHECK(m.refract_edges() == std::vector<Edge>{{2, 3}});

  const Edge not_an_edge[] = {{1, 3}};
  CHECK_THROWS_AS(MaterializedGraph(path_graph(3), not_an_edge), InputError);

  const MaterializedGraph w = wedge(m, 3, MaterializedGraph(path_graph(2), reflect), 1);
  CHECK(w.kind(3, 4) == EdgeKind::Reflect);
  CHECK(w.kind(1, 2) == EdgeKind::Reflect);
}
