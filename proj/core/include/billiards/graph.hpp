#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace billiards {

inline constexpr int kMaxGraphOrder = 64;

// Unordered vertex pair, stored with a < b. Vertices are 1-based.
struct Edge {
  int a = 0;
  int b = 0;

  Edge() = default;
  Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 1..n.
//
// Adjacency is kept as one 64-bit row per vertex; bit k of row(a) is set when
// a is adjacent to vertex k+1. Graphs are immutable values: every operation
// below returns a new graph.
class Graph {
 public:
  explicit Graph(int order);

  // Builds the graph with exactly the given edges (duplicates collapse).
  // Throws InputError on out-of-range endpoints or self-loops.
  Graph(int order, std::span<const Edge> edges);

  // Low-level constructor from 0-based bit rows; validates symmetry.
  static Graph from_rows(int order, std::vector<std::uint64_t> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  bool adjacent(int a, int b) const;
  int degree(int a) const;
  int edge_count() const;
  std::vector<Edge> edges() const;
  std::vector<int> neighbors(int a) const;

  // 0-based bit row of vertex a (a is 1-based).
  std::uint64_t row(int a) const { return rows_[static_cast<std::size_t>(a - 1)]; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;
  void check_vertex(int a) const;

  std::vector<std::uint64_t> rows_;
};

// Path, cycle, complete, ... with the standard labelings.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
// Vertices 1..l against l+1..l+r.
Graph complete_bipartite(int l, int r);
// Center is vertex 1.
Graph star_graph(int n);
// Labeled tree on n = seq.size() + 2 vertices (n = 1 or 2 need an explicit n).
Graph tree_from_prufer(int n, std::span<const int> sequence);

// Dispatches on a family id: complete, cycle, path, kbip, star, empty, tree.
// For "tree", params are n followed by the Prufer sequence.
Graph family(std::string_view name, std::span<const int> params);

Graph complement(const Graph& g);
// Complement of h plus n - m isolated vertices labeled m+1..n.
Graph compl_n(const Graph& h, int n);
// Glues v1 of g1 to v2 of g2. g1 keeps its labels; g2's other vertices
// become n1+1.. in increasing original order.
Graph wedge(const Graph& g1, int v1, const Graph& g2, int v2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
// perm[k-1] is the new label of vertex k.
Graph relabel(const Graph& g, std::span<const int> perm);
// Induced subgraph on the (sorted) vertex list, relabeled 1..k in order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

struct Bipartition {
  std::vector<int> x;
  std::vector<int> y;
};

// BFS 2-coloring; each component's smallest vertex goes to x.
std::optional<Bipartition> is_bipartite(const Graph& g);

bool is_connected(const Graph& g);
// Components as sorted vertex lists, ordered by minimum vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);
std::vector<std::vector<int>> complement_components(const Graph& g);

struct LocalConfig {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;

  friend bool operator==(const LocalConfig&, const LocalConfig&) = default;
};

// Looks for a, b of degree 3 with N(a) = {b,c,d}, N(b) = {a,c,d} and a c-d
// path of length >= 2 avoiding a and b. Returns the first witness in
// lexicographic (a, b, c, d) order.
std::optional<LocalConfig> has_local_blocking_config(const Graph& g);

enum class EdgeKind : std::uint8_t { None, Refract, Reflect };

// A graph whose edges are split into refraction and reflection edges. The
// plain-graph case has every edge refractive.
class MaterializedGraph {
 public:
  MaterializedGraph(Graph g);  // NOLINT: implicit, refraction-only
  MaterializedGraph(Graph g, std::span<const Edge> reflect);

  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  EdgeKind kind(int a, int b) const;
  bool refraction_only() const;
  std::vector<Edge> reflect_edges() const;
  std::vector<Edge> refract_edges() const;

  // 0-based bit rows, indexed by 0-based vertex.
  std::uint64_t reflect_row0(int a0) const { return reflect_[static_cast<std::size_t>(a0)]; }
  std::uint64_t adjacency_row0(int a0) const { return graph_.row(a0 + 1); }

  friend bool operator==(const MaterializedGraph&, const MaterializedGraph&) = default;

 private:
  Graph graph_;
  std::vector<std::uint64_t> reflect_;
};

MaterializedGraph wedge(const MaterializedGraph& g1, int v1, const MaterializedGraph& g2, int v2);
MaterializedGraph disjoint_union(const MaterializedGraph& g1, const MaterializedGraph& g2);

}  // namespace billiards
