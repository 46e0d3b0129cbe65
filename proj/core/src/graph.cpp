#include "billiards/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "billiards/errors.hpp"

namespace billiards {

namespace {

constexpr std::uint64_t bit(int k0) { return std::uint64_t{1} << k0; }

void check_order(int n) {
  if (n < 1 || n > kMaxGraphOrder) {
    throw InputError("graph order must be in 1.." + std::to_string(kMaxGraphOrder) + ", got " +
                     std::to_string(n));
  }
}

// Vertices reachable from `start` (0-based) inside `allowed`.
std::uint64_t reach(const Graph& g, int start0, std::uint64_t allowed) {
  std::uint64_t seen = bit(start0);
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
      next |= g.row(std::countr_zero(f) + 1);
    }
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<int> to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask) + 1);
  return out;
}

}  // namespace

Graph::Graph(int order) {
  check_order(order);
  rows_.assign(static_cast<std::size_t>(order), 0);
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) {
    if (e.a < 1 || e.b > order) {
      throw InputError("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                       " out of range for " + std::to_string(order) + " vertices");
    }
    if (e.a == e.b) throw InputError("self-loop at vertex " + std::to_string(e.a));
    rows_[static_cast<std::size_t>(e.a - 1)] |= bit(e.b - 1);
    rows_[static_cast<std::size_t>(e.b - 1)] |= bit(e.a - 1);
  }
}

Graph Graph::from_rows(int order, std::vector<std::uint64_t> rows) {
  check_order(order);
  if (rows.size() != static_cast<std::size_t>(order)) throw InputError("row count does not match order");
  const std::uint64_t all = order == 64 ? ~std::uint64_t{0} : bit(order) - 1;
  for (int a = 0; a < order; ++a) {
    const std::uint64_t r = rows[static_cast<std::size_t>(a)];
    if ((r & ~all) != 0 || (r & bit(a)) != 0) throw InputError("invalid adjacency row");
    for (std::uint64_t m = r; m != 0; m &= m - 1) {
      if ((rows[static_cast<std::size_t>(std::countr_zero(m))] & bit(a)) == 0) {
        throw InputError("adjacency rows are not symmetric");
      }
    }
  }
  Graph g;
  g.rows_ = std::move(rows);
  return g;
}

void Graph::check_vertex(int a) const {
  if (a < 1 || a > order()) {
    throw InputError("vertex " + std::to_string(a) + " not in 1.." + std::to_string(order()));
  }
}

bool Graph::adjacent(int a, int b) const {
  check_vertex(a);
  check_vertex(b);
  return (row(a) & bit(b - 1)) != 0;
}

int Graph::degree(int a) const {
  check_vertex(a);
  return std::popcount(row(a));
}

int Graph::edge_count() const {
  int sum = 0;
  for (std::uint64_t r : rows_) sum += std::popcount(r);
  return sum / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int a = 1; a <= order(); ++a) {
    for (std::uint64_t m = row(a) & ~(bit(a) - 1); m != 0; m &= m - 1) {
      out.emplace_back(a, std::countr_zero(m) + 1);
    }
  }
  return out;
}

std::vector<int> Graph::neighbors(int a) const {
  check_vertex(a);
  return to_vertices(row(a));
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  check_order(n);
  std::vector<Edge> e;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) e.emplace_back(a, b);
  }
  return Graph(n, e);
}

Graph path_graph(int n) {
  check_order(n);
  std::vector<Edge> e;
  for (int a = 1; a < n; ++a) e.emplace_back(a, a + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int a = 1; a < n; ++a) e.emplace_back(a, a + 1);
  e.emplace_back(n, 1);
  return Graph(n, e);
}

Graph complete_bipartite(int l, int r) {
  if (l < 1 || r < 1) throw InputError("complete bipartite parts must be nonempty");
  check_order(l + r);
  std::vector<Edge> e;
  for (int a = 1; a <= l; ++a) {
    for (int b = l + 1; b <= l + r; ++b) e.emplace_back(a, b);
  }
  return Graph(l + r, e);
}

Graph star_graph(int n) {
  if (n < 2) throw InputError("star needs at least 2 vertices");
  return complete_bipartite(1, n - 1);
}

Graph tree_from_prufer(int n, std::span<const int> sequence) {
  check_order(n);
  if (n <= 2) {
    if (!sequence.empty()) throw InputError("trees on 1 or 2 vertices have an empty Prufer sequence");
    return n == 1 ? Graph(1) : path_graph(2);
  }
  if (sequence.size() != static_cast<std::size_t>(n - 2)) {
    throw InputError("Prufer sequence for " + std::to_string(n) + " vertices must have length " +
                     std::to_string(n - 2));
  }
  std::vector<int> degree(static_cast<std::size_t>(n + 1), 1);
  for (int s : sequence) {
    if (s < 1 || s > n) throw InputError("Prufer entry " + std::to_string(s) + " out of range");
    ++degree[static_cast<std::size_t>(s)];
  }
  std::vector<Edge> e;
  for (int s : sequence) {
    int leaf = 1;
    while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    e.emplace_back(leaf, s);
    --degree[static_cast<std::size_t>(leaf)];
    --degree[static_cast<std::size_t>(s)];
  }
  std::vector<int> last;
  for (int v = 1; v <= n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) last.push_back(v);
  }
  e.emplace_back(last.at(0), last.at(1));
  return Graph(n, e);
}

Graph family(std::string_view name, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw InputError("family '" + std::string(name) + "' takes " + std::to_string(count) +
                       " parameter(s)");
    }
  };
  if (name == "complete") {
    need(1);
    return complete_graph(params[0]);
  }
  if (name == "cycle") {
    need(1);
    return cycle_graph(params[0]);
  }
  if (name == "path") {
    need(1);
    return path_graph(params[0]);
  }
  if (name == "empty") {
    need(1);
    return empty_graph(params[0]);
  }
  if (name == "star") {
    need(1);
    return star_graph(params[0]);
  }
  if (name == "kbip") {
    need(2);
    return complete_bipartite(params[0], params[1]);
  }
  if (name == "tree") {
    if (params.empty()) throw InputError("family 'tree' needs a vertex count");
    return tree_from_prufer(params[0], params.subspan(1));
  }
  throw InputError("unknown graph family '" + std::string(name) + "'");
}

Graph complement(const Graph& g) {
  const int n = g.order();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) rows[static_cast<std::size_t>(a - 1)] = ~g.row(a) & all & ~bit(a - 1);
  return Graph::from_rows(n, std::move(rows));
}

Graph compl_n(const Graph& h, int n) {
  if (n < h.order()) {
    throw InputError("compl_n needs n >= " + std::to_string(h.order()) + ", got " + std::to_string(n));
  }
  if (n == h.order()) return complement(h);
  return complement(disjoint_union(h, Graph(n - h.order())));
}

Graph wedge(const Graph& g1, int v1, const Graph& g2, int v2) {
  return wedge(MaterializedGraph(g1), v1, MaterializedGraph(g2), v2).graph();
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  return disjoint_union(MaterializedGraph(g1), MaterializedGraph(g2)).graph();
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (perm.size() != static_cast<std::size_t>(n)) throw InputError("relabeling has wrong length");
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  for (int p : perm) {
    if (p < 1 || p > n || used[static_cast<std::size_t>(p)]) throw InputError("relabeling is not a permutation");
    used[static_cast<std::size_t>(p)] = true;
  }
  std::vector<Edge> e;
  for (const Edge& x : g.edges()) {
    e.emplace_back(perm[static_cast<std::size_t>(x.a - 1)], perm[static_cast<std::size_t>(x.b - 1)]);
  }
  return Graph(n, e);
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  if (vertices.empty()) throw InputError("induced subgraph needs at least one vertex");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) e.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
    }
  }
  return Graph(static_cast<int>(vertices.size()), e);
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    if (color[static_cast<std::size_t>(root)] >= 0) continue;
    color[static_cast<std::size_t>(root)] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (std::uint64_t m = g.row(u + 1); m != 0; m &= m - 1) {
        const int w = std::countr_zero(m);
        int& cw = color[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - color[static_cast<std::size_t>(u)];
          queue.push_back(w);
        } else if (cw == color[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (int a = 0; a < n; ++a) (color[static_cast<std::size_t>(a)] == 0 ? parts.x : parts.y).push_back(a + 1);
  return parts;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.order();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  std::vector<std::vector<int>> out;
  std::uint64_t left = all;
  while (left != 0) {
    const std::uint64_t comp = reach(g, std::countr_zero(left), all);
    out.push_back(to_vertices(comp));
    left &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

std::vector<std::vector<int>> complement_components(const Graph& g) {
  return connected_components(complement(g));
}

std::optional<LocalConfig> has_local_blocking_config(const Graph& g) {
  const int n = g.order();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  for (int a = 1; a <= n; ++a) {
    if (std::popcount(g.row(a)) != 3) continue;
    for (int b : to_vertices(g.row(a))) {
      if (std::popcount(g.row(b)) != 3) continue;
      const std::uint64_t rest = g.row(a) & ~bit(b - 1);
      if (rest != (g.row(b) & ~bit(a - 1))) continue;
      const int c = std::countr_zero(rest) + 1;
      const int d = 64 - std::countl_zero(rest);
      const std::uint64_t allowed = all & ~bit(a - 1) & ~bit(b - 1) & ~bit(c - 1);
      for (std::uint64_t z = g.row(c) & allowed & ~bit(d - 1); z != 0; z &= z - 1) {
        if ((reach(g, std::countr_zero(z), allowed) & bit(d - 1)) != 0) return LocalConfig{a, b, c, d};
      }
    }
  }
  return std::nullopt;
}

MaterializedGraph::MaterializedGraph(Graph g)
    : graph_(std::move(g)), reflect_(static_cast<std::size_t>(graph_.order()), 0) {}

MaterializedGraph::MaterializedGraph(Graph g, std::span<const Edge> reflect) : MaterializedGraph(std::move(g)) {
  for (const Edge& e : reflect) {
    if (e.a < 1 || e.b > order() || e.a == e.b || !graph_.adjacent(e.a, e.b)) {
      throw InputError("reflection edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                       " is not an edge of the graph");
    }
    reflect_[static_cast<std::size_t>(e.a - 1)] |= bit(e.b - 1);
    reflect_[static_cast<std::size_t>(e.b - 1)] |= bit(e.a - 1);
  }
}

EdgeKind MaterializedGraph::kind(int a, int b) const {
  if (!graph_.adjacent(a, b)) return EdgeKind::None;
  return (reflect_[static_cast<std::size_t>(a - 1)] & bit(b - 1)) != 0 ? EdgeKind::Reflect : EdgeKind::Refract;
}

bool MaterializedGraph::refraction_only() const {
  return std::all_of(reflect_.begin(), reflect_.end(), [](std::uint64_t r) { return r == 0; });
}

std::vector<Edge> MaterializedGraph::reflect_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : graph_.edges()) {
    if (kind(e.a, e.b) == EdgeKind::Reflect) out.push_back(e);
  }
  return out;
}

std::vector<Edge> MaterializedGraph::refract_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : graph_.edges()) {
    if (kind(e.a, e.b) == EdgeKind::Refract) out.push_back(e);
  }
  return out;
}

MaterializedGraph wedge(const MaterializedGraph& g1, int v1, const MaterializedGraph& g2, int v2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  if (v1 < 1 || v1 > n1) throw InputError("wedge vertex " + std::to_string(v1) + " not in first graph");
  if (v2 < 1 || v2 > n2) throw InputError("wedge vertex " + std::to_string(v2) + " not in second graph");
  std::vector<int> label(static_cast<std::size_t>(n2 + 1));
  int next = n1 + 1;
  for (int u = 1; u <= n2; ++u) label[static_cast<std::size_t>(u)] = u == v2 ? v1 : next++;
  std::vector<Edge> edges = g1.graph().edges();
  std::vector<Edge> reflect = g1.reflect_edges();
  for (const Edge& e : g2.graph().edges()) {
    const Edge mapped(label[static_cast<std::size_t>(e.a)], label[static_cast<std::size_t>(e.b)]);
    edges.push_back(mapped);
    if (g2.kind(e.a, e.b) == EdgeKind::Reflect) reflect.push_back(mapped);
  }
  return MaterializedGraph(Graph(n1 + n2 - 1, edges), reflect);
}

MaterializedGraph disjoint_union(const MaterializedGraph& g1, const MaterializedGraph& g2) {
  const int n1 = g1.order();
  std::vector<Edge> edges = g1.graph().edges();
  std::vector<Edge> reflect = g1.reflect_edges();
  for (const Edge& e : g2.graph().edges()) {
    const Edge shifted(e.a + n1, e.b + n1);
    edges.push_back(shifted);
    if (g2.kind(e.a, e.b) == EdgeKind::Reflect) reflect.push_back(shifted);
  }
  return MaterializedGraph(Graph(n1 + g2.order(), edges), reflect);
}

}  // namespace billiards
