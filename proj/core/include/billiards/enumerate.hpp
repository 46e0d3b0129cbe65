#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "billiards/graph.hpp"

namespace billiards {

// Largest order for which all upper-triangle pairs fit in one 64-bit mask.
inline constexpr int kMaxMaskOrder = 11;
// Largest order accepted for iso-deduplicated enumeration.
inline constexpr int kMaxDedupOrder = 8;

// 2^C(n,2).
std::uint64_t labeled_graph_count(int n);

// Bit k of the mask is the k-th pair in graph6 order (1,2), (1,3), (2,3), ...
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_of(const Graph& g);

// Relabeling whose upper-triangle bit string (graph6 order) is
// lexicographically smallest. Equivalently, the relabeling with the smallest
// graph6 encoding.
Graph canonical_form(const Graph& g);
bool is_canonical(const Graph& g);
bool isomorphic(const Graph& g, const Graph& h);

struct EnumerateOptions {
  bool connected = false;
  bool iso_dedup = false;
  // Half-open mask range; `end` is clamped to labeled_graph_count(n).
  std::uint64_t begin = 0;
  std::uint64_t end = UINT64_MAX;
};

// Streams labeled graphs in increasing mask order, filtered by the options.
class GraphEnumerator {
 public:
  GraphEnumerator(int n, EnumerateOptions options = {});

  std::optional<Graph> next();

 private:
  int n_;
  EnumerateOptions options_;
  std::uint64_t cursor_;
};

std::vector<Graph> enumerate_graphs(int n, EnumerateOptions options = {});

// All labeled trees on n vertices, in lexicographic Prufer-sequence order.
std::vector<Graph> labeled_trees(int n);
// Uniform over labeled trees (uniform Prufer sequence).
Graph random_tree(int n, std::mt19937_64& rng);
// Uniform over labeled graphs.
Graph random_graph(int n, std::mt19937_64& rng);

struct RootedTree {
  Graph tree;
  int root = 1;
};

// One representative per rooted-tree isomorphism class with 1..max_order
// vertices, ordered by size and then by first appearance in Prufer order.
std::vector<RootedTree> rooted_tree_shapes(int max_order);

}  // namespace billiards
