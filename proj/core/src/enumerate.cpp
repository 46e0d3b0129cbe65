#include "billiards/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "billiards/errors.hpp"

namespace billiards {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

void check_mask_order(int n) {
  if (n < 1 || n > kMaxMaskOrder) {
    throw RangeError("mask encoding supports 1.." + std::to_string(kMaxMaskOrder) + " vertices, got " +
                     std::to_string(n));
  }
}

// Backtracking search over relabelings. Position t of the new labeling is
// filled with original vertex perm[t]; column t contributes the bits
// adjacent(perm[s], perm[t]) for s < t, most significant first. `best` holds
// the smallest full key found so far (first pair most significant).
class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, bool stop_on_smaller)
      : g_(g), n_(g.order()), total_(pair_count(n_)), stop_on_smaller_(stop_on_smaller) {
    perm_.assign(static_cast<std::size_t>(n_), 0);
    identity_key_ = key_of_identity();
    best_key_ = identity_key_;
    best_perm_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) best_perm_[static_cast<std::size_t>(i)] = i;
  }

  void run() { extend(0, 0, 0); }

  bool found_smaller() const { return smaller_found_; }
  const std::vector<int>& best_perm() const { return best_perm_; }

 private:
  std::uint64_t key_of_identity() const {
    std::uint64_t key = 0;
    for (int t = 1; t < n_; ++t) {
      for (int s = 0; s < t; ++s) key = (key << 1) | ((g_.row(s + 1) >> t) & 1);
    }
    return key;
  }

  // Returns true when the search should stop.
  bool extend(int t, std::uint64_t used, std::uint64_t prefix) {
    if (t == n_) {
      if (prefix < best_key_) {
        best_key_ = prefix;
        for (int i = 0; i < n_; ++i) best_perm_[static_cast<std::size_t>(i)] = perm_[static_cast<std::size_t>(i)];
        smaller_found_ = true;
        if (stop_on_smaller_) return true;
      }
      return false;
    }
    const int bits_after = total_ - pair_count(t + 1);
    for (int o = 0; o < n_; ++o) {
      if ((used >> o) & 1) continue;
      std::uint64_t next = prefix;
      const std::uint64_t row = g_.row(o + 1);
      for (int s = 0; s < t; ++s) next = (next << 1) | ((row >> perm_[static_cast<std::size_t>(s)]) & 1);
      const std::uint64_t best_prefix = best_key_ >> bits_after;
      if (next > best_prefix) continue;
      if (stop_on_smaller_ && next < best_prefix) {
        smaller_found_ = true;
        return true;
      }
      perm_[static_cast<std::size_t>(t)] = o;
      if (extend(t + 1, used | (std::uint64_t{1} << o), next)) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int total_;
  bool stop_on_smaller_;
  std::vector<int> perm_;
  std::vector<int> best_perm_;
  std::uint64_t identity_key_ = 0;
  std::uint64_t best_key_ = 0;
  bool smaller_found_ = false;
};

}  // namespace

std::uint64_t labeled_graph_count(int n) {
  check_mask_order(n);
  return std::uint64_t{1} << pair_count(n);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  check_mask_order(n);
  std::vector<Edge> edges;
  int k = 0;
  for (int b = 2; b <= n; ++b) {
    for (int a = 1; a < b; ++a, ++k) {
      if ((mask >> k) & 1) edges.emplace_back(a, b);
    }
  }
  if (k < 64 && (mask >> k) != 0) throw InputError("mask has bits beyond the upper triangle");
  return Graph(n, edges);
}

std::uint64_t mask_of(const Graph& g) {
  check_mask_order(g.order());
  std::uint64_t mask = 0;
  int k = 0;
  for (int b = 2; b <= g.order(); ++b) {
    for (int a = 1; a < b; ++a, ++k) {
      if ((g.row(a) >> (b - 1)) & 1) mask |= std::uint64_t{1} << k;
    }
  }
  return mask;
}

Graph canonical_form(const Graph& g) {
  check_mask_order(g.order());
  CanonicalSearch search(g, false);
  search.run();
  // best_perm[t] is the original vertex that receives new label t+1.
  std::vector<int> relabeling(static_cast<std::size_t>(g.order()));
  for (int t = 0; t < g.order(); ++t) {
    relabeling[static_cast<std::size_t>(search.best_perm()[static_cast<std::size_t>(t)])] = t + 1;
  }
  return relabel(g, relabeling);
}

bool is_canonical(const Graph& g) {
  check_mask_order(g.order());
  CanonicalSearch search(g, true);
  search.run();
  return !search.found_smaller();
}

bool isomorphic(const Graph& g, const Graph& h) {
  return g.order() == h.order() && g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h);
}

GraphEnumerator::GraphEnumerator(int n, EnumerateOptions options) : n_(n), options_(options) {
  check_mask_order(n);
  if (options_.iso_dedup && n > kMaxDedupOrder) {
    throw RangeError("iso-deduplicated enumeration supports n <= " + std::to_string(kMaxDedupOrder));
  }
  options_.end = std::min(options_.end, labeled_graph_count(n));
  cursor_ = options_.begin;
}

std::optional<Graph> GraphEnumerator::next() {
  while (cursor_ < options_.end) {
    Graph g = graph_from_mask(n_, cursor_++);
    if (options_.connected && !is_connected(g)) continue;
    if (options_.iso_dedup && !is_canonical(g)) continue;
    return g;
  }
  return std::nullopt;
}

std::vector<Graph> enumerate_graphs(int n, EnumerateOptions options) {
  GraphEnumerator it(n, options);
  std::vector<Graph> out;
  while (auto g = it.next()) out.push_back(std::move(*g));
  return out;
}

std::vector<Graph> labeled_trees(int n) {
  if (n < 1) throw InputError("trees need at least one vertex");
  if (n <= 2) return {tree_from_prufer(n, {})};
  if (n > 9) throw RangeError("exhaustive tree enumeration supports n <= 9");
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 1);
  std::vector<Graph> out;
  while (true) {
    out.push_back(tree_from_prufer(n, seq));
    std::size_t k = seq.size();
    while (k > 0 && seq[k - 1] == n) seq[--k] = 1;
    if (k == 0) break;
    ++seq[k - 1];
  }
  return out;
}

Graph random_tree(int n, std::mt19937_64& rng) {
  if (n <= 2) return tree_from_prufer(n, {});
  std::uniform_int_distribution<int> pick(1, n);
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (int& s : seq) s = pick(rng);
  return tree_from_prufer(n, seq);
}

Graph random_graph(int n, std::mt19937_64& rng) {
  const int pairs = pair_count(n);
  check_mask_order(n);
  const std::uint64_t mask = pairs == 0 ? 0 : rng() >> (64 - pairs);
  return graph_from_mask(n, mask);
}

namespace {

std::string rooted_code(const Graph& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : t.neighbors(v)) {
    if (w != parent) kids.push_back(rooted_code(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string code = "(";
  for (const std::string& k : kids) code += k;
  return code + ")";
}

}  // namespace

std::vector<RootedTree> rooted_tree_shapes(int max_order) {
  std::vector<RootedTree> out;
  for (int k = 1; k <= max_order; ++k) {
    std::map<std::string, bool> seen;
    for (const Graph& t : labeled_trees(k)) {
      for (int root = 1; root <= k; ++root) {
        if (seen.emplace(rooted_code(t, root, 0), true).second) out.push_back({t, root});
      }
    }
  }
  return out;
}

}  // namespace billiards
