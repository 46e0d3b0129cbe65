#include "billiards/graph6.hpp"

#include <vector>

#include "billiards/errors.hpp"

namespace billiards {

namespace {

constexpr int kBias = 63;
constexpr int kMaxSmallOrder = 62;

std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw InputError("graph6: empty input");
  for (char ch : text) {
    const int c = static_cast<unsigned char>(ch);
    if (c < kBias || c > 126) throw InputError("graph6: byte " + std::to_string(c) + " outside 63..126");
  }
  const int n = static_cast<unsigned char>(text[0]) - kBias;
  if (n > kMaxSmallOrder) throw InputError("graph6: extended size headers (n > 62) are not supported");
  if (n == 0) throw InputError("graph6: graphs need at least one vertex");
  const std::size_t bits = pair_count(n);
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != bytes + 1) {
    throw InputError("graph6: expected " + std::to_string(bytes + 1) + " bytes for n=" + std::to_string(n) +
                     ", got " + std::to_string(text.size()));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int b = 2; b <= n; ++b) {
    for (int a = 1; a < b; ++a, ++k) {
      const int value = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
      if ((value >> (5 - k % 6)) & 1) edges.emplace_back(a, b);
    }
  }
  for (; k < bytes * 6; ++k) {
    const int value = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
    if ((value >> (5 - k % 6)) & 1) throw InputError("graph6: nonzero padding bits");
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxSmallOrder) throw RangeError("graph6: only n <= 62 can be encoded");
  const std::size_t bits = pair_count(n);
  std::string out(1 + (bits + 5) / 6, static_cast<char>(kBias));
  out[0] = static_cast<char>(kBias + n);
  std::size_t k = 0;
  for (int b = 2; b <= n; ++b) {
    for (int a = 1; a < b; ++a, ++k) {
      if (g.adjacent(a, b)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
    }
  }
  return out;
}

}  // namespace billiards
