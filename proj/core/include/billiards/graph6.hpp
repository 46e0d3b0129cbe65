#pragma once

#include <string>
#include <string_view>

#include "billiards/graph.hpp"

namespace billiards {

// graph6 with the single-byte size header only (1 <= n <= 62). The upper
// triangle is read column by column: (1,2), (1,3), (2,3), (1,4), ...
// Throws InputError on any malformed input, including extended headers.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace billiards
