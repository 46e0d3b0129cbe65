#pragma once

#include <string>
#include <string_view>

#include "billiards/graph.hpp"

namespace billiards {

// Textual graph descriptions:
//
//   spec     := "edges:" INT ";" pairlist | "g6:" GRAPH6 | family
//   pairlist := pair ("," pair)* | ""     pair := INT "-" INT ["!"]
//   family   := "complete:" INT | "cycle:" INT | "path:" INT | "empty:" INT
//             | "star:" INT | "kbip:" INT "," INT | "tree:" INT [";" INT ("," INT)*]
//             | "compl:" spec "@" INT
//             | "wedge:" spec "@" INT "+" spec "@" INT
//             | "union:" spec "+" spec
//
// A trailing "!" marks a reflection edge. Throws InputError with the byte
// offset of the first problem.
MaterializedGraph parse_graph_spec(std::string_view text);

// Canonical "edges:" form; parse_graph_spec(format_graph_spec(g)) == g.
std::string format_graph_spec(const MaterializedGraph& g);

}  // namespace billiards
