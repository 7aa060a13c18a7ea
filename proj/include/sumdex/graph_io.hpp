#pragma once

#include "sumdex/graph.hpp"

#include <string>
#include <string_view>

namespace sumdex {

// graph6: size header (1 byte for n <= 62, '~' + 3 bytes up to 258047, '~~' + 6 bytes
// beyond), then the upper triangle column by column, (0,1),(0,2),(1,2),(0,3),...,
// packed 6 bits per byte with 63 added.
std::string encode_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" prefix and trailing whitespace. Throws ParseError
// with the offending byte offset.
Graph decode_graph6(std::string_view text);

// Edge list: a "n=<k>" header line, then one "u v" pair per line. Blank lines and
// '#' comments are ignored.
std::string encode_edge_list(const Graph& g);
Graph decode_edge_list(std::string_view text);

// Sniffs the format: text whose first non-blank line starts with "n=" is an edge list.
Graph decode_graph_text(std::string_view text);

}  // namespace sumdex
