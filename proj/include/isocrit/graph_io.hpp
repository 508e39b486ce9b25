#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "isocrit/graph.hpp"

namespace isocrit {

/// graph6 text encoding: header byte(s) carrying n, then the upper triangle
/// of the adjacency matrix in column-major order packed into 6-bit groups,
/// each offset by 63. Graphs up to n = 258047 are supported (one-byte header
/// for n <= 62, '~' plus three bytes above that).
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

/// Whitespace edge-list format: first line "n m", then m lines "u v" with
/// 0-indexed endpoints.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace isocrit
