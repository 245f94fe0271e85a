#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "commgraph/graph.hpp"

namespace commgraph {

// Edge list: a header line "n m", then one "u v" line per edge with u < v,
// 0-based, sorted by (u, v).
void write_edge_list(std::ostream& out, const UndirectedGraph& g);
UndirectedGraph read_edge_list(std::istream& in);

// One-line packed ASCII form. The vertex count is written as in graph6
// (one byte n+63 for n <= 62, '~' plus three 6-bit bytes up to 258047,
// "~~" plus six bytes beyond). Then the upper triangle is read ROW-major,
// (0,1), (0,2), ..., (0,n-1), (1,2), ..., packed six bits per byte, most
// significant bit first, zero padded, each byte offset by 63.
std::string to_packed(const UndirectedGraph& g);
UndirectedGraph from_packed(std::string_view text);

}  // namespace commgraph
