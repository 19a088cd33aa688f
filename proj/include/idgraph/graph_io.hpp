#pragma once

#include <iosfwd>
#include <string>

#include "idgraph/graph.hpp"

namespace idg {

// Standard graph6 encoding (column-wise upper triangle, 6 bits per byte,
// offset 63). Writer supports n <= 126; reader accepts an optional
// ">>graph6<<" header and enforces zero padding bits.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// Plain text edge list: first line "n m", then m lines "u v", 0-indexed.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::istream& in);
Graph from_edge_list(const std::string& text);

}  // namespace idg
