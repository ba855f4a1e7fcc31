#pragma once

#include <string>

#include "distspec/graph.hpp"

namespace distspec {

// graph6 text codec, single-byte size variant (n <= 62).
//
// Layout: byte 0 is n+63; then ceil(n(n-1)/2 / 6) bytes, each 63 + a 6-bit
// group, MSB first, covering the upper triangle in column-major order
// x(0,1), x(0,2), x(1,2), x(0,3), ... Padding bits in the final byte must
// be zero; all payload bytes lie in [63, 126].
//
// parse_graph6 strips an optional ">>graph6<<" prefix. Parse errors name the
// 0-based byte offset within the (stripped) string.
Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);

}  // namespace distspec
